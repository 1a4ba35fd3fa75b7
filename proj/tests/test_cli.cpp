#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "pmm/cli.hpp"

using namespace pmm;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(PMM_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kHermitian = "x1*x2*x3*x4 - x1*x2 - x1*x3 - x1*x4 - x2*x3 - x2*x4 - x3*x4 + 1";

}  // namespace

TEST(Cli, MinorsOfTwoByTwo) {
    auto r = run({"minors", "[[1,2],[3,4]]"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["minors"].dump(), R"({"0":"1","1":"1","2":"4","3":"-2"})");
    EXPECT_EQ(r.out, golden("minors_2x2.json"));
}

TEST(Cli, CharpolyAndDelta) {
    auto r = run({"charpoly", "[[1,2],[3,4]]"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_poly(r.out, FieldId::rationals()), parse_poly("x1*x2 + 4*x1 + x2 - 2", FieldId::rationals()));
    auto d = run({"delta", "x1*x2*x3 + x1 + x2 + x3 + 1", "-i", "1", "-j", "2", "--field", "F2"});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(parse_poly(d.out, FieldId::prime(2)), parse_poly("x3^2 + x3 + 1", FieldId::prime(2)));
}

TEST(Cli, HermitianDetrepGolden) {
    auto r = run({"detrep", kHermitian, "--hermitian"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, golden("hermitian4_detrep.json"));
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["field"], "Qi");
    EXPECT_TRUE(j["hermitian"].get<bool>());
    ScalarMatrix A = matrix_from_json(j["entries"], FieldId::gaussian());
    EXPECT_EQ(charpoly(A), parse_poly(kHermitian, FieldId::gaussian()));
}

TEST(Cli, FiveVariableRefutationGolden) {
    auto r = run({"check-image", std::string(PMM_GOLDEN_DIR) + "/five_variable_minors.json"});
    EXPECT_EQ(r.code, 1) << r.err;
    EXPECT_EQ(r.out, golden("five_variable_check.json"));
    auto j = Json::parse(r.out);
    EXPECT_FALSE(j["member"].get<bool>());
    std::string text = r.out;
    for (const char* factor : {"x1*x5 + x1 + x5", "x2*x4 + x2 + x4", "x4*x5 + x4 + x5"}) EXPECT_NE(text.find(factor), std::string::npos);
}

TEST(Cli, CheckImageMembersAndFields) {
    auto r = run({"check-image", R"({"n":2,"minors":{"0":"1","1":"1","2":"4","3":"-2"}})"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(Json::parse(r.out)["member"].get<bool>());
    auto h = run({"check-image", R"({"n":2,"minors":{"0":"1","1":"0","2":"0","3":"-3"}})", "--hermitian"});
    EXPECT_EQ(h.code, 1);
    auto k = run({"check-image", R"({"n":2,"minors":{"0":"1","1":"0","2":"0","3":"-5"}})", "--hermitian", "--field", "Qi"});
    EXPECT_EQ(k.code, 0) << k.err;
    auto f2 = run({"check-image", "x1*x2*x3 + x1 + x2 + x3 + 1", "--field", "F2"});
    EXPECT_EQ(f2.code, 1);
    auto f4 = run({"check-image", "x1*x2*x3 + x1 + x2 + x3 + 1", "--field", "F2", "--hermitian"});
    EXPECT_EQ(f4.code, 0);
    EXPECT_EQ(Json::parse(f4.out)["witness"]["field"], "F4");
}

TEST(Cli, ExitTwoOnMalformedInputNamesTheProduction) {
    auto a = run({"charpoly", "[[1,2],[3]]"});
    EXPECT_EQ(a.code, 2);
    EXPECT_NE(a.err.find("matrix"), std::string::npos);
    auto b = run({"delta", "x1 + * x2"});
    EXPECT_EQ(b.code, 2);
    EXPECT_NE(b.err.find("parse error in term"), std::string::npos);
    auto c = run({"check-image", "{\"minors\": "});
    EXPECT_EQ(c.code, 2);
    EXPECT_NE(c.err.find("json"), std::string::npos);
    auto d = run({"minors", "[[1,\"1/\"],[0,1]]"});
    EXPECT_EQ(d.code, 2);
    auto e = run({"minors", "[[1]]", "--field", "R"});
    EXPECT_EQ(e.code, 2);
    EXPECT_NE(e.err.find("field"), std::string::npos);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ExitTwoOnBoundExceeded) {
    auto r = run({"counterexample", "--n", "5", "--bound", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("bound"), std::string::npos);
}

TEST(Cli, SameSeedSameBytes) {
    std::vector<std::string> args = {"certify", R"({"n":3,"field":"Qi","minors":{"0":"1","1":"1","2":"2","3":"1","4":"0","5":"-1","6":"-2","7":"-4"}})",
                                     "--samples", "8", "--seed", "5"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    auto h1 = run({"detrep", kHermitian, "--hermitian", "--seed", "3"});
    auto h2 = run({"detrep", kHermitian, "--hermitian", "--seed", "3"});
    EXPECT_EQ(h1.out, h2.out);
}

TEST(Cli, HyperdetAndCertify) {
    // symmetric matrix: hyperdeterminant vanishes
    auto r = run({"hyperdet", "[[1,2,3],[2,5,7],[3,7,-1]]"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "0\n");
    auto c = run({"certify", R"m([[1,"(1+i)",2],["(1-i)",0,"i"],[2,"(-i)",3]])m", "--field", "Qi", "--mode", "real", "--samples", "5"});
    EXPECT_EQ(c.code, 0) << c.out << c.err;
    auto bad = run({"certify", R"({"n":2,"minors":{"0":"1","1":"1","2":"1","3":"5"}})", "--mode", "real"});
    EXPECT_EQ(bad.code, 1);
}

TEST(Cli, FactorHermitian) {
    auto r = run({"factor-hermitian", "x1^2 + 1"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_TRUE(j["factorable"].get<bool>());
    Poly g = parse_poly(j["g"].get<std::string>(), FieldId::gaussian());
    EXPECT_EQ(g * g.conj(), parse_poly("x1^2 + 1", FieldId::gaussian()));
    EXPECT_EQ(run({"factor-hermitian", "3*x1^2 + 3"}).code, 1);
}

TEST(Cli, ActOnPolynomialAndMatrix) {
    auto p = run({"act", "perm=[2,1]", "x1 + 2*x2"});
    ASSERT_EQ(p.code, 0) << p.err;
    EXPECT_EQ(parse_poly(p.out, FieldId::rationals()), parse_poly("x2 + 2*x1", FieldId::rationals()));
    auto m = run({"act", "perm=[1,2]; g1=[[0,1],[-1,0]]", "[[1,2],[3,4]]"});
    ASSERT_EQ(m.code, 0) << m.err;
    auto j = Json::parse(m.out);
    FieldId Q = FieldId::rationals();
    FieldValue beta = parse_field_value(j["beta"].get<std::string>(), Q);
    ScalarMatrix B = matrix_from_json(j["matrix"], Q);
    GroupElement g = parse_group_element("g1=[[0,1],[-1,0]]", Q, 2);
    Poly gf = act_on_poly(g, charpoly(oracle::matrix(Q, {{"1", "2"}, {"3", "4"}})), {1, 1});
    std::mt19937_64 rng(3);
    auto pt = oracle::random_point(Q, 2, rng);
    EXPECT_EQ(beta * oracle::charpoly_at(B, pt, Q), evaluate(gf, pt));
}

TEST(Cli, CounterexampleReport) {
    auto r = run({"counterexample", "--n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_FALSE(j["member"].get<bool>());
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["specializations"].size(), 5u);
    auto t = run({"counterexample", "--n", "2", "--format", "text"});
    EXPECT_NE(t.out.find("family verified"), std::string::npos);
}

TEST(Cli, DefaultFieldFromEnvironment) {
    ::setenv("PMM_FIELD", "F5", 1);
    auto r = run({"charpoly", "[[1,2],[3,4]]"});
    ::unsetenv("PMM_FIELD");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_poly(r.out, FieldId::prime(5)), parse_poly("x1*x2 + 4*x1 + x2 + 3", FieldId::prime(5)));
}

TEST(Cli, InputFromFile) {
    std::string path = ::testing::TempDir() + "/pmm_matrix.json";
    std::ofstream(path) << "[[0, 1], [1, 0]]\n";
    auto r = run({"charpoly", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_poly(r.out, FieldId::rationals()), parse_poly("x1*x2 - 1", FieldId::rationals()));
}
