#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"

namespace pmm {

namespace cli {

struct Input {
    enum class Kind { Poly, Minors, Matrix };
    Kind kind = Kind::Poly;
    std::string text;
    Json json;
};

inline std::string read_source(const std::string& arg) {
    std::error_code ec;
    if (!arg.empty() && arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

inline Input load(const std::string& arg) {
    Input in;
    in.text = detail::trim(read_source(arg));
    if (in.text.empty()) throw ParseError("input", 0, "empty input");
    char c = in.text.front();
    if (c == '{' || c == '[') {
        try {
            in.json = Json::parse(in.text);
        } catch (const Json::parse_error& e) {
            throw ParseError("json", e.byte, e.what());
        }
        in.kind = c == '{' ? Input::Kind::Minors : Input::Kind::Matrix;
    }
    return in;
}

struct Session {
    std::string field_text;
    bool field_explicit = false;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::optional<int> bound;

    FieldId field() const {
        if (field_explicit) return FieldId::parse(field_text);
        if (const char* env = std::getenv("PMM_FIELD"); env && *env) return FieldId::parse(env);
        return FieldId::rationals();
    }

    FieldId field_for(const Input& in) const {
        if (!field_explicit && in.kind == Input::Kind::Minors && in.json.contains("field") && in.json["field"].is_string())
            return FieldId::parse(in.json["field"].get<std::string>());
        return field();
    }

    bool json() const { return format == "json"; }

    ScalarMatrix matrix(const Input& in) const {
        if (in.kind != Input::Kind::Matrix) throw ParseError("matrix", 0, "expected a JSON array of rows");
        return matrix_from_json(in.json, field_for(in));
    }

    MinorVector minors(const Input& in) const {
        switch (in.kind) {
            case Input::Kind::Minors: return minors_from_json(in.json, field_for(in));
            case Input::Kind::Matrix: return principal_minors(matrix(in));
            case Input::Kind::Poly: return poly_to_minors(parse_poly(in.text, field()));
        }
        return {};
    }

    Poly poly(const Input& in) const {
        if (in.kind == Input::Kind::Poly) return parse_poly(in.text, field());
        return minors_to_poly(minors(in));
    }
};

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline std::string minors_text(const MinorVector& a) {
    std::string s;
    for (std::size_t m = 0; m < a.values.size(); ++m) {
        std::string set;
        for (int i = 0; i < a.n; ++i)
            if (m >> i & 1) set += (set.empty() ? "" : ",") + std::to_string(i + 1);
        s += "a_{" + set + "} = " + a.values[m].to_string() + "\n";
    }
    return s;
}

inline std::string report_text(const ConditionReport& r) {
    std::string s;
    for (const auto& row : r.rows) {
        s += (row.passed ? "pass  " : "FAIL  ") + row.name;
        if (row.value) s += " = " + row.value->to_string();
        if (!row.detail.empty()) s += "  [" + row.detail + "]";
        s += "\n";
    }
    s += r.all_passed() ? "all conditions hold\n" : "some condition fails\n";
    return s;
}

inline std::string family_text(const FamilyReport& r) {
    std::string s = "f_" + std::to_string(2 * r.n + 1) + " = " + r.f.to_string() + "\n";
    s += "Delta_12 factors:";
    for (const auto& p : r.delta12_factors) s += " (" + p.to_string() + ")";
    s += std::string("\nDelta_12 matches the cycle product: ") + (r.delta12_matches_cycle ? "yes" : "no") + "\n";
    s += std::string("membership: ") + (r.refuted ? "refuted" : "NOT refuted") + "\n";
    s += to_text(r.certificate);
    for (const auto& sc : r.specializations)
        s += "x" + std::to_string(sc.m) + " specialization: " + std::to_string(sc.verified) + "/" + std::to_string(sc.points.size()) +
             " points verified\n";
    s += r.all_ok() ? "family verified\n" : "family NOT verified\n";
    return s;
}

// exit 0: member / success, 1: refuted, 2: error
inline int membership_result(const Session& ses, const Certified<DetRep>& r, bool wrap, std::ostream& out) {
    if (ses.json()) {
        if (!wrap) {
            emit(out, r ? to_json(*r) : to_json(r.certificate));
        } else {
            Json j;
            j["member"] = r.value.has_value();
            if (r) j["witness"] = to_json(*r);
            else j["certificate"] = to_json(r.certificate);
            emit(out, j);
        }
    } else {
        if (r) out << "member\n" << matrix_to_string(r->A) << "\n";
        else out << "not a member\n" << to_text(r.certificate);
    }
    return r ? 0 : 1;
}

}  // namespace cli

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli;
    CLI::App app{"principal minor maps and determinantal representations", "pmm"};
    app.require_subcommand(1);
    Session ses;
    auto* field_opt = app.add_option("--field", ses.field_text, "field: Q, Qi, F4, Fp, Fp:d (default $PMM_FIELD or Q)");
    app.add_option("--format", ses.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", ses.seed, "random seed");
    app.add_option("--bound", ses.bound, "search bound");

    std::string input, group_text;
    bool hermitian = false;
    int ii = 1, jj = 2, samples = 25, fam_n = 2;
    std::string mode = "norm";

    auto sub = [&](const char* name, const char* desc) {
        auto* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };
    auto* c_minors = sub("minors", "principal minors of a matrix");
    c_minors->add_option("matrix", input)->required();
    auto* c_charpoly = sub("charpoly", "det(diag(x) + A)");
    c_charpoly->add_option("matrix", input)->required();
    auto* c_delta = sub("delta", "Rayleigh difference Delta_ij(f)");
    c_delta->add_option("poly", input)->required();
    c_delta->add_option("-i", ii, "first index (1-based)");
    c_delta->add_option("-j", jj, "second index (1-based)");
    auto* c_hsf = sub("factor-hermitian", "write q = g*conj(g)");
    c_hsf->add_option("poly", input)->required();
    auto* c_detrep = sub("detrep", "determinantal representation");
    c_detrep->add_option("input", input)->required();
    c_detrep->add_flag("--hermitian", hermitian);
    auto* c_check = sub("check-image", "membership in the image of the principal minor map");
    c_check->add_option("minors", input)->required();
    c_check->add_flag("--hermitian", hermitian);
    auto* c_hyper = sub("hyperdet", "hyperdeterminant of a 3-variable minor vector");
    c_hyper->add_option("minors", input)->required();
    auto* c_certify = sub("certify", "necessary conditions for Hermitian membership");
    c_certify->add_option("minors", input)->required();
    c_certify->add_option("--samples", samples, "number of sampled group elements");
    c_certify->add_option("--mode", mode, "norm or real")->check(CLI::IsMember({"norm", "real"}));
    auto* c_act = sub("act", "apply a group element");
    c_act->add_option("group-element", group_text)->required();
    c_act->add_option("target", input)->required();
    auto* c_family = sub("counterexample", "verify the odd-variable counterexample family");
    c_family->add_option("--n", fam_n, "family index n (2n+1 variables)")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    ses.field_explicit = field_opt->count() > 0;

    try {
        if (c_minors->parsed()) {
            auto a = principal_minors(ses.matrix(load(input)));
            if (ses.json()) emit(out, to_json(a));
            else out << minors_text(a);
            return 0;
        }
        if (c_charpoly->parsed()) {
            out << charpoly(ses.matrix(load(input))).to_string() << "\n";
            return 0;
        }
        if (c_delta->parsed()) {
            Poly f = ses.poly(load(input));
            if (ii < 1 || jj < 1 || ii > f.nvars() || jj > f.nvars() || ii == jj)
                throw DomainError("delta: need distinct indices in 1.." + std::to_string(f.nvars()));
            out << delta(f, ii - 1, jj - 1).to_string() << "\n";
            return 0;
        }
        if (c_hsf->parsed()) {
            Poly q = ses.poly(load(input));
            FieldId K = hermitian_field(q.field());
            auto r = hermitian_square_factor(q.field() == K ? q : change_field(q, K));
            if (ses.json()) {
                Json j;
                j["field"] = K.name();
                j["factorable"] = r.value.has_value();
                if (r) j["g"] = r->to_string();
                j["certificate"] = to_json(r.certificate);
                emit(out, j);
            } else {
                if (r) out << "g = " << r->to_string() << "\n";
                out << to_text(r.certificate);
            }
            return r ? 0 : 1;
        }
        if (c_detrep->parsed() || c_check->parsed()) {
            Input in = load(input);
            Certified<DetRep> r;
            if (hermitian) {
                HermitianOptions opt;
                opt.seed = ses.seed;
                if (ses.bound) opt.retry_budget = *ses.bound;
                r = in.kind == Input::Kind::Poly ? hermitian_representation(ses.poly(in), opt) : is_in_image_hermitian(ses.minors(in), opt);
            } else {
                r = is_in_image_general(ses.minors(in), ses.bound.value_or(kDefaultGeneralBound));
            }
            return membership_result(ses, r, c_check->parsed(), out);
        }
        if (c_hyper->parsed()) {
            out << hyperdet(ses.minors(load(input))).to_string() << "\n";
            return 0;
        }
        if (c_certify->parsed()) {
            auto rep = necessary_conditions_hermitian(ses.minors(load(input)), ses.seed, samples,
                                                      mode == "real" ? CheckMode::RealClosure : CheckMode::Norm);
            if (ses.json()) emit(out, to_json(rep));
            else out << report_text(rep);
            return rep.all_passed() ? 0 : 1;
        }
        if (c_act->parsed()) {
            Input in = load(input);
            if (in.kind == Input::Kind::Matrix) {
                ScalarMatrix A = ses.matrix(in);
                auto g = parse_group_element(group_text, matrix_field(A), static_cast<int>(A.rows()));
                auto [beta, B] = act_on_matrix(g, A);
                if (ses.json()) {
                    Json j;
                    j["beta"] = beta.to_string();
                    j["matrix"] = to_json(B);
                    emit(out, j);
                } else {
                    out << "beta = " << beta.to_string() << "\n" << matrix_to_string(B) << "\n";
                }
                return 0;
            }
            Poly f = ses.poly(in);
            auto g = parse_group_element(group_text, f.field(), f.nvars());
            Poly gf = act_on_poly(g, f, std::vector<int>(f.nvars(), 1));
            if (in.kind == Input::Kind::Minors && ses.json()) emit(out, to_json(coefficient_vector(gf)));
            else out << gf.to_string() << "\n";
            return 0;
        }
        if (c_family->parsed()) {
            auto rep = verify_family(fam_n, ses.bound.value_or(kDefaultFamilyBound));
            if (ses.json()) emit(out, to_json(rep));
            else out << family_text(rep);
            return rep.all_ok() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace pmm
