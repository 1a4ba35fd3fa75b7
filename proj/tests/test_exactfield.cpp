#include <gtest/gtest.h>

#include <random>

#include "pmm/exactfield.hpp"

using namespace pmm;

namespace {

std::vector<FieldId> all_fields() {
    return {FieldId::rationals(), FieldId::gaussian(), FieldId::prime(2), FieldId::prime(5), FieldId::prime(7),
            FieldId::f4(),        FieldId::prime_ext(7, 3), FieldId::prime_ext(3, 2)};
}

}  // namespace

TEST(ExactField, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(11);
    for (const auto& id : all_fields()) {
        for (int t = 0; t < 200; ++t) {
            FieldValue a = random_value(id, rng, 7, 3), b = random_value(id, rng, 7, 3), c = random_value(id, rng, 7, 3);
            EXPECT_EQ(a + b, b + a) << id.name();
            EXPECT_EQ(a * b, b * a) << id.name();
            EXPECT_EQ((a + b) + c, a + (b + c)) << id.name();
            EXPECT_EQ((a * b) * c, a * (b * c)) << id.name();
            EXPECT_EQ(a * (b + c), a * b + a * c) << id.name();
            EXPECT_TRUE((a - a).is_zero());
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one()) << id.name() << " " << a.to_string();
        }
    }
}

TEST(ExactField, InvolutionIsAFieldAutomorphismOfOrderTwo) {
    std::mt19937_64 rng(12);
    for (const auto& id : all_fields()) {
        for (int t = 0; t < 100; ++t) {
            FieldValue a = random_value(id, rng), b = random_value(id, rng);
            EXPECT_EQ(a.conj().conj(), a);
            EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
            EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
            EXPECT_TRUE((a * a.conj()).in_fixed_field());
            EXPECT_TRUE((a + a.conj()).in_fixed_field());
        }
        if (!id.has_involution()) {
            FieldValue a = random_value(id, rng);
            EXPECT_EQ(a.conj(), a);
        }
    }
}

TEST(ExactField, FiniteFieldSizesAndFrobenius) {
    EXPECT_EQ(FieldValue::all_elements(FieldId::f4()).size(), 4u);
    EXPECT_EQ(FieldValue::all_elements(FieldId::prime_ext(7, 3)).size(), 49u);
    // over F_{p^2} the involution is x -> x^p
    for (const auto& id : {FieldId::f4(), FieldId::prime_ext(7, 3), FieldId::prime_ext(3, 2)}) {
        for (const auto& a : FieldValue::all_elements(id)) {
            FieldValue fr = FieldValue::one(id);
            for (int k = 0; k < id.p; ++k) fr *= a;
            EXPECT_EQ(fr, a.conj()) << id.name() << " " << a.to_string();
        }
    }
    // F4: a^2 + a + 1 = 0 and conj(a) = 1 + a
    FieldValue a = FieldValue::generator(FieldId::f4());
    EXPECT_TRUE((a * a + a + FieldValue::one(FieldId::f4())).is_zero());
    EXPECT_EQ(a.conj(), a + FieldValue::one(FieldId::f4()));
}

TEST(ExactField, LiteralRoundTrip) {
    std::mt19937_64 rng(13);
    for (const auto& id : all_fields()) {
        for (int t = 0; t < 100; ++t) {
            FieldValue a = random_value(id, rng, 20, 7);
            EXPECT_EQ(parse_field_value(a.to_string(), id), a) << id.name() << " " << a.to_string();
        }
    }
    FieldId Qi = FieldId::gaussian();
    EXPECT_EQ(parse_field_value("(1+2*i)", Qi), FieldValue::gaussian(1, 2));
    EXPECT_EQ(parse_field_value("-3/4", FieldId::rationals()), FieldValue(FieldId::rationals(), mpq_class(-3, 4)));
    EXPECT_EQ(parse_field_value("(1+a)", FieldId::f4()), FieldValue::finite(FieldId::f4(), 1, 1));
}

TEST(ExactField, MalformedLiteralsNameTheProduction) {
    try {
        parse_field_value("1/", FieldId::rationals());
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_FALSE(e.production().empty());
    }
    EXPECT_THROW(parse_field_value("1/0", FieldId::rationals()), Error);
    EXPECT_THROW(FieldId::parse("R"), ParseError);
    EXPECT_THROW(FieldId::parse("F9"), Error);
    EXPECT_EQ(FieldId::parse("F7:3"), FieldId::prime_ext(7, 3));
}

TEST(ExactField, FieldMismatchIsReported) {
    EXPECT_THROW(FieldValue(FieldId::rationals(), 1) + FieldValue(FieldId::prime(5), 1), FieldMismatch);
}

TEST(ExactField, CanonicalSquareRoots) {
    FieldId Q = FieldId::rationals();
    auto r = sqrt_in_field(FieldValue(Q, mpq_class(9, 4)));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, FieldValue(Q, mpq_class(3, 2)));
    EXPECT_FALSE(sqrt_in_field(FieldValue(Q, 2)));
    EXPECT_FALSE(sqrt_in_field(FieldValue(Q, -4)));
    // Q(i): -4 = (2i)^2
    auto s = sqrt_in_field(FieldValue::gaussian(-4, 0));
    ASSERT_TRUE(s);
    EXPECT_EQ(*s * *s, FieldValue::gaussian(-4, 0));
    // 2i = (1+i)^2
    auto u = sqrt_in_field(FieldValue::gaussian(0, 2));
    ASSERT_TRUE(u);
    EXPECT_EQ(*u, FieldValue::gaussian(1, 1));
    // F_p: least residue
    auto v = sqrt_in_field(FieldValue(FieldId::prime(7), 2));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->u(), 3);
}

TEST(ExactField, NormEquationOverGaussianRationals) {
    FieldId Qi = FieldId::gaussian();
    auto norm_of = [&](long n, long d) { return FieldValue(Qi, mpq_class(n, d)); };
    for (auto [n, d] : std::vector<std::pair<long, long>>{{3, 1}, {7, 1}, {3, 5}, {-5, 1}, {21, 1}})
        EXPECT_FALSE(hermitian_square_scalar(norm_of(n, d))) << n << "/" << d;
    for (auto [n, d] : std::vector<std::pair<long, long>>{{5, 1}, {13, 17}, {2, 1}, {9, 1}, {65, 8}, {1, 1}}) {
        auto g = hermitian_square_scalar(norm_of(n, d));
        ASSERT_TRUE(g) << n << "/" << d;
        EXPECT_EQ(*g * g->conj(), norm_of(n, d));
    }
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; ++t) {
        FieldValue z = random_value(Qi, rng, 50, 30);
        FieldValue q = z * z.conj();
        auto g = hermitian_square_scalar(q);
        ASSERT_TRUE(g) << q.to_string();
        EXPECT_EQ(*g * g->conj(), q);
    }
}

TEST(ExactField, NormEquationOverFiniteFields) {
    // the norm F_{p^2} -> F_p is surjective
    for (const auto& id : {FieldId::f4(), FieldId::prime_ext(7, 3)}) {
        for (const auto& a : FieldValue::all_elements(id)) {
            if (!a.in_fixed_field()) continue;
            auto g = hermitian_square_scalar(a);
            ASSERT_TRUE(g) << id.name() << " " << a.to_string();
            EXPECT_EQ(*g * g->conj(), a);
        }
    }
}

TEST(ExactField, FixedFieldEmbedding) {
    FieldId K = FieldId::prime_ext(7, 3);
    FieldValue a = FieldValue::finite(K, 4);
    EXPECT_EQ(restrict_to_fixed(a), FieldValue(FieldId::prime(7), 4));
    EXPECT_EQ(embed(restrict_to_fixed(a), K), a);
    EXPECT_THROW(restrict_to_fixed(FieldValue::generator(K)), DomainError);
    EXPECT_EQ(FieldId::gaussian().fixed_field(), FieldId::rationals());
    EXPECT_EQ(FieldId::f4().fixed_field(), FieldId::prime(2));
}
