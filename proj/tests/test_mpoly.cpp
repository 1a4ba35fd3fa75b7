#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmm/mpoly.hpp"

using namespace pmm;

namespace {

const FieldId Q = FieldId::rationals();
const FieldId Qi = FieldId::gaussian();

}  // namespace

TEST(Mpoly, EvaluationIsARingHomomorphism) {
    std::mt19937_64 rng(21);
    for (const auto& id : {Q, Qi, FieldId::prime(5), FieldId::f4()}) {
        for (int t = 0; t < 60; ++t) {
            Poly f = random_poly(id, 3, 2, 6, rng), g = random_poly(id, 3, 2, 6, rng);
            auto pt = oracle::random_point(id, 3, rng);
            EXPECT_EQ(evaluate(f * g, pt), evaluate(f, pt) * evaluate(g, pt));
            EXPECT_EQ(evaluate(f + g, pt), evaluate(f, pt) + evaluate(g, pt));
            EXPECT_EQ(evaluate(f - g, pt), evaluate(f, pt) - evaluate(g, pt));
            EXPECT_EQ(evaluate(pow(f, 3), pt), evaluate(f, pt) * evaluate(f, pt) * evaluate(f, pt));
        }
    }
}

TEST(Mpoly, ParsePrintRoundTrip) {
    std::mt19937_64 rng(22);
    for (const auto& id : {Q, Qi, FieldId::prime(7), FieldId::f4(), FieldId::prime_ext(7, 3)}) {
        for (int t = 0; t < 60; ++t) {
            Poly f = random_poly(id, 4, 2, 5, rng);
            EXPECT_EQ(parse_poly(f.to_string(), id, 4), f) << id.name() << ": " << f.to_string();
        }
    }
}

TEST(Mpoly, ParserGrammar) {
    Poly a = parse_poly("(x1*x2+1)*(x1+x3)", Q);
    Poly b = parse_poly("x1^2*x2 + x1*x2*x3 + x1 + x3", Q);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.nvars(), 3);
    EXPECT_EQ(parse_poly("x2", Q, 5).nvars(), 5);
    EXPECT_EQ(parse_poly("-3/2*x1 - x1", Q), parse_poly("-5/2*x1", Q));
    EXPECT_EQ(parse_poly("i*x1 + (1-i)", Qi).coefficient({1}), FieldValue::gaussian(0, 1));
    EXPECT_EQ(parse_poly("x1 + a", FieldId::f4()).constant_term(), FieldValue::generator(FieldId::f4()));
}

TEST(Mpoly, MalformedPolynomialsNameTheProduction) {
    auto production = [](const char* text) {
        try {
            parse_poly(text, Q);
        } catch (const ParseError& e) {
            return e.production();
        }
        return std::string("none");
    };
    EXPECT_EQ(production("x1 +"), "term");
    EXPECT_EQ(production("x"), "var");
    EXPECT_EQ(production("(x1 + x2"), "atom");
    EXPECT_EQ(production("x1 x2"), "expr");
    EXPECT_EQ(production("x1^"), "factor");
    EXPECT_EQ(production("x0"), "var");
}

TEST(Mpoly, DerivativeObeysLeibniz) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        Poly f = random_poly(Q, 3, 3, 5, rng), g = random_poly(Q, 3, 3, 5, rng);
        for (int k = 0; k < 3; ++k) EXPECT_EQ(derivative(f * g, k), derivative(f, k) * g + f * derivative(g, k));
    }
}

TEST(Mpoly, ExactDivisionAndGcd) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 60; ++t) {
        Poly f = random_multiaffine(Q, 4, rng), g = random_multiaffine(Q, 4, rng), h = random_multiaffine(Q, 4, rng);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        auto q = divide_exact(f * g, g);
        ASSERT_TRUE(q);
        EXPECT_EQ(*q, f);
        Poly d = gcd(f * g, f * h);
        EXPECT_TRUE(divides(d, f * g));
        EXPECT_TRUE(divides(d, f * h));
        EXPECT_TRUE(divides(f, d)) << f.to_string() << " / " << d.to_string();
        EXPECT_TRUE(d.leading_coefficient().is_one());
    }
    Poly x1 = parse_poly("x1", Q, 2), x2 = parse_poly("x2", Q, 2);
    EXPECT_FALSE(divide_exact(x1 + x2, x1));
    EXPECT_THROW(divide_or_throw(x1 + x2, x1, "test"), Error);
}

TEST(Mpoly, SpecializationAndSlices) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_multiaffine(Q, 4, rng);
        FieldValue zero = FieldValue::zero(Q);
        // f = x_k ∂_k f + f|_{x_k=0}
        for (int k = 0; k < 4; ++k) EXPECT_EQ(f, Poly::variable(Q, 4, k) * derivative(f, k) + specialize(f, k, zero));
        // slice(f, S, T) = ∂_S f |_{x_T = 0}
        Poly s = specialize(derivative(derivative(f, 0), 2), 1, zero);
        EXPECT_EQ(slice(f, 0b101, 0b010), s);
    }
}

TEST(Mpoly, HomogenizationRoundTrip) {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_poly(Q, 3, 2, 6, rng);
        Poly F = multihomogenize(f, {2, 2, 2});
        EXPECT_EQ(dehomogenize(F, 3), f);
        for (const auto& [e, c] : F.terms())
            for (int k = 0; k < 3; ++k) EXPECT_EQ(e[k] + e[3 + k], 2);
    }
    EXPECT_THROW(multihomogenize(parse_poly("x1^2", Q), {1}), DomainError);
}

TEST(Mpoly, ConjugationAndFieldChange) {
    Poly f = parse_poly("(1+2*i)*x1 + i", Qi);
    EXPECT_EQ(f.conj(), parse_poly("(1-2*i)*x1 - i", Qi));
    EXPECT_FALSE(f.in_fixed_field());
    Poly g = parse_poly("x1*x2 - 3", Q);
    EXPECT_EQ(restrict_field(change_field(g, Qi)), g);
    EXPECT_THROW(g + parse_poly("x1", FieldId::prime(3)), FieldMismatch);
}

TEST(Mpoly, RemapVariables) {
    Poly f = parse_poly("x1*x2 + x3", Q);
    EXPECT_EQ(remap_vars(f, 3, {2, 0, 1}), parse_poly("x3*x1 + x2", Q));
    EXPECT_EQ(remap_vars(f, 4, {0, 1, 3}), parse_poly("x1*x2 + x4", Q));
}
