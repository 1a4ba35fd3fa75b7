#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmm/squares.hpp"

using namespace pmm;

namespace {

const FieldId Q = FieldId::rationals();
const FieldId Qi = FieldId::gaussian();

QuarticCoeffs squared(const FieldValue& a, const FieldValue& b, const FieldValue& d) {
    Poly g = Poly::constant(a, 1) * pow(Poly::variable(a.field(), 1, 0), 2) + Poly::constant(b, 1) * Poly::variable(a.field(), 1, 0) +
             Poly::constant(d, 1);
    return QuarticCoeffs::from_poly(g * g, 0);
}

}  // namespace

TEST(Squares, CubicOperatorsVanishOnSquaredQuadratics) {
    std::mt19937_64 rng(51);
    for (const auto& id : {Q, FieldId::prime(7), FieldId::prime(13)}) {
        for (int t = 0; t < 150; ++t) {
            QuarticCoeffs h = squared(random_value(id, rng, 9, 5), random_value(id, rng, 9, 5), random_value(id, rng, 9, 5));
            BCD v = bcd_operators(h);
            auto m = mirror_cubics(h);
            EXPECT_TRUE(v.B.is_zero() && v.C.is_zero() && v.D.is_zero() && m[0].is_zero() && m[1].is_zero());
            auto r = is_square_quartic(h);
            ASSERT_TRUE(r);
            EXPECT_EQ(squared(r->alpha, r->beta, r->delta).b, h.b);
        }
    }
}

TEST(Squares, NonSquaresAreRejected) {
    QuarticCoeffs h = QuarticCoeffs::of(Q, {1, 0, 0, 0, 1});
    BCD v = bcd_operators(h);
    EXPECT_TRUE(v.B.is_zero());
    EXPECT_TRUE(v.C.is_zero());
    EXPECT_EQ(v.D, FieldValue(Q, 16));
    EXPECT_FALSE(is_square_quartic(h));
    // x^4 + 2x^2 + 2 has square end coefficients and is not a square
    EXPECT_FALSE(is_square_quartic(QuarticCoeffs::of(Q, {4, 0, 2, 0, 1})));
    // a square over Q(i) of a non-real quadratic is reported outside the fixed field
    EXPECT_THROW(is_square_quartic(QuarticCoeffs::from_poly(parse_poly("x1^2 + i", Qi) * parse_poly("x1^2 + i", Qi), 0)), DomainError);
}

TEST(Squares, PolynomialSquareRoot) {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 60; ++t) {
        Poly g = random_poly(Q, 3, 2, 4, rng);
        if (g.is_zero()) continue;
        auto r = poly_sqrt(g * g);
        ASSERT_TRUE(r);
        EXPECT_EQ(*r * *r, g * g);
        EXPECT_GT(r->leading_coefficient().sign(), 0);
    }
    EXPECT_FALSE(poly_sqrt(parse_poly("x1^2 + 1", Q)));
    EXPECT_FALSE(poly_sqrt(parse_poly("2*x1^2", Q)));
}

TEST(Squares, MultiaffineFactorizationRecoversDisjointProducts) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        // x1,x2 | x3,x4 | x5 blocks, each factor with a chosen variable pair
        Poly p = random_multiaffine(Q, 5, rng) , q = random_multiaffine(Q, 5, rng);
        Poly a = slice(p, 0, 0b11100) + Poly::variable(Q, 5, 0) * Poly::variable(Q, 5, 2);
        Poly b = slice(q, 0, 0b00011) + Poly::variable(Q, 5, 2) * Poly::variable(Q, 5, 4);
        Poly prod = a * b;
        if (prod.is_zero()) continue;
        auto f = ma_factorization(prod);
        ASSERT_TRUE(f) << prod.to_string() << "\n" << to_text(f.certificate);
        EXPECT_EQ(f->product(Q, 5), prod);
        for (const auto& g : f->factors) EXPECT_TRUE(g.is_multiaffine());
    }
}

TEST(Squares, MultiaffineFactorizationRefutations) {
    auto r = ma_factorization(parse_poly("x1^2 + 1", Q));
    EXPECT_FALSE(r);
    EXPECT_TRUE(r.certificate.is_refutation());
    EXPECT_FALSE(ma_factorization(parse_poly("x1^3", Q)));
    // over F2 the exhaustive search certifies the irreducible quadratic
    auto f2 = ma_factorization(parse_poly("x3^2 + x3 + 1", FieldId::prime(2)));
    EXPECT_FALSE(f2);
    EXPECT_NE(f2.certificate.condition.find("exhaustive"), std::string::npos);
    // and over F4 it splits
    auto f4 = ma_factorization(parse_poly("x3^2 + x3 + 1", FieldId::f4()));
    ASSERT_TRUE(f4);
    EXPECT_EQ(f4->factors.size(), 2u);
}

TEST(Squares, IrreducibleFactorizationOfMultiaffinePolynomials) {
    Poly f = parse_poly("(x1*x2 + 3)*(x3 + x4 - x3*x4)*(2*x5 + 1)", Q);
    auto F = ma_irreducible_factorization(f);
    EXPECT_EQ(F.factors.size(), 3u);
    EXPECT_EQ(F.product(Q, 5), f);
    for (const auto& p : F.factors) EXPECT_TRUE(p.leading_coefficient().is_one());
    EXPECT_EQ(F.scalar, f.leading_coefficient());
}

TEST(Squares, HermitianSquareFactor) {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 60; ++t) {
        Poly g = random_multiaffine(Qi, 3, rng, 3);
        if (g.is_zero()) continue;
        Poly q = g * g.conj();
        auto r = hermitian_square_factor(q);
        ASSERT_TRUE(r) << q.to_string() << "\n" << to_text(r.certificate);
        EXPECT_EQ(*r * r->conj(), q);
    }
    // x^2 + 1 = (x+i)(x-i); 3(x^2+1) is not a norm times a norm
    EXPECT_TRUE(hermitian_square_factor(parse_poly("x1^2 + 1", Qi)));
    EXPECT_FALSE(hermitian_square_factor(parse_poly("3*x1^2 + 3", Qi)));
    EXPECT_FALSE(hermitian_square_factor(parse_poly("x1^2 - 1", Qi)));
    // over F4 / F2
    auto w = hermitian_square_factor(parse_poly("x3^2 + x3 + 1", FieldId::f4()));
    ASSERT_TRUE(w);
    EXPECT_EQ(*w * w->conj(), parse_poly("x3^2 + x3 + 1", FieldId::f4()));
}

TEST(Squares, HyperdeterminantFormsAgree) {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 200; ++t) {
        MinorVector a = random_minor_vector(Q, 3, rng, 6);
        EXPECT_EQ(hyperdet_factored(a), hyperdet_expanded(a));
    }
}

TEST(Squares, HyperdeterminantOnSymmetricAndHermitianMatrices) {
    std::mt19937_64 rng(56);
    for (int t = 0; t < 100; ++t) {
        ScalarMatrix S = random_matrix(Q, 3, rng, 5, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < i; ++j) S(i, j) = S(j, i);
        EXPECT_TRUE(hyperdet(principal_minors(S)).is_zero());
        ScalarMatrix H = random_hermitian(Qi, 3, rng, 4, 3);
        FieldValue c = H(0, 1) * H(1, 2) * H(2, 0);
        FieldValue im = c - c.conj();
        EXPECT_EQ(hyperdet(principal_minors(H)), im * im);
        EXPECT_LE(hyperdet(principal_minors(H)).sign(), 0);
    }
}

TEST(Squares, EquationFamilyShape) {
    auto I = default_lambda_set(Q);
    EXPECT_EQ(certificate_family(4, I).size(), 6u * 2);
    EXPECT_EQ(certificate_family(5, I).size(), 10u * 6 * 13);
    EXPECT_THROW(certificate_family(4, std::vector<FieldValue>(13, FieldValue(Q, 1))), DomainError);
    auto p = certificate_family(4, I).front();
    EXPECT_NE(family_equation_name(p, 0).find("Discr_"), std::string::npos);
}
