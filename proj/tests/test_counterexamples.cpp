#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmm/counterexamples.hpp"

using namespace pmm;

namespace {

const FieldId Q = FieldId::rationals();

}  // namespace

TEST(Counterexamples, FamilyPolynomialForFiveVariables) {
    // x1(x3x4+1)(x5x2+1) + (x2x3+1)(x4x5+1)
    EXPECT_EQ(family_poly(2), parse_poly("x1*(x3*x4+1)*(x5*x2+1) + (x2*x3+1)*(x4*x5+1)", Q));
    EXPECT_TRUE(family_poly(3).is_multiaffine());
    EXPECT_THROW(family_poly(1), DomainError);
}

TEST(Counterexamples, RayleighDifferenceIsTheCycleProduct) {
    for (int n = 2; n <= 4; ++n) {
        auto fi = family(n);
        EXPECT_EQ(delta(fi.f, 0, 1), family_delta12_formula(n));
        EXPECT_EQ(fi.delta12.product(Q, 2 * n + 1), delta(fi.f, 0, 1));
        // one linear factor and 2n-2 quadratic factors
        EXPECT_EQ(fi.delta12.factors.size(), static_cast<std::size_t>(2 * n - 1));
    }
}

TEST(Counterexamples, SpecializationMatricesAtManyPoints) {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 2 * n + 1; ++m) {
            for (long k = 1; k <= 2 * n + 3; ++k) {
                FieldValue t(Q, mpq_class(k, 3));
                ScalarMatrix A = m == 1 ? x1_specialization_matrix(n, t) : xm_specialization_matrix(n, m, t);
                Poly g = specialized_family(n, m, t, m == 1 ? FieldValue::one(Q) + t : t);
                // compare with a permutation-expansion oracle at a random point
                std::mt19937_64 rng(static_cast<std::uint64_t>(100 * n + 10 * m + k));
                auto pt = oracle::random_point(Q, 2 * n, rng);
                EXPECT_EQ(evaluate(g, pt), oracle::charpoly_at(A, pt, Q)) << "n=" << n << " m=" << m << " t=" << t.to_string();
            }
        }
    }
}

TEST(Counterexamples, PolesAreRejected) {
    EXPECT_THROW(x1_specialization_matrix(2, FieldValue(Q, -1)), DomainError);
    EXPECT_THROW(xm_specialization_matrix(2, 3, FieldValue(Q, 0)), DomainError);
    EXPECT_THROW(xm_specialization_matrix(2, 7, FieldValue(Q, 1)), DomainError);
}

TEST(Counterexamples, FiveAndSevenVariableFamiliesVerify) {
    for (int n = 2; n <= 3; ++n) {
        auto rep = verify_family(n);
        EXPECT_TRUE(rep.refuted) << n;
        EXPECT_TRUE(rep.delta12_matches_cycle);
        EXPECT_EQ(rep.specializations.size(), static_cast<std::size_t>(2 * n + 1));
        for (const auto& s : rep.specializations) EXPECT_EQ(s.verified, 2 * n + 3) << "m=" << s.m;
        EXPECT_TRUE(rep.all_ok());
    }
}

TEST(Counterexamples, BoundIsEnforced) { EXPECT_THROW(verify_family(5, 4), BoundExceeded); }
