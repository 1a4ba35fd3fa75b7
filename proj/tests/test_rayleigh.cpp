#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmm/detrep.hpp"

using namespace pmm;

namespace {

const FieldId Q = FieldId::rationals();
const FieldId Qi = FieldId::gaussian();

// irreducible f with irreducible partials whose Rayleigh differences are Hermitian squares
std::optional<Poly> assumption_instance(int n, std::mt19937_64& rng) {
    ScalarMatrix A = random_hermitian(Qi, n, rng, 2);
    Poly f = charpoly(A);
    if (ma_irreducible_factorization(f).factors.size() != 1) return std::nullopt;
    if (!detail::partials_irreducible(f)) return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto [gij, gji] = delta_from_minors(A, i, j);
            if (gji != gij.conj()) return std::nullopt;
        }
    return f;
}

}  // namespace

TEST(Minors, CoefficientsOfCharpolyAreThePrincipalMinors) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        FieldId id = t % 4 == 3 ? Qi : Q;
        ScalarMatrix A = random_matrix(id, n, rng, 4, 3);
        MinorVector a = principal_minors(A);
        for (std::uint64_t s = 0; s < a.values.size(); ++s) EXPECT_EQ(a[s], oracle::principal_minor(A, s, id));
        Poly f = charpoly(A);
        EXPECT_EQ(poly_to_minors(f), a);
        EXPECT_EQ(minors_to_poly(a), f);
        auto pt = oracle::random_point(id, n, rng);
        EXPECT_EQ(evaluate(f, pt), oracle::charpoly_at(A, pt, id));
    }
}

TEST(Minors, VectorPolynomialRoundTrip) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        MinorVector a = random_minor_vector(Q, 1 + static_cast<int>(rng() % 5), rng);
        EXPECT_EQ(poly_to_minors(minors_to_poly(a)), a);
        EXPECT_EQ(coefficient_vector(minors_to_poly(a)), a);
    }
    EXPECT_EQ(MinorVector(2, Q).at({}), FieldValue::one(Q));
    EXPECT_THROW(poly_to_minors(parse_poly("2*x1*x2 + 1", Q)), DomainError);
}

TEST(Rayleigh, DeltaViaSlicesAndDefinition) {
    Poly f = parse_poly("x1*x2*x3 + x1 + x2 + x3 + 1", FieldId::prime(2));
    EXPECT_EQ(delta(f, 0, 1), parse_poly("x3^2 + x3 + 1", FieldId::prime(2), 3));
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        Poly g = random_multiaffine(Q, 4, rng);
        EXPECT_EQ(delta(g, 0, 2), delta(g, 2, 0));
        EXPECT_LE(delta(g, 1, 3).degree(1), 0);
        EXPECT_LE(delta(g, 1, 3).degree(3), 0);
    }
}

TEST(Rayleigh, DodgsonIdentityInThreeConfigurations) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 40; ++t) {
        int n = 4 + static_cast<int>(rng() % 2);
        PolyMatrix M = diag_plus(random_matrix(Q, n, rng, 4, 2));
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        int i = std::min(p[0], p[1]), j = std::max(p[0], p[1]);
        int l = std::max(p[2], p[3]), k = std::min(p[2], p[3]);
        auto same = dodgson_sides(M, i, j, i, j);
        EXPECT_EQ(same.first, same.second);
        auto shared = dodgson_sides(M, i, j, std::min(i, l), std::max(i, l));
        EXPECT_EQ(shared.first, shared.second);
        auto disjoint = dodgson_sides(M, i, j, k, l);
        EXPECT_EQ(disjoint.first, disjoint.second);
    }
}

TEST(Rayleigh, RayleighDifferenceOfCharpolyFactorsThroughMinors) {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 30; ++t) {
        int n = 3 + static_cast<int>(rng() % 3);
        ScalarMatrix A = random_matrix(Q, n, rng);
        auto [gij, gji] = delta_from_minors(A, 0, n - 1);
        EXPECT_EQ(gij * gji, delta(charpoly(A), 0, n - 1));
        EXPECT_TRUE(gij.is_multiaffine());
        EXPECT_EQ(gij.degree(0), 0);
        EXPECT_EQ(gij.degree(n - 1), 0);
    }
}

TEST(Rayleigh, ResultantMatchesClassicalForDegreeOne) {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_multiaffine(Q, 4, rng);
        Poly g = random_multiaffine(Q, 4, rng);
        if (f.degree(2) != 1 || g.degree(2) != 1) continue;
        EXPECT_EQ(res_k(g, f, 2), phi(g, f, 2));
    }
}

TEST(Rayleigh, ResultantPropertiesUnderTheAssumptions) {
    std::mt19937_64 rng(47);
    int tested = 0;
    for (int t = 0; t < 300 && tested < 12; ++t) {
        int n = 4;
        auto fo = assumption_instance(n, rng);
        if (!fo) continue;
        const Poly& f = *fo;
        ++tested;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                // (1)
                EXPECT_EQ(phi(derivative(f, i), f, j), delta(f, i, j));
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    // (2)
                    EXPECT_EQ(phi(delta(f, i, k), f, j), delta(f, i, j) * delta(f, j, k));
                }
                Poly g = random_multiaffine(Qi, n, rng, 3, true) + Poly::variable(Qi, n, i) * Poly::variable(Qi, n, j);
                Poly h = random_multiaffine(Qi, n, rng, 3, true) + Poly::variable(Qi, n, j);
                Poly c = specialize(g, j, FieldValue::zero(Qi));
                // (3)
                EXPECT_EQ(phi(c * h, f, j), c * phi(h, f, j));
                // (4)
                if (g.degree(j) > 0 && h.degree(j) > 0) EXPECT_EQ(phi(g * h, f, j), phi(g, f, j) * phi(h, f, j));
                // (5)
                if (g.degree(i) == 1 && g.degree(j) == 1 && !divides(derivative(f, j), derivative(g, j)))
                    EXPECT_EQ(phi(phi(g, f, i), f, j), delta(f, i, j) * phi(g, f, j));
                // (6)
                if (g.degree(j) == 1) EXPECT_TRUE(divides(f, phi(g, f, j) - derivative(f, j) * g));
            }
    }
    EXPECT_GE(tested, 10);
}
