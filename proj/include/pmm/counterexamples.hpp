#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detrep.hpp"

namespace pmm {

struct FamilyInstance {
    int n = 0;
    Poly f;
    Factorization delta12;
};

inline constexpr int kDefaultFamilyBound = 4;

// x1·∏(x_{2j+1}x_{2j+2} + 1) + ∏(x_{2j}x_{2j+1} + 1), j = 1..n, with x_{2n+2} = x2
inline Poly family_poly(int n, const FieldId& id = FieldId::rationals()) {
    if (n < 2) throw DomainError("family: n must be at least 2");
    int nv = 2 * n + 1;
    auto x = [&](int label) { return Poly::variable(id, nv, label == 2 * n + 2 ? 1 : label - 1); };
    Poly one = Poly::constant(id, nv, 1);
    Poly p1 = one, p2 = one;
    for (int j = 1; j <= n; ++j) {
        p1 *= x(2 * j + 1) * x(2 * j + 2) + one;
        p2 *= x(2 * j) * x(2 * j + 1) + one;
    }
    return x(1) * p1 + p2;
}

inline FamilyInstance family(int n, const FieldId& id = FieldId::rationals()) {
    FamilyInstance fi;
    fi.n = n;
    fi.f = family_poly(n, id);
    Exponent top(2 * n + 1, 1);
    if (!fi.f.coefficient(top).is_one()) throw InternalError("family: coefficient of x1...xn is not 1");
    auto F = ma_factorization(delta(fi.f, 0, 1));
    if (!F) throw InternalError("family: Delta_12 does not factor");
    fi.delta12 = *F;
    return fi;
}

// (x3 − x_{2n+1})·∏_{i=3}^{2n}(x_i x_{i+1} + 1)
inline Poly family_delta12_formula(int n, const FieldId& id = FieldId::rationals()) {
    int nv = 2 * n + 1;
    auto x = [&](int label) { return Poly::variable(id, nv, label - 1); };
    Poly one = Poly::constant(id, nv, 1);
    Poly d = x(3) - x(2 * n + 1);
    for (int i = 3; i <= 2 * n; ++i) d *= x(i) * x(i + 1) + one;
    return d;
}

// rows and columns labelled 2..2n+1, with x1 := t
inline ScalarMatrix x1_specialization_matrix(int n, const FieldValue& t) {
    if (n < 2) throw DomainError("x1_specialization_matrix: n must be at least 2");
    const FieldId& id = t.field();
    FieldValue one = FieldValue::one(id);
    if ((t + one).is_zero()) throw DomainError("x1_specialization_matrix: t = -1 is a pole");
    FieldValue inv = (one + t).inverse();
    int N = 2 * n;
    ScalarMatrix A = zero_matrix(id, N);
    for (int i = 2; i <= 2 * n + 1; ++i)
        for (int j = 2; j <= 2 * n + 1; ++j) {
            FieldValue v = FieldValue::zero(id);
            if (i % 2 == 1 && j % 2 == 0) v = i > j ? inv : -t * inv;
            else if (i % 2 == 0 && j == i + 1) v = -one;
            else if (i % 2 == 0 && j == i - 1) v = one;
            if (i == 2 && j == 2 * n + 1) v = -t;
            A(i - 2, j - 2) = v;
        }
    return A;
}

namespace detail {

// rows and columns labelled 1..2n, with x_{2n+1} := t
inline ScalarMatrix last_variable_specialization(int n, const FieldValue& t) {
    const FieldId& id = t.field();
    FieldValue one = FieldValue::one(id);
    int N = 2 * n;
    ScalarMatrix B = zero_matrix(id, N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            FieldValue v = FieldValue::zero(id);
            if ((j == i + 1 && i > 1) || (i == 1 && j == 1) || (i == 2 && j == 1)) v = one;
            else if ((i % 2 == 0 && j == i - 1) || (i == N && j == 1)) v = -one;
            else if (i % 2 == 1 && i >= 3 && j == 1) v = t;
            else if ((i == 1 || i == 2) && j % 2 == 0) v = t.inverse();
            else if (i % 2 == 1 && i >= 3 && j % 2 == 0 && j > i) v = one;
            B(i - 1, j - 1) = v;
        }
    return B;
}

// σ (0-based, σ[k] = image of variable k) in the dihedral group on the cycle x2..x_{2n+1},
// with f∘σ = f and σ(x_{2n+1}) = x_m
inline std::vector<int> family_symmetry(int n, int m, const Poly& f) {
    int L = 2 * n;
    int nv = 2 * n + 1;
    for (int refl = 0; refl < 2; ++refl)
        for (int s = 0; s < L; ++s) {
            std::vector<int> sigma(nv);
            sigma[0] = 0;
            for (int p = 0; p < L; ++p) {
                int q = refl ? ((s - p) % L + L) % L : (p + s) % L;
                sigma[p + 1] = q + 1;
            }
            if (sigma[nv - 1] != m - 1) continue;
            // (f∘σ)(x) = f(x_{σ(1)}, ...): variable k of f becomes variable σ(k)
            if (remap_vars(f, nv, sigma) == f) return sigma;
        }
    throw InternalError("family_symmetry: no dihedral symmetry moves x" + std::to_string(m) + " to x" + std::to_string(nv));
}

}  // namespace detail

// rows and columns labelled by the variables other than x_m, in increasing order
inline ScalarMatrix xm_specialization_matrix(int n, int m, const FieldValue& t) {
    if (n < 2) throw DomainError("xm_specialization_matrix: n must be at least 2");
    if (m < 2 || m > 2 * n + 1) throw DomainError("xm_specialization_matrix: m must lie in 2..2n+1");
    if (t.is_zero()) throw DomainError("xm_specialization_matrix: t = 0 is a pole");
    ScalarMatrix B = detail::last_variable_specialization(n, t);
    if (m == 2 * n + 1) return B;
    auto sigma = detail::family_symmetry(n, m, family_poly(n, t.field()));
    // position of each variable among the remaining ones
    std::vector<int> pos(2 * n + 1, -1);
    for (int v = 0, k = 0; v < 2 * n + 1; ++v)
        if (v != m - 1) pos[v] = k++;
    ScalarMatrix C = zero_matrix(t.field(), 2 * n);
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) C(pos[sigma[a]], pos[sigma[b]]) = B(a, b);
    return C;
}

// f with x_m := t, divided by s, in the remaining variables
inline Poly specialized_family(int n, int m, const FieldValue& t, const FieldValue& s) {
    Poly f = family_poly(n, t.field());
    Poly g = specialize(f, m - 1, t) / s;
    std::vector<int> map(2 * n + 1, 0);
    for (int v = 0, k = 0; v < 2 * n + 1; ++v)
        if (v != m - 1) map[v] = k++;
    return remap_vars(g, 2 * n, map);
}

struct SpecializationCheck {
    int m = 0;
    std::vector<FieldValue> points;
    int verified = 0;
    bool ok = false;
};

struct FamilyReport {
    int n = 0;
    Poly f;
    std::vector<Poly> delta12_factors;
    bool delta12_matches_cycle = false;
    bool refuted = false;
    Certificate certificate;
    std::vector<SpecializationCheck> specializations;

    bool all_ok() const {
        if (!refuted || !delta12_matches_cycle) return false;
        for (const auto& s : specializations)
            if (!s.ok) return false;
        return true;
    }
};

// non-membership of f_{2n+1} and membership of every x_m-specialization at 2n+3 points
inline FamilyReport verify_family(int n, int bound = kDefaultFamilyBound) {
    if (n < 2) throw DomainError("verify_family: n must be at least 2");
    if (n > bound) throw BoundExceeded("verify_family: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
    const FieldId Q = FieldId::rationals();
    FamilyReport rep;
    rep.n = n;
    auto fi = family(n, Q);
    rep.f = fi.f;
    rep.delta12_factors = fi.delta12.factors;
    rep.delta12_matches_cycle = delta(fi.f, 0, 1) == family_delta12_formula(n, Q);

    auto mem = is_in_image_general(poly_to_minors(fi.f), 2 * n + 1);
    rep.refuted = !mem.value.has_value();
    rep.certificate = mem.certificate;

    FieldValue one = FieldValue::one(Q);
    for (int m = 1; m <= 2 * n + 1; ++m) {
        SpecializationCheck sc;
        sc.m = m;
        for (int k = 1; k <= 2 * n + 3; ++k) {
            FieldValue t(Q, k);
            sc.points.push_back(t);
            ScalarMatrix A = m == 1 ? x1_specialization_matrix(n, t) : xm_specialization_matrix(n, m, t);
            Poly g = specialized_family(n, m, t, m == 1 ? one + t : t);
            if (principal_minors(A) == poly_to_minors(g)) ++sc.verified;
        }
        sc.ok = sc.verified == static_cast<int>(sc.points.size());
        rep.specializations.push_back(sc);
    }
    return rep;
}

}  // namespace pmm
