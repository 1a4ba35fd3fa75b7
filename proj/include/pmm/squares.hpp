#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "certificate.hpp"
#include "minors.hpp"
#include "rayleigh.hpp"

namespace pmm {

// a value, or the certificate explaining its absence
template <class T>
struct Certified {
    std::optional<T> value;
    Certificate certificate;

    explicit operator bool() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

struct Factorization {
    FieldValue scalar;
    std::vector<Poly> factors;

    Poly product(const FieldId& id, int nvars) const {
        Poly p = Poly::constant(scalar, nvars);
        for (const auto& f : factors) p *= f;
        (void)id;
        return p;
    }
};

// ------------------------------------------------------------ square roots

// g with g² = h, or nullopt. The leading coefficient of g is the canonical root of lc(h).
inline std::optional<Poly> poly_sqrt(const Poly& h) {
    const FieldId& id = h.field();
    int n = h.nvars();
    if (h.is_zero()) return h;
    if (id.characteristic() == 2) {
        // Frobenius: h is a square iff all exponents are even
        Poly g(id, n);
        for (const auto& [e, c] : h.terms()) {
            Exponent half(n);
            for (int k = 0; k < n; ++k) {
                if (e[k] % 2) return std::nullopt;
                half[k] = e[k] / 2;
            }
            auto r = sqrt_in_field(c);
            if (!r) return std::nullopt;
            g.add_term(half, *r);
        }
        if (g * g != h) return std::nullopt;
        return g;
    }
    const Exponent& le = h.leading_exponent();
    Exponent half(n);
    for (int k = 0; k < n; ++k) {
        if (le[k] % 2) return std::nullopt;
        half[k] = le[k] / 2;
    }
    auto r0 = sqrt_in_field(h.leading_coefficient());
    if (!r0) return std::nullopt;
    Poly lead = Poly::monomial(*r0, half);
    Poly g = lead;
    Poly rem = h - lead * lead;
    FieldValue two_lc_inv = (FieldValue(id, 2) * *r0).inverse();
    GrlexLess less;
    Exponent last = half;
    Exponent te(n);
    while (!rem.is_zero()) {
        const Exponent& lr = rem.leading_exponent();
        if (!exponent_divides(half, lr)) return std::nullopt;
        for (int k = 0; k < n; ++k) te[k] = lr[k] - half[k];
        if (!less(te, last)) return std::nullopt;
        Poly t = Poly::monomial(rem.leading_coefficient() * two_lc_inv, te);
        rem -= FieldValue(id, 2) * t * g + t * t;
        g += t;
        last = te;
    }
    return g;
}

// b² − 4ac for g = a x_k² + b x_k + c
inline Poly discr(const Poly& g, int k) {
    if (g.degree(k) > 2) throw DomainError("discr: degree in " + var_name(k) + " exceeds 2");
    Poly a = coefficient_in(g, k, 2), b = coefficient_in(g, k, 1), c = coefficient_in(g, k, 0);
    return b * b - FieldValue(g.field(), 4) * a * c;
}

// ---------------------------------------------------------------- quartics

struct QuarticCoeffs {
    std::array<FieldValue, 5> b;  // h = Σ b_j x^j

    static QuarticCoeffs from_poly(const Poly& h, int var) {
        if (h.degree(var) > 4) throw DomainError("quartic: degree exceeds 4");
        for (int k : h.support())
            if (k != var) throw DomainError("quartic: polynomial is not univariate");
        QuarticCoeffs q;
        for (int j = 0; j <= 4; ++j) q.b[j] = coefficient_in(h, var, j).constant_term();
        return q;
    }

    static QuarticCoeffs of(const FieldId& id, std::array<long long, 5> v) {
        QuarticCoeffs q;
        for (int j = 0; j < 5; ++j) q.b[j] = FieldValue(id, v[j]);
        return q;
    }
};

struct BCD {
    FieldValue B, C, D;
};

inline BCD bcd_operators(const QuarticCoeffs& h) {
    const auto& b = h.b;
    const FieldId& id = b[0].field();
    FieldValue four(id, 4), eight(id, 8), two(id, 2), sixteen(id, 16);
    BCD r;
    r.B = b[4] * b[1] * b[1] - b[3] * b[3] * b[0];
    r.C = b[1] * b[1] * b[1] - four * b[0] * b[1] * b[2] + eight * b[0] * b[0] * b[3];
    r.D = b[1] * b[1] * b[2] - four * b[0] * b[2] * b[2] + two * b[0] * b[1] * b[3] + sixteen * b[0] * b[0] * b[4];
    return r;
}

// the two remaining cubics, obtained from C and D of x⁴h(−1/x):
//   b₃³ − 4b₄b₃b₂ + 8b₄²b₁  and  b₂b₃² − 4b₂²b₄ + 2b₁b₃b₄ + 16b₀b₄²
inline std::array<FieldValue, 2> mirror_cubics(const QuarticCoeffs& h) {
    QuarticCoeffs inv;
    inv.b = {h.b[4], -h.b[3], h.b[2], -h.b[1], h.b[0]};
    BCD m = bcd_operators(inv);
    return {-m.C, m.D};
}

struct QuadraticRoot {
    FieldValue alpha, beta, delta;  // (αx² + βx + δ)² = h
};

inline std::optional<QuadraticRoot> is_square_quartic(const QuarticCoeffs& h) {
    const FieldId& id = h.b[0].field();
    if (id.characteristic() == 2) throw DomainError("is_square_quartic: characteristic 2 is not supported");
    for (const auto& c : h.b)
        if (!c.in_fixed_field()) throw DomainError("is_square_quartic: coefficients must lie in the fixed field");
    FieldValue zero = FieldValue::zero(id), two(id, 2);
    auto a = sqrt_in_fixed_field(h.b[4]);
    auto d = sqrt_in_fixed_field(h.b[0]);
    if (!a || !d) return std::nullopt;
    FieldValue alpha = *a, dlt = *d, beta = zero;
    if (!alpha.is_zero()) {
        beta = h.b[3] / (two * alpha);
        dlt = (h.b[2] - beta * beta) / (two * alpha);
    } else if (!dlt.is_zero()) {
        beta = h.b[1] / (two * dlt);
    } else {
        // h = (λx)²
        auto l = sqrt_in_fixed_field(h.b[2]);
        if (!l) return std::nullopt;
        beta = *l;
    }
    std::array<FieldValue, 5> sq = {dlt * dlt, two * beta * dlt, beta * beta + two * alpha * dlt, two * alpha * beta, alpha * alpha};
    for (int j = 0; j < 5; ++j)
        if (sq[j] != h.b[j]) return std::nullopt;
    return QuadraticRoot{alpha, beta, dlt};
}

// ------------------------------------------------------ linear factorization

// (a₂x + c₁)(a₁x + c₂) = g in x_k; nullopt when the discriminant is not a square
inline std::optional<std::pair<Poly, Poly>> factor_quadratic_linear(const Poly& g, int k) {
    const FieldId& id = g.field();
    int n = g.nvars();
    if (id.characteristic() == 2) throw DomainError("factor_quadratic_linear: characteristic 2 is not supported");
    Poly one = Poly::constant(id, n, 1);
    if (g.degree(k) > 2) throw DomainError("factor_quadratic_linear: degree exceeds 2");
    if (g.degree(k) <= 1) return std::make_pair(one, g);
    Poly a = coefficient_in(g, k, 2), b = coefficient_in(g, k, 1), c = coefficient_in(g, k, 0);
    Poly x = Poly::variable(id, n, k);
    if (c.is_zero()) return std::make_pair(x, a * x + b);
    auto q = poly_sqrt(b * b - FieldValue(id, 4) * a * c);
    if (!q) return std::nullopt;
    FieldValue half = FieldValue(id, 2).inverse();
    for (int sign : {1, -1}) {
        Poly s = sign > 0 ? *q : -*q;
        Poly h = (b - s) * half;
        if (h.is_zero()) continue;
        Poly a1 = gcd(a, h);
        auto c1 = divide_exact(h, a1);
        auto a2 = divide_exact(a, a1);
        if (!c1 || !a2) continue;
        auto c2 = divide_exact(c, *c1);
        if (!c2) continue;
        Poly p1 = *a2 * x + *c1, p2 = a1 * x + *c2;
        if (p1 * p2 == g) return std::make_pair(p1, p2);
    }
    throw InternalError("factor_quadratic_linear: re-expansion failed for both signs of the discriminant root");
}

// ---------------------------------------------------- multiaffine factoring

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline bool poly_order(const Poly& a, const Poly& b) {
    GrlexLess less;
    const Exponent& ea = a.leading_exponent();
    const Exponent& eb = b.leading_exponent();
    if (less(eb, ea)) return true;
    if (less(ea, eb)) return false;
    return a.to_string() < b.to_string();
}

}  // namespace detail

// irreducible factors of a multiaffine polynomial: connected components of the graph with an
// edge ij whenever Δ_ij(f) ≠ 0; each factor is read off by fixing the other variables' exponents
inline Factorization ma_irreducible_factorization(const Poly& f) {
    if (f.is_zero()) throw DomainError("ma_irreducible_factorization: zero polynomial");
    if (!f.is_multiaffine()) throw DomainError("ma_irreducible_factorization: polynomial is not multiaffine");
    Factorization out{f.leading_coefficient(), {}};
    if (f.is_constant()) return out;
    auto V = f.support();
    detail::UnionFind uf(f.nvars());
    for (std::size_t a = 0; a < V.size(); ++a)
        for (std::size_t b = a + 1; b < V.size(); ++b) {
            if (uf.find(V[a]) == uf.find(V[b])) continue;
            if (!delta(f, V[a], V[b]).is_zero()) uf.unite(V[a], V[b]);
        }
    const Exponent& ref = f.leading_exponent();
    std::vector<int> roots;
    for (int v : V)
        if (std::find(roots.begin(), roots.end(), uf.find(v)) == roots.end()) roots.push_back(uf.find(v));
    for (int r : roots) {
        std::vector<char> inC(f.nvars(), 0);
        for (int v : V) inC[v] = uf.find(v) == r;
        Poly p(f.field(), f.nvars());
        for (const auto& [e, c] : f.terms()) {
            bool match = true;
            for (int k = 0; k < f.nvars() && match; ++k)
                if (!inC[k] && e[k] != ref[k]) match = false;
            if (!match) continue;
            Exponent ne(f.nvars(), 0);
            for (int k = 0; k < f.nvars(); ++k)
                if (inC[k]) ne[k] = e[k];
            p.add_term(ne, c);
        }
        out.factors.push_back(p.monic());
    }
    std::sort(out.factors.begin(), out.factors.end(), detail::poly_order);
    if (out.product(f.field(), f.nvars()) != f) throw InternalError("ma_irreducible_factorization: product check failed");
    return out;
}

inline constexpr std::uint64_t kExhaustiveSearchLimit = std::uint64_t{1} << 20;

namespace detail {

// all multiaffine polynomials supported on subsets of vars, in a fixed order, calling visit until it returns true
template <class Visit>
bool enumerate_multiaffine(const FieldId& id, int nvars, const std::vector<int>& vars, Visit&& visit) {
    std::size_t nmono = std::size_t{1} << vars.size();
    auto elems = FieldValue::all_elements(id);
    long double total = 1;
    for (std::size_t m = 0; m < nmono; ++m) total *= static_cast<long double>(elems.size());
    if (total > static_cast<long double>(kExhaustiveSearchLimit))
        throw BoundExceeded("exhaustive search over " + id.name() + " in " + std::to_string(vars.size()) + " variables exceeds the limit");
    std::vector<Exponent> monos(nmono, Exponent(nvars, 0));
    for (std::size_t m = 0; m < nmono; ++m)
        for (std::size_t k = 0; k < vars.size(); ++k) monos[m][vars[k]] = static_cast<int>(m >> k & 1U);
    std::vector<std::size_t> digit(nmono, 0);
    while (true) {
        Poly p(id, nvars);
        for (std::size_t m = 0; m < nmono; ++m) p.add_term(monos[m], elems[digit[m]]);
        if (visit(p)) return true;
        std::size_t pos = 0;
        while (pos < nmono && ++digit[pos] == elems.size()) digit[pos++] = 0;
        if (pos == nmono) return false;
    }
}

inline bool ma_factor_rec(const Poly& q, Factorization& acc, Certificate& cert) {
    const FieldId& id = q.field();
    if (q.is_constant()) {
        acc.scalar *= q.constant_term();
        return true;
    }
    auto degs = q.degrees();
    int k = -1;
    for (int v = 0; v < q.nvars(); ++v) {
        if (degs[v] > 2) {
            cert = Certificate::refutation("degree of " + var_name(v) + " exceeds 2");
            cert.evidence = {q};
            return false;
        }
        if (degs[v] == 2 && k < 0) k = v;
    }
    if (k < 0) {
        auto f = ma_irreducible_factorization(q);
        acc.scalar *= f.scalar;
        for (auto& p : f.factors) acc.factors.push_back(std::move(p));
        return true;
    }
    if (id.characteristic() == 2) {
        auto V = q.support();
        std::optional<std::pair<Poly, Poly>> split;
        enumerate_multiaffine(id, q.nvars(), V, [&](const Poly& p) {
            if (p.degree(k) != 1 || !p.leading_coefficient().is_one()) return false;
            auto r = divide_exact(q, p);
            if (!r) return false;
            split = std::make_pair(p, *r);
            return true;
        });
        if (!split) {
            cert = Certificate::refutation("no multiaffine factor of positive degree in " + var_name(k) + " (exhaustive search over " +
                                           id.name() + ")");
            cert.evidence = {q};
            return false;
        }
        return ma_factor_rec(split->first, acc, cert) && ma_factor_rec(split->second, acc, cert);
    }
    auto r = factor_quadratic_linear(q, k);
    if (!r) {
        cert = Certificate::refutation("Discr_{" + var_name(k) + "}(q) is not a square");
        cert.evidence = {q, discr(q, k)};
        return false;
    }
    return ma_factor_rec(r->first, acc, cert) && ma_factor_rec(r->second, acc, cert);
}

}  // namespace detail

// product of irreducible multiaffine factors, or a refutation naming the failed condition
inline Certified<Factorization> ma_factorization(const Poly& q) {
    Certified<Factorization> out;
    if (q.is_zero()) throw DomainError("ma_factorization: zero polynomial");
    if (!q.is_multiquadratic()) {
        out.certificate = Certificate::refutation("polynomial is not multiquadratic");
        out.certificate.evidence = {q};
        return out;
    }
    Factorization acc{FieldValue::one(q.field()), {}};
    Certificate cert;
    if (!detail::ma_factor_rec(q, acc, cert)) {
        out.certificate = cert;
        return out;
    }
    // normalize: monic factors, scalar collected
    for (auto& p : acc.factors) {
        acc.scalar *= p.leading_coefficient();
        p = p.monic();
    }
    std::sort(acc.factors.begin(), acc.factors.end(), detail::poly_order);
    if (acc.product(q.field(), q.nvars()) != q) throw InternalError("ma_factorization: product check failed");
    out.certificate.kind = Certificate::Kind::MaProduct;
    out.certificate.condition = "product of multiaffine factors";
    out.certificate.witnesses = acc.factors;
    out.certificate.scalar = acc.scalar;
    out.value = std::move(acc);
    return out;
}

// ------------------------------------------------------- Hermitian squares

namespace detail {

inline Poly canonicalize_witness(const Poly& g) {
    if (g.is_zero() || g.field().kind != FieldKind::Gaussian) return g;
    return g * gaussian_canonical_unit(g.leading_coefficient());
}

// δ² = d for the quadratic extension
inline FieldValue extension_d(const FieldId& id) {
    FieldValue delta = FieldValue::generator(id);
    return delta * delta;
}

inline std::optional<Poly> hsf_rec(const Poly& q, Certificate& cert) {
    const FieldId& id = q.field();
    int n = q.nvars();
    if (q.is_zero()) return q;
    if (q.is_constant()) {
        auto g = hermitian_square_scalar(q.constant_term());
        if (!g) {
            cert = Certificate::refutation("constant " + q.constant_term().to_string() + " is not a Hermitian square (norm) in " + id.name());
            cert.value = q.constant_term();
            return std::nullopt;
        }
        return Poly::constant(*g, n);
    }
    int k = q.support().front();
    int dk = q.degree(k);
    if (dk != 2) {
        cert = Certificate::refutation(std::string("degree of ") + var_name(k) + (dk % 2 ? " is odd" : " exceeds 2"));
        cert.evidence = {q};
        return std::nullopt;
    }
    Poly a = coefficient_in(q, k, 2), b = coefficient_in(q, k, 1), c = coefficient_in(q, k, 0);
    Certificate sub;
    auto s0 = hsf_rec(a, sub);
    if (!s0) {
        cert = Certificate::refutation("leading coefficient in " + var_name(k) + " is not a Hermitian square");
        cert.evidence = {a};
        cert.children.push_back(sub);
        return std::nullopt;
    }
    Poly D = b * b - FieldValue(id, 4) * a * c;
    FieldValue d = extension_d(id);
    auto r = poly_sqrt(D / d);
    if (!r) {
        cert = Certificate::refutation("Discr_{" + var_name(k) + "}(q)/d is not a square over the fixed field");
        cert.evidence = {q, D};
        return std::nullopt;
    }
    Poly x = Poly::variable(id, n, k);
    FieldValue half = FieldValue(id, 2).inverse();
    Factorization sf = ma_irreducible_factorization(*s0);
    for (int sign : {1, -1}) {
        Poly u = (b + (sign > 0 ? *r : -*r) * FieldValue::generator(id)) * half;
        Poly s = Poly::constant(sf.scalar, n);
        Poly rest = u;
        bool ok = true;
        for (const auto& p : sf.factors) {
            Poly pc = p.conj();
            if (auto t = divide_exact(rest, pc)) {
                s *= p;
                rest = *t;
            } else if (auto t2 = divide_exact(rest, p)) {
                s *= pc;
                rest = *t2;
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        auto t = divide_exact(u, s.conj());
        if (!t) continue;
        Poly g = s * x + *t;
        if (g * g.conj() == q) return g;
    }
    cert = Certificate::refutation("no conjugate split of the middle coefficient in " + var_name(k));
    cert.evidence = {q};
    return std::nullopt;
}

inline std::optional<Poly> hsf_exhaustive(const Poly& q, Certificate& cert) {
    if (q.is_zero()) return q;
    auto degs = q.degrees();
    std::vector<int> V;
    for (int k = 0; k < q.nvars(); ++k) {
        if (degs[k] == 0) continue;
        if (degs[k] != 2) {
            cert = Certificate::refutation("degree of " + var_name(k) + " is not 0 or 2");
            cert.evidence = {q};
            return std::nullopt;
        }
        V.push_back(k);
    }
    std::optional<Poly> found;
    enumerate_multiaffine(q.field(), q.nvars(), V, [&](const Poly& g) {
        if (g * g.conj() != q) return false;
        found = g;
        return true;
    });
    if (!found) {
        cert = Certificate::refutation("no g with g*conj(g) = q (exhaustive search over " + q.field().name() + ")");
        cert.evidence = {q};
    }
    return found;
}

}  // namespace detail

// g over K with g·conj(g) = q for q over the fixed field; with a trivial involution this is a square root
inline Certified<Poly> hermitian_square_factor(const Poly& q) {
    if (!q.in_fixed_field()) throw DomainError("hermitian_square_factor: coefficients must lie in the fixed field");
    if (!q.is_multiquadratic()) throw DomainError("hermitian_square_factor: polynomial is not multiquadratic");
    const FieldId& id = q.field();
    Certified<Poly> out;
    std::optional<Poly> g;
    Certificate cert;
    if (!id.has_involution()) {
        g = poly_sqrt(q);
        if (!g) {
            cert = Certificate::refutation("polynomial is not a square in " + id.name());
            cert.evidence = {q};
        }
    } else if (id.characteristic() == 2) {
        g = detail::hsf_exhaustive(q, cert);
    } else {
        g = detail::hsf_rec(q, cert);
    }
    if (!g) {
        out.certificate = cert;
        return out;
    }
    Poly w = detail::canonicalize_witness(*g);
    if (w * w.conj() != q) throw InternalError("hermitian_square_factor: witness does not verify");
    out.certificate.kind = Certificate::Kind::HermitianSquare;
    out.certificate.condition = "q = g*conj(g)";
    out.certificate.witnesses = {w};
    out.value = std::move(w);
    return out;
}

// ----------------------------------------------------------- hyperdeterminant

// both displayed forms of Cayley's 2×2×2 hyperdeterminant on a_S, S ⊆ {1,2,3}
inline FieldValue hyperdet_factored(const MinorVector& a) {
    auto A = [&](std::initializer_list<int> s) { return a.at(s); };
    FieldValue four(a.field, 4);
    FieldValue t = A({1}) * A({2, 3}) + A({2}) * A({1, 3}) - A({3}) * A({1, 2}) - A({}) * A({1, 2, 3});
    return t * t - four * (A({1}) * A({2}) - A({}) * A({1, 2})) * (A({1, 3}) * A({2, 3}) - A({3}) * A({1, 2, 3}));
}

inline FieldValue hyperdet_expanded(const MinorVector& a) {
    auto A = [&](std::initializer_list<int> s) { return a.at(s); };
    FieldValue two(a.field, 2), four(a.field, 4);
    FieldValue e0 = A({}), e1 = A({1}), e2 = A({2}), e3 = A({3}), e12 = A({1, 2}), e13 = A({1, 3}), e23 = A({2, 3}),
               e123 = A({1, 2, 3});
    return e0 * e0 * e123 * e123 + e1 * e1 * e23 * e23 + e2 * e2 * e13 * e13 + e3 * e3 * e12 * e12 -
           two * e0 * e1 * e23 * e123 - two * e0 * e2 * e13 * e123 - two * e0 * e3 * e12 * e123 - two * e1 * e2 * e13 * e23 -
           two * e1 * e3 * e12 * e23 - two * e2 * e3 * e12 * e13 + four * e0 * e23 * e13 * e12 + four * e123 * e1 * e2 * e3;
}

// uses a_S for S ⊆ {1,2,3}; n ≥ 3
inline FieldValue hyperdet_leading(const MinorVector& a) {
    if (a.n < 3) throw DomainError("hyperdet: needs n >= 3");
    FieldValue f = hyperdet_factored(a), e = hyperdet_expanded(a);
    if (f != e) throw InternalError("hyperdet: the two displayed forms disagree");
    return f;
}

inline FieldValue hyperdet(const MinorVector& a) {
    if (a.n != 3) throw DomainError("hyperdet: needs n = 3");
    return hyperdet_leading(a);
}

// a_1 a_2 − a_∅ a_12
inline FieldValue pair_condition(const MinorVector& a) {
    if (a.n < 2) throw DomainError("pair condition needs n >= 2");
    return a.at({1}) * a.at({2}) - a.at({}) * a.at({1, 2});
}

// ------------------------------------------------------- equation family

// one specialization point: Discr_{x_i}(Δ_kl f) as a quartic in x_j, other variables set to lambda
struct FamilyPoint {
    int k = 0, l = 0, i = 0, j = 0;
    std::vector<int> rest;            // remaining variables, increasing
    std::vector<FieldValue> lambda;   // their values
};

inline const char* kFamilyOperatorNames[5] = {"B", "C", "D", "Bmirror", "Dmirror"};

inline std::string lambda_text(const std::vector<FieldValue>& lambda) {
    std::string s = "(";
    for (std::size_t t = 0; t < lambda.size(); ++t) s += (t ? "," : "") + lambda[t].to_string();
    return s + ")";
}

inline std::string family_equation_name(const FamilyPoint& p, int op) {
    static const char* ops[5] = {"B", "C", "D", "M1", "M2"};
    return std::string(ops[op]) + "_{" + var_name(p.j) + "}(Discr_{" + var_name(p.i) + "}(Delta_{" + std::to_string(p.k + 1) +
           std::to_string(p.l + 1) + "})) at lambda=" + lambda_text(p.lambda);
}

inline std::vector<FieldValue> default_lambda_set(const FieldId& id) {
    std::vector<FieldValue> I;
    FieldId f = id.fixed_field();
    for (int t = 0; t < 13; ++t) I.push_back(embed(FieldValue(f, t), id));
    return I;
}

// every point of the degree-12 family: 5 equations each
inline std::vector<FamilyPoint> certificate_family(int n, const std::vector<FieldValue>& I) {
    if (n < 3) throw DomainError("certificate_family: needs n >= 3");
    if (I.size() < 13) throw DomainError("certificate_family: the point set I needs 13 elements");
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = a + 1; b < I.size(); ++b)
            if (I[a] == I[b]) throw DomainError("certificate_family: points of I must be distinct");
    std::vector<FamilyPoint> out;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j || i == k || i == l || j == k || j == l) continue;
                    std::vector<int> rest;
                    for (int v = 0; v < n; ++v)
                        if (v != k && v != l && v != i && v != j) rest.push_back(v);
                    std::vector<std::size_t> idx(rest.size(), 0);
                    while (true) {
                        FamilyPoint p{k, l, i, j, rest, {}};
                        for (std::size_t t = 0; t < rest.size(); ++t) p.lambda.push_back(I[idx[t]]);
                        out.push_back(std::move(p));
                        std::size_t pos = 0;
                        while (pos < idx.size() && ++idx[pos] == 13) idx[pos++] = 0;
                        if (pos == idx.size()) break;
                    }
                }
    return out;
}

// the five values B, C, D and the two mirrors at one family point, for multiaffine f
inline std::array<FieldValue, 5> evaluate_family_point(const Poly& f, const FamilyPoint& p) {
    Poly d = discr(delta(f, p.k, p.l), p.i);
    for (std::size_t t = 0; t < p.rest.size(); ++t) d = specialize(d, p.rest[t], p.lambda[t]);
    QuarticCoeffs q = QuarticCoeffs::from_poly(d, p.j);
    BCD v = bcd_operators(q);
    auto m = mirror_cubics(q);
    return {v.B, v.C, v.D, m[0], m[1]};
}

}  // namespace pmm
