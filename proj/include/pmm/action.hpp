#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace pmm {

struct SL2 {
    FieldValue a, b, c, d;

    static SL2 identity(const FieldId& id) {
        return {FieldValue::one(id), FieldValue::zero(id), FieldValue::zero(id), FieldValue::one(id)};
    }
    static SL2 translation(const FieldValue& t) {
        const FieldId& id = t.field();
        return {FieldValue::one(id), t, FieldValue::zero(id), FieldValue::one(id)};
    }
    // x ↦ −1/x
    static SL2 inversion(const FieldId& id) {
        return {FieldValue::zero(id), FieldValue::one(id), -FieldValue::one(id), FieldValue::zero(id)};
    }

    static SL2 make(const FieldValue& a, const FieldValue& b, const FieldValue& c, const FieldValue& d) {
        SL2 g{a, b, c, d};
        if (!(a * d - b * c).is_one()) throw DomainError("SL2 element must have determinant 1");
        return g;
    }

    bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

    SL2 inverse() const { return {d, -b, -c, a}; }

    friend SL2 operator*(const SL2& x, const SL2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    bool operator==(const SL2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

// An element of SL2(F)^n ⋊ S_n. perm[i] is the image of variable i; the permutation
// relabels variables first, then gammas[m] acts on variable m.
struct GroupElement {
    std::vector<int> perm;
    std::vector<SL2> gammas;

    static GroupElement identity(const FieldId& id, int n) {
        GroupElement g;
        g.perm.resize(n);
        std::iota(g.perm.begin(), g.perm.end(), 0);
        g.gammas.assign(n, SL2::identity(id));
        return g;
    }

    // a single SL2 on variable k
    static GroupElement single(const FieldId& id, int n, int k, const SL2& gamma) {
        GroupElement g = identity(id, n);
        g.gammas[k] = gamma;
        return g;
    }

    static GroupElement permutation(const FieldId& id, const std::vector<int>& perm) {
        GroupElement g = identity(id, static_cast<int>(perm.size()));
        g.perm = perm;
        g.validate();
        return g;
    }

    int size() const { return static_cast<int>(perm.size()); }

    bool has_identity_perm() const {
        for (int i = 0; i < size(); ++i)
            if (perm[i] != i) return false;
        return true;
    }

    void validate() const {
        if (perm.size() != gammas.size()) throw DomainError("group element: permutation and SL2 tuple differ in length");
        std::vector<int> seen(perm.size(), 0);
        for (int p : perm) {
            if (p < 0 || p >= size() || seen[p]++) throw DomainError("group element: perm is not a bijection");
        }
        for (const auto& g : gammas)
            if (!(g.a * g.d - g.b * g.c).is_one()) throw DomainError("group element: SL2 entry with determinant != 1");
    }
};

// act(compose(g1, g2), f) = act(g1, act(g2, f))
inline GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    if (g1.size() != g2.size()) throw DomainError("compose: size mismatch");
    int n = g1.size();
    GroupElement r;
    r.perm.resize(n);
    r.gammas = g1.gammas;
    for (int i = 0; i < n; ++i) r.perm[i] = g1.perm[g2.perm[i]];
    // moving g2's per-variable part past g1's relabeling; per variable the action is a right action
    for (int i = 0; i < n; ++i) r.gammas[g1.perm[i]] = g2.gammas[i] * g1.gammas[g1.perm[i]];
    return r;
}

inline GroupElement inverse(const GroupElement& g) {
    int n = g.size();
    GroupElement r;
    r.perm.resize(n);
    r.gammas.resize(n, g.gammas.empty() ? SL2{} : g.gammas[0]);
    for (int i = 0; i < n; ++i) r.perm[g.perm[i]] = i;
    for (int i = 0; i < n; ++i) r.gammas[i] = g.gammas[g.perm[i]].inverse();
    return r;
}

namespace detail {

// replace the pair (x_i, y_i) = (x, y) by (a x + b y, c x + d y) in a 2n-variable polynomial
inline Poly linear_pair_substitute(const Poly& F, int n, int i, const SL2& g) {
    const FieldId& id = F.field();
    int nv = F.nvars();
    Poly X = Poly::variable(id, nv, i), Y = Poly::variable(id, nv, n + i);
    Poly u = X * g.a + Y * g.b;
    Poly w = X * g.c + Y * g.d;
    std::map<std::pair<int, int>, Poly> groups;
    for (const auto& [e, c] : F.terms()) {
        Exponent ne = e;
        ne[i] = 0;
        ne[n + i] = 0;
        auto key = std::make_pair(e[i], e[n + i]);
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(key, Poly(id, nv)).first;
        it->second.add_term(ne, c);
    }
    std::vector<Poly> upow{Poly::constant(id, nv, 1)}, wpow{Poly::constant(id, nv, 1)};
    Poly r(id, nv);
    for (const auto& [key, coeff] : groups) {
        while (static_cast<int>(upow.size()) <= key.first) upow.push_back(upow.back() * u);
        while (static_cast<int>(wpow.size()) <= key.second) wpow.push_back(wpow.back() * w);
        r += coeff * upow[key.first] * wpow[key.second];
    }
    return r;
}

}  // namespace detail

inline Poly permute_poly(const Poly& f, const std::vector<int>& perm) { return remap_vars(f, f.nvars(), perm); }

// γ·f = ∏(c_i x_i + d_i)^{d_i} f((a_i x_i + b_i)/(c_i x_i + d_i)) after relabeling by perm
inline Poly act_on_poly(const GroupElement& g, const Poly& f, const std::vector<int>& degs) {
    int n = f.nvars();
    if (g.size() != n || static_cast<int>(degs.size()) != n) throw DomainError("act_on_poly: size mismatch");
    auto fd = f.degrees();
    for (int i = 0; i < n; ++i)
        if (fd[i] > degs[i]) throw DomainError("act_on_poly: degree in x" + std::to_string(i + 1) + " exceeds the declared bound");
    Poly h = g.has_identity_perm() ? f : permute_poly(f, g.perm);
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[g.perm[i]] = degs[i];
    bool trivial = true;
    for (const auto& s : g.gammas) trivial = trivial && s.is_identity();
    if (trivial) return h;
    Poly F = multihomogenize(h, d);
    for (int i = 0; i < n; ++i)
        if (!g.gammas[i].is_identity()) F = detail::linear_pair_substitute(F, n, i, g.gammas[i]);
    return dehomogenize(F, n);
}

inline Poly act_on_poly(const GroupElement& g, const Poly& f) {
    auto d = f.degrees();
    for (auto& x : d) x = std::max(x, 0);
    return act_on_poly(g, f, d);
}

// B with B_{π(i)π(j)} = A_ij
inline ScalarMatrix permute_matrix(const ScalarMatrix& a, const std::vector<int>& perm) {
    ScalarMatrix b = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) b(perm[i], perm[j]) = a(i, j);
    return b;
}

inline std::vector<int> ones_except(int n, std::uint64_t zero_mask) {
    std::vector<int> d(n, 1);
    for (int k = 0; k < n; ++k)
        if (zero_mask >> k & 1U) d[k] = 0;
    return d;
}

// (β, B) with γ·det(diag(x)+A) = β·det(diag(x)+B), via β(diag(x)+B) = (γ·f)^{2−n}(γ·G)^adj
inline std::pair<FieldValue, ScalarMatrix> act_on_matrix(const GroupElement& g, const ScalarMatrix& a) {
    int n = static_cast<int>(a.rows());
    if (!a.square() || g.size() != n) throw DomainError("act_on_matrix: size mismatch");
    g.validate();
    const FieldId id = matrix_field(a);
    ScalarMatrix ap = permute_matrix(a, g.perm);
    GroupElement gam = g;
    std::iota(gam.perm.begin(), gam.perm.end(), 0);

    PolyMatrix m = diag_plus(ap);
    Poly f = det(m);
    Poly gf = act_on_poly(gam, f, std::vector<int>(n, 1));
    FieldValue beta = gf.coefficient(Exponent(n, 1));
    if (beta.is_zero()) throw DomainError("action undefined at this matrix (coefficient of x1...xn vanishes)");

    PolyMatrix G = adjugate(m);
    PolyMatrix gG = G;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gG(i, j) = i == j ? derivative(gf, i) : act_on_poly(gam, G(i, j), ones_except(n, (std::uint64_t{1} << i) | (std::uint64_t{1} << j)));
    PolyMatrix N = adjugate(gG);
    Poly scale = n >= 2 ? pow(gf, static_cast<unsigned>(n - 2)) : Poly::constant(id, n, 1);
    FieldValue binv = beta.inverse();
    ScalarMatrix b = zero_matrix(id, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly e = n >= 2 ? divide_or_throw(N(i, j), scale, "act_on_matrix adjugate") : N(i, j) * gf;
            e *= binv;
            if (i == j) e -= Poly::variable(id, n, i);
            if (!e.is_constant()) throw InternalError("act_on_matrix: transported matrix has non-constant entries");
            b(i, j) = e.constant_term();
        }
    if (det(diag_plus(b)) * beta != gf) throw InternalError("act_on_matrix: determinant check failed");
    return {beta, b};
}

// D⁻¹AD with D = diag(λ): entries a_ij λ_j / λ_i
inline ScalarMatrix diagonal_conjugate(const ScalarMatrix& a, const std::vector<FieldValue>& lambda) {
    if (lambda.size() != a.rows()) throw DomainError("diagonal_conjugate: size mismatch");
    for (const auto& l : lambda)
        if (l.is_zero()) throw DomainError("diagonal_conjugate: zero entry in lambda");
    ScalarMatrix b = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = a(i, j) * lambda[j] / lambda[i];
    return b;
}

inline constexpr long kDefaultSl2Bound = 5;

// a, b, c uniform in [−B, B], d = (1 + bc)/a, retrying while a = 0
inline SL2 random_sl2(const FieldId& id, std::mt19937_64& rng, long bound = kDefaultSl2Bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    while (true) {
        FieldValue a(id, dist(rng)), b(id, dist(rng)), c(id, dist(rng));
        if (a.is_zero()) continue;
        FieldValue d = (FieldValue::one(id) + b * c) / a;
        return SL2{a, b, c, d};
    }
}

inline GroupElement random_group_element(const FieldId& id, int n, std::mt19937_64& rng, bool with_perm = true,
                                         long bound = kDefaultSl2Bound) {
    GroupElement g = GroupElement::identity(id, n);
    for (auto& s : g.gammas) s = random_sl2(id, rng, bound);
    if (with_perm) std::shuffle(g.perm.begin(), g.perm.end(), rng);
    return g;
}

// "perm=[2,1,3]; g1=[[a,b],[c,d]]; ..." with 1-based indices; omitted parts are identities
inline std::string to_string(const GroupElement& g) {
    std::string s = "perm=[";
    for (int i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g.perm[i] + 1);
    s += "]";
    for (int i = 0; i < g.size(); ++i) {
        const SL2& m = g.gammas[i];
        if (m.is_identity()) continue;
        s += "; g" + std::to_string(i + 1) + "=[[" + m.a.to_string() + "," + m.b.to_string() + "],[" + m.c.to_string() + "," +
             m.d.to_string() + "]]";
    }
    return s;
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// split on a separator at bracket/paren depth zero
inline std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char ch = s[k];
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(s.substr(start, k - start)));
            start = k + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

inline std::string strip_brackets(const std::string& s, const char* production) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError(production, 0, "expected [...]");
    return s.substr(1, s.size() - 2);
}

}  // namespace detail

inline GroupElement parse_group_element(std::string_view text, const FieldId& id, int n) {
    GroupElement g = GroupElement::identity(id, n);
    for (const auto& part : detail::split_top(text, ';')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("group-element", 0, "expected key=value in '" + part + "'");
        std::string key = detail::trim(part.substr(0, eq)), val = detail::trim(part.substr(eq + 1));
        if (key == "perm") {
            auto items = detail::split_top(detail::strip_brackets(val, "perm"), ',');
            if (static_cast<int>(items.size()) != n) throw ParseError("perm", 0, "permutation length differs from variable count");
            for (int i = 0; i < n; ++i) {
                int v = 0;
                try {
                    v = std::stoi(items[i]);
                } catch (const std::exception&) {
                    throw ParseError("perm", 0, "expected an integer, got '" + items[i] + "'");
                }
                g.perm[i] = v - 1;
            }
        } else if (key.size() > 1 && key[0] == 'g') {
            int k = 0;
            try {
                k = std::stoi(key.substr(1));
            } catch (const std::exception&) {
                throw ParseError("group-element", 0, "bad key '" + key + "'");
            }
            if (k < 1 || k > n) throw ParseError("group-element", 0, "index out of range in '" + key + "'");
            auto rows = detail::split_top(detail::strip_brackets(val, "sl2"), ',');
            if (rows.size() != 2) throw ParseError("sl2", 0, "expected two rows");
            auto r0 = detail::split_top(detail::strip_brackets(rows[0], "sl2"), ',');
            auto r1 = detail::split_top(detail::strip_brackets(rows[1], "sl2"), ',');
            if (r0.size() != 2 || r1.size() != 2) throw ParseError("sl2", 0, "expected 2x2 entries");
            g.gammas[k - 1] = SL2{parse_field_value(r0[0], id), parse_field_value(r0[1], id), parse_field_value(r1[0], id),
                                  parse_field_value(r1[1], id)};
        } else {
            throw ParseError("group-element", 0, "unknown key '" + key + "'");
        }
    }
    g.validate();
    return g;
}

}  // namespace pmm
