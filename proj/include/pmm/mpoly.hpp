#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exactfield.hpp"

namespace pmm {

using Exponent = std::vector<int>;

// graded lexicographic, x1 > x2 > ... ; the map's last element is the leading term
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

// Sparse polynomial over a FieldId in nvars variables x1..xn (0-based indices in the API).
class Poly {
public:
    using TermMap = std::map<Exponent, FieldValue, GrlexLess>;

    Poly() = default;
    Poly(const FieldId& id, int nvars) : id_(id), n_(nvars) {}

    static Poly constant(const FieldValue& c, int nvars) {
        Poly p(c.field(), nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }
    static Poly constant(const FieldId& id, int nvars, long long c) { return constant(FieldValue(id, c), nvars); }

    static Poly variable(const FieldId& id, int nvars, int i) {
        if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
        Exponent e(nvars, 0);
        e[i] = 1;
        Poly p(id, nvars);
        p.add_term(e, FieldValue::one(id));
        return p;
    }

    static Poly monomial(const FieldValue& c, const Exponent& e) {
        Poly p(c.field(), static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }

    const FieldId& field() const { return id_; }
    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (int e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    FieldValue coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldValue::zero(id_) : it->second;
    }

    FieldValue constant_term() const { return coefficient(Exponent(n_, 0)); }

    // -1 for the zero polynomial
    int degree(int i) const {
        if (terms_.empty()) return -1;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const auto& [e, c] : terms_)
            for (int k = 0; k < n_; ++k) d[k] = std::max(d[k], e[k]);
        return d;
    }

    // variables of positive degree
    std::vector<int> support() const {
        auto d = degrees();
        std::vector<int> s;
        for (int k = 0; k < n_; ++k)
            if (d[k] > 0) s.push_back(k);
        return s;
    }

    bool is_multiaffine() const {
        for (int d : degrees())
            if (d > 1) return false;
        return true;
    }
    bool is_multiquadratic() const {
        for (int d : degrees())
            if (d > 2) return false;
        return true;
    }

    const Exponent& leading_exponent() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const FieldValue& leading_coefficient() const {
        if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }

    void add_term(const Exponent& e, const FieldValue& c) {
        if (c.field() != id_) throw FieldMismatch("field mismatch: " + id_.name() + " vs " + c.field().name());
        if (static_cast<int>(e.size()) != n_) throw DomainError("exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r(id_, n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.id_, a.n_);
        Exponent e(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const FieldValue& s) {
        Poly r(a.id_, a.n_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
        return r;
    }
    friend Poly operator*(const FieldValue& s, const Poly& a) { return a * s; }
    Poly& operator*=(const FieldValue& s) { return *this = *this * s; }
    Poly operator/(const FieldValue& s) const { return *this * s.inverse(); }

    bool operator==(const Poly& o) const {
        check(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly conj() const {
        Poly r(id_, n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
        return r;
    }

    bool in_fixed_field() const {
        for (const auto& [e, c] : terms_)
            if (!c.in_fixed_field()) return false;
        return true;
    }

    // scaled so the leading coefficient is 1; zero stays zero
    Poly monic() const {
        if (terms_.empty()) return *this;
        return *this / leading_coefficient();
    }

    std::string to_string() const;

    // this −= c·x^shift·g, in place
    void sub_shifted(const Poly& g, const FieldValue& c, const Exponent& shift) {
        check(g);
        Exponent e(n_);
        for (const auto& [eg, cg] : g.terms_) {
            for (int k = 0; k < n_; ++k) e[k] = eg[k] + shift[k];
            FieldValue t = c * cg;
            auto [it, inserted] = terms_.try_emplace(e, t);
            if (inserted) {
                it->second = -t;
            } else {
                it->second -= t;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
    }

private:
    void check(const Poly& o) const {
        if (id_ != o.id_) throw FieldMismatch("field mismatch: " + id_.name() + " vs " + o.id_.name());
        if (n_ != o.n_) throw DomainError("polynomials in different variable counts: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    FieldId id_;
    int n_ = 0;
    TermMap terms_;
};

inline Poly pow(const Poly& f, unsigned e) {
    Poly result = Poly::constant(f.field(), f.nvars(), 1);
    Poly base = f;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

inline Poly derivative(const Poly& f, int i) {
    Poly r(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponent ne = e;
        ne[i] -= 1;
        r.add_term(ne, c * FieldValue(f.field(), e[i]));
    }
    return r;
}

inline Poly specialize(const Poly& f, int i, const FieldValue& v) {
    Poly r(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponent ne = e;
        ne[i] = 0;
        FieldValue s = c;
        for (int k = 0; k < e[i]; ++k) s *= v;
        r.add_term(ne, s);
    }
    return r;
}

// coefficient of x_i^k as a polynomial free of x_i
inline Poly coefficient_in(const Poly& f, int i, int k) {
    Poly r(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] != k) continue;
        Exponent ne = e;
        ne[i] = 0;
        r.add_term(ne, c);
    }
    return r;
}

inline std::vector<Poly> coefficients_in(const Poly& f, int i) {
    int d = std::max(f.degree(i), 0);
    std::vector<Poly> out(d + 1, Poly(f.field(), f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        Exponent ne = e;
        ne[i] = 0;
        out[e[i]].add_term(ne, c);
    }
    return out;
}

inline Poly times_var_power(const Poly& f, int i, int k) {
    Poly r(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponent ne = e;
        ne[i] += k;
        r.add_term(ne, c);
    }
    return r;
}

// x_i := g
inline Poly substitute(const Poly& f, int i, const Poly& g) {
    auto coeffs = coefficients_in(f, i);
    Poly r(f.field(), f.nvars());
    Poly gp = Poly::constant(f.field(), f.nvars(), 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) gp *= g;
        if (!coeffs[k].is_zero()) r += coeffs[k] * gp;
    }
    return r;
}

inline FieldValue evaluate(const Poly& f, const std::vector<FieldValue>& point) {
    if (static_cast<int>(point.size()) != f.nvars()) throw DomainError("evaluation point has wrong length");
    FieldValue s = FieldValue::zero(f.field());
    for (const auto& [e, c] : f.terms()) {
        FieldValue t = c;
        for (int k = 0; k < f.nvars(); ++k)
            for (int j = 0; j < e[k]; ++j) t *= point[k];
        s += t;
    }
    return s;
}

// f_S^T: differentiate along S, then set x_j = 0 for j in T (bitmasks over variable indices)
inline Poly slice(const Poly& f, std::uint64_t S, std::uint64_t T) {
    if (S & T) throw DomainError("slice: S and T overlap");
    Poly r = f;
    for (int i = 0; i < f.nvars(); ++i)
        if (S >> i & 1U) r = derivative(r, i);
    FieldValue z = FieldValue::zero(f.field());
    for (int j = 0; j < f.nvars(); ++j)
        if (T >> j & 1U) r = specialize(r, j, z);
    return r;
}

// new variable count; existing variable i moves to map[i]
inline Poly remap_vars(const Poly& f, int new_nvars, const std::vector<int>& map) {
    Poly r(f.field(), new_nvars);
    for (const auto& [e, c] : f.terms()) {
        Exponent ne(new_nvars, 0);
        for (int k = 0; k < f.nvars(); ++k) {
            if (e[k] == 0) continue;
            if (map[k] < 0 || map[k] >= new_nvars) throw DomainError("remap_vars: variable has no image");
            ne[map[k]] += e[k];
        }
        r.add_term(ne, c);
    }
    return r;
}

inline Poly extend_vars(const Poly& f, int new_nvars) {
    std::vector<int> map(f.nvars());
    for (int k = 0; k < f.nvars(); ++k) map[k] = k;
    return remap_vars(f, new_nvars, map);
}

inline Poly change_field(const Poly& f, const FieldId& target) {
    Poly r(target, f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, embed(c, target));
    return r;
}

inline Poly restrict_field(const Poly& f) {
    Poly r(f.field().fixed_field(), f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, restrict_to_fixed(c));
    return r;
}

// x_1..x_n, y_1..y_n with y_i at index n+i
inline Poly multihomogenize(const Poly& f, const std::vector<int>& d) {
    int n = f.nvars();
    if (static_cast<int>(d.size()) != n) throw DomainError("degree vector has wrong length");
    Poly r(f.field(), 2 * n);
    for (const auto& [e, c] : f.terms()) {
        Exponent ne(2 * n, 0);
        for (int k = 0; k < n; ++k) {
            if (e[k] > d[k]) throw DomainError("multihomogenize: degree in x" + std::to_string(k + 1) + " exceeds bound");
            ne[k] = e[k];
            ne[n + k] = d[k] - e[k];
        }
        r.add_term(ne, c);
    }
    return r;
}

// set variables keep..nvars-1 to 1 and drop them
inline Poly dehomogenize(const Poly& f, int keep) {
    Poly r(f.field(), keep);
    for (const auto& [e, c] : f.terms()) r.add_term(Exponent(e.begin(), e.begin() + keep), c);
    return r;
}

// total-degree homogenization with y at index n
inline Poly homogenize(const Poly& f) {
    int n = f.nvars();
    int D = std::max(f.total_degree(), 0);
    Poly r(f.field(), n + 1);
    for (const auto& [e, c] : f.terms()) {
        Exponent ne(e);
        int s = 0;
        for (int x : e) s += x;
        ne.push_back(D - s);
        r.add_term(ne, c);
    }
    return r;
}

// ------------------------------------------------------------ division, gcd

inline bool exponent_divides(const Exponent& a, const Exponent& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

// q with f = q·g, or nullopt when g does not divide f
inline std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    if (f.is_zero()) return Poly(f.field(), f.nvars());
    if (g.is_constant()) return f / g.leading_coefficient();
    auto df = f.degrees(), dg = g.degrees();
    for (int k = 0; k < f.nvars(); ++k)
        if (dg[k] > df[k]) return std::nullopt;
    const Exponent& lg = g.leading_exponent();
    FieldValue lc_inv = g.leading_coefficient().inverse();
    Poly q(f.field(), f.nvars());
    Poly r = f;
    Exponent te(f.nvars());
    while (!r.is_zero()) {
        const Exponent& lr = r.leading_exponent();
        if (!exponent_divides(lg, lr)) return std::nullopt;
        for (int k = 0; k < f.nvars(); ++k) te[k] = lr[k] - lg[k];
        FieldValue c = r.leading_coefficient() * lc_inv;
        q.add_term(te, c);
        r.sub_shifted(g, c, te);
    }
    return q;
}

inline bool divides(const Poly& g, const Poly& f) { return divide_exact(f, g).has_value(); }

inline Poly divide_or_throw(const Poly& f, const Poly& g, const char* what) {
    auto q = divide_exact(f, g);
    if (!q) throw InternalError(std::string("inexact division: ") + what);
    return *q;
}

Poly gcd(const Poly& f, const Poly& g);

namespace detail {

inline Poly content_in(const Poly& f, int v) {
    Poly c(f.field(), f.nvars());
    for (const auto& k : coefficients_in(f, v)) {
        if (k.is_zero()) continue;
        c = c.is_zero() ? k.monic() : gcd(c, k);
        if (c.is_constant()) return c;
    }
    return c;
}

inline Poly primitive_in(const Poly& f, int v) {
    if (f.is_zero()) return f;
    return divide_or_throw(f, content_in(f, v), "primitive part");
}

// lc(b)^k · a reduced modulo b as polynomials in x_v
inline Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
    int db = b.degree(v);
    Poly lb = coefficient_in(b, v, db);
    Poly r = a;
    while (!r.is_zero() && r.degree(v) >= db) {
        int dr = r.degree(v);
        Poly lr = coefficient_in(r, v, dr);
        r = lb * r - times_var_power(lr * b, v, dr - db);
    }
    return r;
}

}  // namespace detail

// monic gcd via content/primitive-part recursion and primitive PRS
inline Poly gcd(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw FieldMismatch("gcd: field mismatch");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    Poly one = Poly::constant(f.field(), f.nvars(), 1);
    if (f.is_constant() || g.is_constant()) return one;
    if (f.size() <= g.size() ? divides(f, g) : false) return f.monic();
    if (g.size() <= f.size() ? divides(g, f) : false) return g.monic();
    auto df = f.degrees(), dg = g.degrees();
    int v = -1;
    for (int k = 0; k < f.nvars() && v < 0; ++k)
        if (df[k] > 0 || dg[k] > 0) v = k;
    if (df[v] == 0) return gcd(f, detail::content_in(g, v));
    if (dg[v] == 0) return gcd(detail::content_in(f, v), g);
    Poly cf = detail::content_in(f, v), cg = detail::content_in(g, v);
    Poly c = gcd(cf, cg);
    Poly a = divide_or_throw(f, cf, "gcd content").monic(), b = divide_or_throw(g, cg, "gcd content").monic();
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    Poly res = one;
    while (true) {
        Poly r = detail::pseudo_remainder(a, b, v);
        if (r.is_zero()) {
            res = detail::primitive_in(b, v);
            break;
        }
        if (r.degree(v) == 0) break;
        a = std::move(b);
        b = detail::primitive_in(r, v).monic();
    }
    return (c * res).monic();
}

// ------------------------------------------------------------------- text

namespace detail {

inline std::string monomial_string(const Exponent& e) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(k + 1);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

// coefficients printed with a separable sign when they are plain rationals
inline bool negative_rational(const FieldValue& c) {
    if (c.field().is_finite()) return false;
    return sgn(c.im()) == 0 && sgn(c.re()) < 0;
}

}  // namespace detail

inline std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = detail::negative_rational(c);
        FieldValue a = neg ? -c : c;
        std::string mono = detail::monomial_string(e);
        std::string body;
        if (mono.empty())
            body = a.to_string();
        else if (a.is_one())
            body = mono;
        else
            body = a.to_string() + "*" + mono;
        if (first)
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const FieldId& id) : c_{text, 0, 0}, id_(id) {}

    Poly parse(int min_nvars) {
        n_ = std::max(min_nvars, scan_max_var());
        Poly p = expr();
        if (!c_.at_end()) c_.fail("expr", "expected '+' or '-'");
        return p;
    }

private:
    // largest k with "x<k>" in the text; index errors are reported during the real parse
    int scan_max_var() const {
        int m = 0;
        const auto& s = c_.s;
        for (std::size_t k = 0; k + 1 < s.size(); ++k) {
            if (s[k] != 'x') continue;
            std::size_t e = k + 1;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            if (e == k + 1 || e - k - 1 > 6) continue;
            m = std::max(m, std::stoi(std::string(s.substr(k + 1, e - k - 1))));
        }
        return m;
    }

    Poly expr() {
        Poly acc(id_, n_);
        bool first = true;
        while (true) {
            char ch = c_.peek();
            int sign = 1;
            if (ch == '+' || ch == '-') {
                sign = ch == '-' ? -1 : 1;
                ++c_.pos;
            } else if (!first) {
                break;
            }
            Poly t = term();
            if (sign < 0) acc -= t; else acc += t;
            first = false;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (c_.peek() == '*') {
            ++c_.pos;
            acc *= factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (c_.peek() == '^') {
            ++c_.pos;
            int power = parse_uint("factor");
            return pow(base, static_cast<unsigned>(power));
        }
        return base;
    }

    Poly atom() {
        char ch = c_.peek();
        if (ch == 'x') {
            ++c_.pos;
            int idx = parse_uint("var");
            if (idx < 1) c_.fail("var", "variables are numbered from 1");
            return Poly::variable(id_, n_, idx - 1);
        }
        if (ch == '(') {
            ++c_.pos;
            Poly inner = expr();
            if (c_.peek() != ')') c_.fail("atom", "expected ')'");
            ++c_.pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mpq_class q;
            parse_unsigned_rational(c_, q);
            return Poly::constant(rational_in(id_, q), n_);
        }
        if (id_.has_involution() && ch == (id_.kind == FieldKind::Gaussian ? 'i' : 'a')) {
            ++c_.pos;
            return Poly::constant(FieldValue::generator(id_), n_);
        }
        c_.fail("term", "expected a coefficient, variable or '('");
    }

    int parse_uint(const char* production) {
        c_.skip_ws();
        std::size_t start = c_.pos;
        while (c_.pos < c_.s.size() && std::isdigit(static_cast<unsigned char>(c_.s[c_.pos]))) ++c_.pos;
        if (start == c_.pos) c_.fail(production, "expected an unsigned integer");
        if (c_.pos - start > 6) c_.fail(production, "integer too large");
        return std::stoi(std::string(c_.s.substr(start, c_.pos - start)));
    }

    LiteralCursor c_;
    FieldId id_;
    int n_ = 0;
};

}  // namespace detail

// nvars = max(min_nvars, largest variable index used)
inline Poly parse_poly(std::string_view text, const FieldId& id, int min_nvars = 0) {
    return detail::PolyParser(text, id).parse(min_nvars);
}

// ------------------------------------------------------------------ random

// random sparse polynomial with degrees bounded by max_deg in each variable
inline Poly random_poly(const FieldId& id, int nvars, int max_deg, int nterms, std::mt19937_64& rng, long coeff_bound = 5) {
    Poly p(id, nvars);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int t = 0; t < nterms; ++t) {
        Exponent e(nvars);
        for (auto& x : e) x = deg(rng);
        p.add_term(e, random_value(id, rng, coeff_bound));
    }
    return p;
}

// random multiaffine polynomial with every monomial present with probability 1/2 (fixed-field coefficients optional)
inline Poly random_multiaffine(const FieldId& id, int nvars, std::mt19937_64& rng, long coeff_bound = 3, bool fixed_coeffs = false) {
    Poly p(id, nvars);
    std::bernoulli_distribution keep(0.5);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nvars); ++m) {
        if (!keep(rng)) continue;
        Exponent e(nvars);
        for (int k = 0; k < nvars; ++k) e[k] = static_cast<int>(m >> k & 1U);
        p.add_term(e, fixed_coeffs ? random_fixed_value(id, rng, coeff_bound) : random_value(id, rng, coeff_bound));
    }
    return p;
}

}  // namespace pmm
