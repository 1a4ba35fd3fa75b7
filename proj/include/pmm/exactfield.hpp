#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace pmm {

enum class FieldKind { Rational, Gaussian, Prime, PrimeExt, F4 };

namespace detail {

inline bool is_small_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline int mod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

inline int mod_inverse(int a, int p) {
    // p is prime and small, so Fermat is fine
    long long result = 1, base = mod(a, p);
    int e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

inline bool is_square_mod(int a, int p) {
    a = mod(a, p);
    for (int x = 0; x < p; ++x)
        if (static_cast<long long>(x) * x % p == a) return true;
    return false;
}

}  // namespace detail

// Identifies a field K together with its involution and fixed field F.
//   Rational : K = F = Q, trivial involution
//   Gaussian : K = Q(i), F = Q
//   Prime    : K = F = F_p, trivial involution (p = 2 allowed)
//   PrimeExt : K = F_p[δ]/(δ² - d), F = F_p, p odd, d a non-square
//   F4       : K = F_2[α]/(α²+α+1), F = F_2, α ↦ 1+α
struct FieldId {
    FieldKind kind = FieldKind::Rational;
    int p = 0;
    int d = 0;

    static FieldId rationals() { return {FieldKind::Rational, 0, 0}; }
    static FieldId gaussian() { return {FieldKind::Gaussian, 0, 0}; }
    static FieldId f4() { return {FieldKind::F4, 2, 0}; }

    static FieldId prime(int p) {
        if (!detail::is_small_prime(p) || p > 97) throw DomainError("F_p requires a prime p <= 97, got " + std::to_string(p));
        return {FieldKind::Prime, p, 0};
    }

    // d = 0 picks the least non-square
    static FieldId prime_ext(int p, int d = 0) {
        if (!detail::is_small_prime(p) || p == 2 || p > 97)
            throw DomainError("F_p(delta) requires an odd prime p <= 97, got " + std::to_string(p));
        if (d == 0) {
            d = 2;
            while (detail::is_square_mod(d, p)) ++d;
        }
        d = detail::mod(d, p);
        if (detail::is_square_mod(d, p))
            throw DomainError("d = " + std::to_string(d) + " is a square mod " + std::to_string(p));
        return {FieldKind::PrimeExt, p, d};
    }

    // "Q", "Qi", "F4", "Fp", "Fp:d"
    static FieldId parse(std::string_view s) {
        if (s == "Q") return rationals();
        if (s == "Qi") return gaussian();
        if (s == "F4") return f4();
        if (s.size() >= 2 && s[0] == 'F') {
            std::string body(s.substr(1));
            auto colon = body.find(':');
            try {
                std::size_t used = 0;
                int p = std::stoi(body.substr(0, colon), &used);
                if (used != (colon == std::string::npos ? body.size() : colon)) throw std::invalid_argument("p");
                if (colon == std::string::npos) return prime(p);
                std::string ds = body.substr(colon + 1);
                int d = std::stoi(ds, &used);
                if (used != ds.size()) throw std::invalid_argument("d");
                return prime_ext(p, d);
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
        throw ParseError("field", 0, "expected Q, Qi, F4, Fp or Fp:d, got '" + std::string(s) + "'");
    }

    std::string name() const {
        switch (kind) {
            case FieldKind::Rational: return "Q";
            case FieldKind::Gaussian: return "Qi";
            case FieldKind::Prime: return "F" + std::to_string(p);
            case FieldKind::PrimeExt: return "F" + std::to_string(p) + ":" + std::to_string(d);
            case FieldKind::F4: return "F4";
        }
        return "?";
    }

    bool is_finite() const { return kind == FieldKind::Prime || kind == FieldKind::PrimeExt || kind == FieldKind::F4; }
    int characteristic() const { return is_finite() ? p : 0; }
    bool has_involution() const { return kind == FieldKind::Gaussian || kind == FieldKind::PrimeExt || kind == FieldKind::F4; }
    bool is_quadratic() const { return has_involution(); }
    std::size_t size() const {
        if (kind == FieldKind::Prime) return static_cast<std::size_t>(p);
        if (kind == FieldKind::PrimeExt) return static_cast<std::size_t>(p) * p;
        if (kind == FieldKind::F4) return 4;
        return 0;
    }

    FieldId fixed_field() const {
        switch (kind) {
            case FieldKind::Gaussian: return rationals();
            case FieldKind::PrimeExt: return {FieldKind::Prime, p, 0};
            case FieldKind::F4: return {FieldKind::Prime, 2, 0};
            default: return *this;
        }
    }

    bool operator==(const FieldId& o) const { return kind == o.kind && p == o.p && d == o.d; }
    bool operator!=(const FieldId& o) const { return !(*this == o); }
};

class FieldValue {
public:
    FieldValue() = default;

    FieldValue(const FieldId& id, long long n) : id_(id) {
        if (id.is_finite())
            u_ = detail::mod(n, id.p);
        else
            re_ = static_cast<long>(n);
    }

    FieldValue(const FieldId& id, const mpq_class& q) : id_(id) {
        if (id.is_finite()) {
            mpz_class num = q.get_num() % id.p, den = q.get_den() % id.p;
            long long nn = num.get_si(), dd = den.get_si();
            if (detail::mod(dd, id.p) == 0) throw DomainError("denominator vanishes in " + id.name());
            u_ = detail::mod(nn * detail::mod_inverse(detail::mod(dd, id.p), id.p), id.p);
        } else {
            re_ = q;
            re_.canonicalize();
        }
    }

    static FieldValue zero(const FieldId& id) { return FieldValue(id, 0); }
    static FieldValue one(const FieldId& id) { return FieldValue(id, 1); }

    static FieldValue gaussian(const mpq_class& re, const mpq_class& im) {
        FieldValue v(FieldId::gaussian(), 0);
        v.re_ = re;
        v.im_ = im;
        v.re_.canonicalize();
        v.im_.canonicalize();
        return v;
    }

    // u + v·δ (PrimeExt) or u + v·α (F4); v must be 0 for F_p
    static FieldValue finite(const FieldId& id, long long u, long long v = 0) {
        if (!id.is_finite()) throw DomainError("finite() on " + id.name());
        if (id.kind == FieldKind::Prime && detail::mod(v, id.p) != 0) throw DomainError("F_p has no second coordinate");
        FieldValue r(id, 0);
        r.u_ = detail::mod(u, id.p);
        r.v_ = detail::mod(v, id.p);
        return r;
    }

    // the generator δ, α or i
    static FieldValue generator(const FieldId& id) {
        switch (id.kind) {
            case FieldKind::Gaussian: return gaussian(0, 1);
            case FieldKind::PrimeExt:
            case FieldKind::F4: return finite(id, 0, 1);
            default: throw DomainError(id.name() + " has no generator");
        }
    }

    const FieldId& field() const { return id_; }
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    int u() const { return u_; }
    int v() const { return v_; }

    bool is_zero() const {
        if (id_.is_finite()) return u_ == 0 && v_ == 0;
        return sgn(re_) == 0 && sgn(im_) == 0;
    }
    bool is_one() const {
        if (id_.is_finite()) return u_ == 1 && v_ == 0;
        return re_ == 1 && sgn(im_) == 0;
    }

    // fixed by the involution
    bool in_fixed_field() const {
        switch (id_.kind) {
            case FieldKind::Gaussian: return sgn(im_) == 0;
            case FieldKind::PrimeExt:
            case FieldKind::F4: return v_ == 0;
            default: return true;
        }
    }

    // rational value; requires a rational element of Q or Q(i)
    mpq_class to_rational() const {
        if (id_.is_finite() || sgn(im_) != 0) throw DomainError("not a rational number: " + to_string());
        return re_;
    }

    int sign() const { return sgn(to_rational()); }

    FieldValue conj() const {
        FieldValue r = *this;
        switch (id_.kind) {
            case FieldKind::Gaussian: r.im_ = -im_; break;
            case FieldKind::PrimeExt: r.v_ = detail::mod(-v_, id_.p); break;
            case FieldKind::F4: r.u_ = (u_ + v_) % 2; break;
            default: break;
        }
        return r;
    }

    FieldValue operator-() const {
        FieldValue r = *this;
        if (id_.is_finite()) {
            r.u_ = detail::mod(-u_, id_.p);
            r.v_ = detail::mod(-v_, id_.p);
        } else {
            r.re_ = -re_;
            r.im_ = -im_;
        }
        return r;
    }

    FieldValue& operator+=(const FieldValue& o) {
        check(o);
        if (id_.is_finite()) {
            u_ = (u_ + o.u_) % id_.p;
            v_ = (v_ + o.v_) % id_.p;
        } else {
            re_ += o.re_;
            if (sgn(o.im_) != 0) im_ += o.im_;
        }
        return *this;
    }

    FieldValue& operator-=(const FieldValue& o) {
        check(o);
        if (id_.is_finite()) {
            u_ = detail::mod(u_ - o.u_, id_.p);
            v_ = detail::mod(v_ - o.v_, id_.p);
        } else {
            re_ -= o.re_;
            if (sgn(o.im_) != 0) im_ -= o.im_;
        }
        return *this;
    }

    FieldValue& operator*=(const FieldValue& o) {
        check(o);
        switch (id_.kind) {
            case FieldKind::Rational: re_ *= o.re_; break;
            case FieldKind::Gaussian: {
                if (sgn(im_) == 0 && sgn(o.im_) == 0) {
                    re_ *= o.re_;
                } else {
                    mpq_class r = re_ * o.re_ - im_ * o.im_;
                    mpq_class i = re_ * o.im_ + im_ * o.re_;
                    re_ = r;
                    im_ = i;
                }
                break;
            }
            case FieldKind::Prime: u_ = static_cast<int>(static_cast<long long>(u_) * o.u_ % id_.p); break;
            case FieldKind::PrimeExt: {
                long long p = id_.p;
                long long nu = (static_cast<long long>(u_) * o.u_ + static_cast<long long>(id_.d) * v_ % p * o.v_) % p;
                long long nv = (static_cast<long long>(u_) * o.v_ + static_cast<long long>(v_) * o.u_) % p;
                u_ = static_cast<int>(nu);
                v_ = static_cast<int>(nv);
                break;
            }
            case FieldKind::F4: {
                // α² = α + 1
                int nu = (u_ * o.u_ + v_ * o.v_) % 2;
                int nv = (u_ * o.v_ + v_ * o.u_ + v_ * o.v_) % 2;
                u_ = nu;
                v_ = nv;
                break;
            }
        }
        return *this;
    }

    FieldValue inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        switch (id_.kind) {
            case FieldKind::Rational: return FieldValue(id_, mpq_class(1) / re_);
            case FieldKind::Gaussian: {
                mpq_class n = re_ * re_ + im_ * im_;
                return gaussian(re_ / n, -im_ / n);
            }
            case FieldKind::Prime: return finite(id_, detail::mod_inverse(u_, id_.p));
            case FieldKind::PrimeExt: {
                long long p = id_.p;
                long long n = detail::mod(static_cast<long long>(u_) * u_ - static_cast<long long>(id_.d) * v_ % p * v_, id_.p);
                long long ni = detail::mod_inverse(static_cast<int>(n), id_.p);
                return finite(id_, u_ * ni % p, detail::mod(-static_cast<long long>(v_) * ni, id_.p));
            }
            case FieldKind::F4: {
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) {
                        FieldValue c = finite(id_, a, b);
                        if ((c * *this).is_one()) return c;
                    }
                break;
            }
        }
        throw InternalError("inverse not found");
    }

    FieldValue& operator/=(const FieldValue& o) {
        check(o);
        if (id_.kind == FieldKind::Rational) {
            if (sgn(o.re_) == 0) throw DomainError("division by zero");
            re_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
    friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
    friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
    friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }

    bool operator==(const FieldValue& o) const {
        check(o);
        if (id_.is_finite()) return u_ == o.u_ && v_ == o.v_;
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const FieldValue& o) const { return !(*this == o); }

    // total order used only to make searches deterministic
    int canonical_compare(const FieldValue& o) const {
        check(o);
        if (id_.is_finite()) {
            if (v_ != o.v_) return v_ < o.v_ ? -1 : 1;
            if (u_ != o.u_) return u_ < o.u_ ? -1 : 1;
            return 0;
        }
        if (re_ != o.re_) return re_ < o.re_ ? -1 : 1;
        if (im_ != o.im_) return im_ < o.im_ ? -1 : 1;
        return 0;
    }

    std::string to_string() const;

    // enumerate all elements of a finite field in canonical order
    static std::vector<FieldValue> all_elements(const FieldId& id) {
        if (!id.is_finite()) throw DomainError("cannot enumerate " + id.name());
        std::vector<FieldValue> out;
        int vmax = id.kind == FieldKind::Prime ? 1 : id.p;
        for (int v = 0; v < vmax; ++v)
            for (int u = 0; u < id.p; ++u) out.push_back(finite(id, u, v));
        return out;
    }

private:
    void check(const FieldValue& o) const {
        if (id_ != o.id_) throw FieldMismatch("field mismatch: " + id_.name() + " vs " + o.id_.name());
    }

    FieldId id_;
    mpq_class re_;
    mpq_class im_;
    int u_ = 0;
    int v_ = 0;
};

inline FieldValue embed(const FieldValue& a, const FieldId& target) {
    if (a.field() == target) return a;
    const FieldId& src = a.field();
    if (target.fixed_field() == src) {
        if (src.is_finite()) return FieldValue::finite(target, a.u(), 0);
        return target.kind == FieldKind::Gaussian ? FieldValue::gaussian(a.re(), 0) : FieldValue(target, a.re());
    }
    throw FieldMismatch("cannot embed " + src.name() + " into " + target.name());
}

// inverse of embed; requires a to lie in the fixed field
inline FieldValue restrict_to_fixed(const FieldValue& a) {
    if (!a.in_fixed_field()) throw DomainError(a.to_string() + " is not in the fixed field");
    FieldId f = a.field().fixed_field();
    if (f == a.field()) return a;
    if (f.is_finite()) return FieldValue::finite(f, a.u(), 0);
    return FieldValue(f, a.re());
}

namespace detail {

inline std::string rational_string(const mpq_class& q) { return q.get_str(); }

// "r" for the imaginary part: coefficient then unit symbol
inline std::string scaled_unit(const std::string& coeff, const std::string& sym) {
    if (coeff == "1") return sym;
    if (coeff == "-1") return "-" + sym;
    return coeff + "*" + sym;
}

}  // namespace detail

inline std::string FieldValue::to_string() const {
    switch (id_.kind) {
        case FieldKind::Rational: return re_.get_str();
        case FieldKind::Gaussian: {
            if (sgn(im_) == 0) return re_.get_str();
            std::string imag = detail::scaled_unit(im_.get_str(), "i");
            if (sgn(re_) == 0) return "(" + imag + ")";
            return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag + ")";
        }
        case FieldKind::Prime: return std::to_string(u_);
        case FieldKind::PrimeExt:
        case FieldKind::F4: {
            if (v_ == 0) return std::to_string(u_);
            std::string gen = detail::scaled_unit(std::to_string(v_), "a");
            if (u_ == 0) return "(" + gen + ")";
            return "(" + std::to_string(u_) + "+" + gen + ")";
        }
    }
    return "?";
}

namespace detail {

struct LiteralCursor {
    std::string_view s;
    std::size_t pos = 0;
    std::size_t base = 0;  // offset of s inside the caller's text, for messages

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& production, const std::string& msg) const {
        throw ParseError(production, base + pos, msg);
    }
};

inline bool parse_unsigned_rational(LiteralCursor& c, mpq_class& out) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) return false;
    std::string num(c.s.substr(start, c.pos - start));
    std::string den = "1";
    std::size_t save = c.pos;
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        c.skip_ws();
        std::size_t ds = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
        if (c.pos == ds) c.fail("rational", "expected denominator digits");
        den = std::string(c.s.substr(ds, c.pos - ds));
        if (mpz_class(den) == 0) c.fail("rational", "zero denominator");
    } else {
        c.pos = save;
    }
    out = mpq_class(mpz_class(num), mpz_class(den));
    out.canonicalize();
    return true;
}

inline FieldValue rational_in(const FieldId& id, const mpq_class& q) {
    if (id.kind == FieldKind::Gaussian) return FieldValue::gaussian(q, 0);
    return FieldValue(id, q);
}

// sum of signed components "[sign] [rational] ['*'] [unit]" where unit is i or a
inline FieldValue parse_literal_body(LiteralCursor& c, const FieldId& id, bool inside_parens) {
    const char unit = id.kind == FieldKind::Gaussian ? 'i' : 'a';
    const bool has_unit = id.has_involution();
    FieldValue total = FieldValue::zero(id);
    bool first = true;
    while (true) {
        char ch = c.peek();
        int sign = 1;
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            break;
        }
        mpq_class q;
        bool have_num = parse_unsigned_rational(c, q);
        bool have_unit = false;
        std::size_t save = c.pos;
        if (c.peek() == '*' && have_num) {
            ++c.pos;
            if (c.peek() == unit && has_unit) {
                ++c.pos;
                have_unit = true;
            } else {
                c.pos = save;
            }
        } else if (c.peek() == unit && has_unit) {
            ++c.pos;
            have_unit = true;
        }
        if (!have_num && !have_unit) c.fail(id.kind == FieldKind::Gaussian ? "gaussian" : "coeff", "expected a number");
        if (!have_num) q = 1;
        FieldValue term = rational_in(id, q);
        if (have_unit) term *= FieldValue::generator(id);
        if (sign < 0) term = -term;
        total += term;
        first = false;
        if (!inside_parens) break;
    }
    return total;
}

}  // namespace detail

// Parses a field literal at c.pos: a rational, or a parenthesised Gaussian / finite-field literal.
inline FieldValue parse_field_literal(detail::LiteralCursor& c, const FieldId& id) {
    if (c.peek() == '(') {
        ++c.pos;
        FieldValue v = detail::parse_literal_body(c, id, true);
        if (c.peek() != ')') c.fail("coeff", "expected ')'");
        ++c.pos;
        return v;
    }
    mpq_class q;
    if (!detail::parse_unsigned_rational(c, q)) c.fail("coeff", "expected a number");
    return detail::rational_in(id, q);
}

// Whole-string literal, with an optional leading sign and bare unit symbols allowed.
inline FieldValue parse_field_value(std::string_view text, const FieldId& id) {
    detail::LiteralCursor c{text, 0, 0};
    FieldValue v = FieldValue::zero(id);
    if (c.peek() == '(') {
        v = parse_field_literal(c, id);
    } else {
        v = detail::parse_literal_body(c, id, true);
    }
    if (!c.at_end()) c.fail("coeff", "trailing characters");
    return v;
}

// ---------------------------------------------------------------- square roots

namespace detail {

inline std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
    if (sgn(n) < 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n) return std::nullopt;
    return r;
}

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    auto n = exact_sqrt(q.get_num());
    if (!n) return std::nullopt;
    auto d = exact_sqrt(q.get_den());
    if (!d) return std::nullopt;
    return mpq_class(*n, *d);
}

}  // namespace detail

// Any square root in K, canonical: positive (Q), positive real part then positive imaginary (Q(i)),
// least in canonical order (finite fields).
inline std::optional<FieldValue> sqrt_in_field(const FieldValue& a) {
    const FieldId& id = a.field();
    if (a.is_zero()) return a;
    switch (id.kind) {
        case FieldKind::Rational: {
            auto r = detail::rational_sqrt(a.re());
            if (!r) return std::nullopt;
            return FieldValue(id, *r);
        }
        case FieldKind::Gaussian: {
            const mpq_class& x = a.re();
            const mpq_class& y = a.im();
            auto m = detail::rational_sqrt(x * x + y * y);
            if (!m) return std::nullopt;
            auto u = detail::rational_sqrt((x + *m) / 2);
            if (!u) return std::nullopt;
            mpq_class v;
            if (sgn(*u) != 0) {
                v = y / (2 * *u);
            } else {
                auto w = detail::rational_sqrt(-x);
                if (!w) return std::nullopt;
                v = *w;
            }
            FieldValue r = FieldValue::gaussian(*u, v);
            if (r * r != a) return std::nullopt;
            return r;
        }
        default: {
            for (const auto& c : FieldValue::all_elements(id))
                if (c * c == a) return c;
            return std::nullopt;
        }
    }
}

// r in F with r² = a; a must lie in the fixed field. The result is expressed in a's field.
inline std::optional<FieldValue> sqrt_in_fixed_field(const FieldValue& a) {
    if (!a.in_fixed_field()) throw DomainError("sqrt_in_fixed_field: " + a.to_string() + " is not in the fixed field");
    auto r = sqrt_in_field(restrict_to_fixed(a));
    if (!r) return std::nullopt;
    return embed(*r, a.field());
}

// ------------------------------------------------------------------- norms

inline constexpr unsigned long kTrialDivisionBound = 1000000;

namespace detail {

struct GaussInt {
    mpz_class re, im;
};

inline GaussInt gmul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// x² + y² = p for a prime p ≡ 1 mod 4 (Hermite–Serret)
inline GaussInt two_squares_prime(const mpz_class& p) {
    mpz_class e = (p - 1) / 4, t;
    for (unsigned long c = 2;; ++c) {
        mpz_class base(c);
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((t * t) % p == p - 1) break;
    }
    if (t > p / 2) t = p - t;
    mpz_class a = p, b = t, root;
    mpz_sqrt(root.get_mpz_t(), p.get_mpz_t());
    while (b > root) {
        mpz_class r = a % b;
        a = b;
        b = r;
    }
    mpz_class y2 = p - b * b;
    auto y = exact_sqrt(y2);
    if (!y) throw InternalError("two-squares decomposition failed");
    return {b, *y};
}

// Gaussian integer of norm n, or nullopt; n > 0
inline std::optional<GaussInt> norm_preimage(const mpz_class& n_in) {
    mpz_class n = n_in;
    GaussInt acc{1, 0};
    auto absorb = [&](const mpz_class& p, unsigned long e) -> bool {
        if (p == 2) {
            for (unsigned long k = 0; k < e; ++k) acc = gmul(acc, {1, 1});
            return true;
        }
        if (p % 4 == 3) {
            if (e % 2 != 0) return false;
            mpz_class s;
            mpz_pow_ui(s.get_mpz_t(), p.get_mpz_t(), e / 2);
            acc = gmul(acc, {s, 0});
            return true;
        }
        GaussInt pi = two_squares_prime(p);
        for (unsigned long k = 0; k < e; ++k) acc = gmul(acc, pi);
        return true;
    };
    bool ok = true;
    for (unsigned long d = 2; d <= kTrialDivisionBound; d += (d == 2 ? 1 : 2)) {
        if (mpz_class(d) * d > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
                ++e;
            }
            ok = absorb(mpz_class(d), e) && ok;
        }
    }
    if (n > 1) {
        mpz_class bound = mpz_class(kTrialDivisionBound) * kTrialDivisionBound;
        if (n > bound) throw BoundExceeded("norm test: integer factorization exceeds trial-division bound 10^6");
        ok = absorb(n, 1) && ok;
    }
    if (!ok) return std::nullopt;
    return acc;
}

// unit u in {1, i, -1, -i} with Re(u z) > 0, or Re(u z) = 0 and Im(u z) >= 0
inline FieldValue gaussian_canonical_unit(const FieldValue& z) {
    FieldValue units[4] = {FieldValue::gaussian(1, 0), FieldValue::gaussian(0, 1), FieldValue::gaussian(-1, 0),
                           FieldValue::gaussian(0, -1)};
    for (auto& u : units) {
        FieldValue w = u * z;
        if (sgn(w.re()) > 0 || (sgn(w.re()) == 0 && sgn(w.im()) >= 0)) return u;
    }
    return units[0];
}

}  // namespace detail

// g in K with g·conj(g) = a, for a in the fixed field F; over a trivial involution this is a square root
inline std::optional<FieldValue> hermitian_square_scalar(const FieldValue& a) {
    if (!a.in_fixed_field()) throw DomainError("hermitian_square_scalar: " + a.to_string() + " is not in the fixed field");
    const FieldId& id = a.field();
    if (a.is_zero()) return a;
    switch (id.kind) {
        case FieldKind::Rational:
        case FieldKind::Prime: return sqrt_in_field(a);
        case FieldKind::Gaussian: {
            const mpq_class& q = a.re();
            if (sgn(q) < 0) return std::nullopt;
            auto zn = detail::norm_preimage(q.get_num());
            if (!zn) return std::nullopt;
            auto zd = detail::norm_preimage(q.get_den());
            if (!zd) return std::nullopt;
            FieldValue g = FieldValue::gaussian(mpq_class(zn->re), mpq_class(zn->im)) /
                           FieldValue::gaussian(mpq_class(zd->re), mpq_class(zd->im));
            g *= detail::gaussian_canonical_unit(g);
            if (g * g.conj() != a) throw InternalError("norm witness does not verify");
            return g;
        }
        default: {
            for (const auto& c : FieldValue::all_elements(id))
                if (c * c.conj() == a) return c;
            return std::nullopt;
        }
    }
}

// ------------------------------------------------------------------ random

inline mpq_class random_rational(std::mt19937_64& rng, long num_bound, long den_bound = 1) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound < 1 ? 1 : den_bound);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// random element; for Q(i) both parts are drawn, for finite fields uniform
inline FieldValue random_value(const FieldId& id, std::mt19937_64& rng, long num_bound = 5, long den_bound = 1) {
    switch (id.kind) {
        case FieldKind::Rational: return FieldValue(id, random_rational(rng, num_bound, den_bound));
        case FieldKind::Gaussian:
            return FieldValue::gaussian(random_rational(rng, num_bound, den_bound), random_rational(rng, num_bound, den_bound));
        default: {
            auto all = FieldValue::all_elements(id);
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            return all[pick(rng)];
        }
    }
}

// random element of the fixed field, expressed in id
inline FieldValue random_fixed_value(const FieldId& id, std::mt19937_64& rng, long num_bound = 5, long den_bound = 1) {
    return embed(random_value(id.fixed_field(), rng, num_bound, den_bound), id);
}

}  // namespace pmm
