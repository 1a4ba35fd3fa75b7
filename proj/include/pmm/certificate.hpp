#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"

namespace pmm {

// A witness (re-verifiable by multiplication) or a named failed condition.
struct Certificate {
    enum class Kind { MaProduct, HermitianSquare, ScalarSquare, Refutation };

    Kind kind = Kind::Refutation;
    std::string condition;               // what holds (witness) or what failed (refutation)
    std::vector<Poly> witnesses;         // factors / witness polynomial
    std::optional<FieldValue> scalar;    // extracted constant of a factorization
    std::optional<FieldValue> value;     // value of the failing scalar condition
    std::string gamma;                   // group element used, if any
    std::string lambda;                  // specialization point, if any
    std::vector<Poly> evidence;          // supporting polynomials, e.g. factors of a failing resultant
    std::vector<Certificate> children;   // sub-certificates (recursion, alternatives)

    static Certificate refutation(std::string cond) {
        Certificate c;
        c.kind = Kind::Refutation;
        c.condition = std::move(cond);
        return c;
    }

    bool is_refutation() const { return kind == Kind::Refutation; }
};

inline const char* kind_name(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::MaProduct: return "ma-product";
        case Certificate::Kind::HermitianSquare: return "hermitian-square";
        case Certificate::Kind::ScalarSquare: return "scalar-square";
        case Certificate::Kind::Refutation: return "refutation";
    }
    return "?";
}

inline void certificate_text(const Certificate& c, std::string& out, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out += pad + kind_name(c.kind) + ": " + c.condition + "\n";
    if (!c.gamma.empty()) out += pad + "  gamma: " + c.gamma + "\n";
    if (!c.lambda.empty()) out += pad + "  lambda: " + c.lambda + "\n";
    if (c.value) out += pad + "  value: " + c.value->to_string() + "\n";
    if (c.scalar) out += pad + "  scalar: " + c.scalar->to_string() + "\n";
    for (const auto& w : c.witnesses) out += pad + "  witness: " + w.to_string() + "\n";
    for (const auto& e : c.evidence) out += pad + "  factor: " + e.to_string() + "\n";
    for (const auto& ch : c.children) certificate_text(ch, out, depth + 1);
}

inline std::string to_text(const Certificate& c) {
    std::string out;
    certificate_text(c, out, 0);
    return out;
}

inline std::string var_name(int i) { return "x" + std::to_string(i + 1); }

}  // namespace pmm
