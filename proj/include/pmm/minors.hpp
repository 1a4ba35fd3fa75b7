#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace pmm {

// a_S indexed by bitmask, bit i set when variable i (0-based) is in S
struct MinorVector {
    int n = 0;
    FieldId field;
    std::vector<FieldValue> values;

    MinorVector() = default;
    MinorVector(int n_, const FieldId& id) : n(n_), field(id), values(std::size_t{1} << n_, FieldValue::zero(id)) {
        values[0] = FieldValue::one(id);
    }

    FieldValue& operator[](std::uint64_t mask) { return values.at(mask); }
    const FieldValue& operator[](std::uint64_t mask) const { return values.at(mask); }

    // a_S for S given as 1-based indices, e.g. at({1,2})
    const FieldValue& at(std::initializer_list<int> s) const {
        std::uint64_t m = 0;
        for (int i : s) m |= std::uint64_t{1} << (i - 1);
        return values.at(m);
    }

    bool operator==(const MinorVector& o) const { return n == o.n && field == o.field && values == o.values; }
    bool operator!=(const MinorVector& o) const { return !(*this == o); }
};

inline std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline MinorVector principal_minors(const ScalarMatrix& a) {
    if (!a.square()) throw DomainError("principal_minors: matrix is not square");
    int n = static_cast<int>(a.rows());
    const FieldId id = matrix_field(a);
    MinorVector mv(n, id);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) mv[s] = det(principal_submatrix(a, s), id);
    return mv;
}

// f_a = Σ_S a_S ∏_{i∉S} x_i
inline Poly minors_to_poly(const MinorVector& a) {
    Poly f(a.field, a.n);
    std::uint64_t all = full_mask(a.n);
    for (std::uint64_t s = 0; s < a.values.size(); ++s) {
        Exponent e(a.n, 0);
        std::uint64_t comp = all & ~s;
        for (int k = 0; k < a.n; ++k) e[k] = static_cast<int>(comp >> k & 1U);
        f.add_term(e, a.values[s]);
    }
    return f;
}

// coefficient vector of a multiaffine polynomial, without normalizing a_∅
inline MinorVector coefficient_vector(const Poly& f) {
    if (!f.is_multiaffine()) throw DomainError("coefficient_vector: polynomial is not multiaffine");
    int n = f.nvars();
    MinorVector a(n, f.field());
    a.values[0] = FieldValue::zero(f.field());
    std::uint64_t all = full_mask(n);
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t m = 0;
        for (int k = 0; k < n; ++k)
            if (e[k]) m |= std::uint64_t{1} << k;
        a.values[all & ~m] = c;
    }
    return a;
}

inline MinorVector poly_to_minors(const Poly& f) {
    MinorVector a = coefficient_vector(f);
    if (!a.values[0].is_one()) throw DomainError("poly_to_minors: coefficient of x1...xn must be 1");
    return a;
}

inline Poly charpoly(const ScalarMatrix& a) { return det(diag_plus(a)); }

inline MinorVector random_minor_vector(const FieldId& id, int n, std::mt19937_64& rng, long bound = 5) {
    MinorVector a(n, id);
    for (std::size_t s = 1; s < a.values.size(); ++s) a.values[s] = random_fixed_value(id, rng, bound);
    return a;
}

}  // namespace pmm
