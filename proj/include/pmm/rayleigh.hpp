#pragma once

#include <cstdint>
#include <utility>

#include "matrix.hpp"

namespace pmm {

// ∂_i f · ∂_j f − f · ∂_i∂_j f
inline Poly delta(const Poly& f, int i, int j) {
    if (i == j) throw DomainError("delta: i and j must differ");
    Poly fi = derivative(f, i), fj = derivative(f, j);
    Poly d = fi * fj - f * derivative(fi, j);
    if (f.degree(i) <= 1 && f.degree(j) <= 1) {
        std::uint64_t I = std::uint64_t{1} << i, J = std::uint64_t{1} << j;
        Poly via_slices = slice(f, I, J) * slice(f, J, I) - slice(f, 0, I | J) * slice(f, I | J, 0);
        if (via_slices != d) throw InternalError("delta: slice identity mismatch");
    }
    return d;
}

// degree-dependent resultant g|_{x_k=0}·∂_k h − h|_{x_k=0}·∂_k g
inline Poly res_k(const Poly& g, const Poly& h, int k) {
    FieldValue z = FieldValue::zero(g.field());
    return specialize(g, k, z) * derivative(h, k) - specialize(h, k, z) * derivative(g, k);
}

// classical Res_{x_i}(g, f) for f of degree one in x_i: Σ_e g_e (−f^i)^e (f_i)^{d−e}
inline Poly phi(const Poly& g, const Poly& f, int i) {
    if (f.degree(i) != 1) throw DomainError("phi: f must have degree 1 in x" + std::to_string(i + 1));
    if (g.is_zero()) return g;
    Poly f_up = -coefficient_in(f, i, 0);
    Poly f_low = coefficient_in(f, i, 1);
    auto gs = coefficients_in(g, i);
    int d = static_cast<int>(gs.size()) - 1;
    Poly result(g.field(), g.nvars());
    for (int e = 0; e <= d; ++e) {
        if (gs[e].is_zero()) continue;
        result += gs[e] * pow(f_up, static_cast<unsigned>(e)) * pow(f_low, static_cast<unsigned>(d - e));
    }
    return result;
}

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// det M with rows `rows` and columns `cols` removed
inline Poly minor_det(const PolyMatrix& m, std::uint64_t rows, std::uint64_t cols) {
    const Poly& any = m(0, 0);
    return det(delete_rows_cols(m, rows, cols), any.field(), any.nvars());
}

// (det M(i,j), det M(j,i)) for M = diag(x)+A; their product is Δ_ij(det M)
inline std::pair<Poly, Poly> delta_from_minors(const ScalarMatrix& a, int i, int j) {
    if (i == j) throw DomainError("delta_from_minors: i and j must differ");
    PolyMatrix m = diag_plus(a);
    Poly d_ij = minor_det(m, bit(i), bit(j));
    Poly d_ji = minor_det(m, bit(j), bit(i));
    Poly f = det(m);
    if (d_ij * d_ji != delta(f, i, j)) throw InternalError("Desnanot-Jacobi identity violated");
    return {d_ij, d_ji};
}

// both sides of det M(i,k)·det M(j,l) − det M·det M({i,j},{k,l}) = det M(i,l)·det M(j,k), i<j, k<l
inline std::pair<Poly, Poly> dodgson_sides(const PolyMatrix& m, int i, int j, int k, int l) {
    Poly lhs = minor_det(m, bit(i), bit(k)) * minor_det(m, bit(j), bit(l)) -
               det(m) * minor_det(m, bit(i) | bit(j), bit(k) | bit(l));
    Poly rhs = minor_det(m, bit(i), bit(l)) * minor_det(m, bit(j), bit(k));
    return {lhs, rhs};
}

}  // namespace pmm
