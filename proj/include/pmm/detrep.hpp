#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "minors.hpp"
#include "rayleigh.hpp"
#include "squares.hpp"

namespace pmm {

struct DetRep {
    ScalarMatrix A;
    bool hermitian = false;
    FieldId field;
};

// entries g_ij, with g_ii = ∂f/∂x_i
using GMatrix = PolyMatrix;

inline constexpr int kDefaultGeneralBound = 6;
inline constexpr int kDefaultRetryBudget = 20;

// K for a fixed field F: Q → Q(i), F_2 → F_4, F_p → F_p(δ); fields with an involution map to themselves
inline FieldId hermitian_field(const FieldId& f) {
    switch (f.kind) {
        case FieldKind::Rational: return FieldId::gaussian();
        case FieldKind::Prime: return f.p == 2 ? FieldId::f4() : FieldId::prime_ext(f.p);
        default: return f;
    }
}

inline std::string g_name(int i, int j) {
    if (i < 9 && j < 9) return "g" + std::to_string(i + 1) + std::to_string(j + 1);
    return "g_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

inline std::string delta_name(int i, int j) {
    if (i < 9 && j < 9) return "Delta_" + std::to_string(i + 1) + std::to_string(j + 1);
    return "Delta_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

// M = G^adj / f^{n−2} must be diag(x) + A with constant A
inline DetRep rep_from_g(const GMatrix& G, const Poly& f) {
    int n = static_cast<int>(G.rows());
    const FieldId& id = f.field();
    if (!G.square() || n != f.nvars()) throw DomainError("rep_from_g: G must be n x n for f in n variables");
    DetRep rep{zero_matrix(id, n), false, id};
    if (n == 1) {
        if (f.degree(0) != 1 || !coefficient_in(f, 0, 1).constant_term().is_one()) throw DomainError("rep_from_g: f must be x1 + c");
        rep.A(0, 0) = coefficient_in(f, 0, 0).constant_term();
    } else {
        PolyMatrix adj = adjugate(G);
        Poly fp = pow(f, static_cast<unsigned>(n - 2));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto q = divide_exact(adj(i, j), fp);
                if (!q) throw DomainError("rep_from_g: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of G^adj is not divisible by f^(n-2)");
                Poly e = *q;
                if (i == j) e -= Poly::variable(id, n, i);
                if (!e.is_constant())
                    throw DomainError("rep_from_g: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not of the required form");
                rep.A(i, j) = e.constant_term();
            }
    }
    if (charpoly(rep.A) != f) throw DomainError("rep_from_g: det(diag(x)+A) differs from f");
    rep.hermitian = id.has_involution() && is_hermitian(rep.A);
    return rep;
}

// ----------------------------------------------------------------- blocks

namespace detail {

struct Block {
    std::vector<int> vars;
    Poly local;
};

// irreducible factors of a multiaffine f with unit top coefficient, each in its own variables
inline std::vector<Block> split_blocks(const Poly& f) {
    if (!f.is_multiaffine()) throw DomainError("polynomial is not multiaffine");
    Exponent top(f.nvars(), 1);
    if (!f.coefficient(top).is_one()) throw DomainError("coefficient of x1...xn must be 1");
    auto F = ma_irreducible_factorization(f);
    std::vector<Block> out;
    for (const auto& p : F.factors) {
        Block b;
        b.vars = p.support();
        std::vector<int> map(f.nvars(), 0);
        for (std::size_t a = 0; a < b.vars.size(); ++a) map[b.vars[a]] = static_cast<int>(a);
        b.local = remap_vars(p, static_cast<int>(b.vars.size()), map);
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) { return x.vars.front() < y.vars.front(); });
    return out;
}

inline void place_block(ScalarMatrix& A, const Block& b, const ScalarMatrix& local) {
    for (std::size_t r = 0; r < b.vars.size(); ++r)
        for (std::size_t c = 0; c < b.vars.size(); ++c) A(b.vars[r], b.vars[c]) = local(r, c);
}

inline bool partials_irreducible(const Poly& f) {
    for (int i = 0; i < f.nvars(); ++i) {
        Poly d = derivative(f, i);
        if (d.is_zero() || ma_irreducible_factorization(d).factors.size() > 1) return false;
    }
    return true;
}

inline bool pairwise_disjoint(const std::vector<const Poly*>& ps, int nvars) {
    std::vector<char> used(nvars, 0);
    for (const Poly* p : ps)
        for (int v : p->support()) {
            if (used[v]) return false;
            used[v] = 1;
        }
    return true;
}

}  // namespace detail

// ------------------------------------------------------------- Hermitian construction

namespace detail {

// coefficientwise canonical order, leading terms first
inline int poly_canonical_compare(const Poly& a, const Poly& b) {
    auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
    GrlexLess less;
    for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return less(ia->first, ib->first) ? -1 : 1;
        if (int c = ia->second.canonical_compare(ib->second)) return c;
    }
    if (ia == a.terms().rend() && ib == b.terms().rend()) return 0;
    return ia == a.terms().rend() ? -1 : 1;
}

// g or a conjugate-flipped variant: each irreducible factor replaced by the smaller of p and conj(p)
inline Poly canonical_conjugate_choice(const Poly& g) {
    if (g.is_constant()) return g;
    auto F = ma_irreducible_factorization(g);
    Poly out = Poly::constant(F.scalar, g.nvars());
    for (const auto& p : F.factors) {
        Poly q = p.conj().monic();
        out *= poly_canonical_compare(q, p) < 0 ? q : p;
    }
    return out;
}

// compatible g_ij for f satisfying the irreducibility assumptions; nullopt when backtracking is exhausted
inline std::optional<GMatrix> hermitian_core(const Poly& f, const std::vector<std::vector<Poly>>& hsf) {
    int m = f.nvars();
    const FieldId& id = f.field();
    std::vector<std::vector<Poly>> g(m, std::vector<Poly>(m, Poly(id, m)));
    if (m >= 2) g[0][1] = canonical_conjugate_choice(hsf[0][1]);
    std::optional<GMatrix> result;

    auto finish = [&]() -> bool {
        GMatrix G(m, m, Poly(id, m));
        for (int i = 0; i < m; ++i) G(i, i) = derivative(f, i);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                G(i, j) = g[i][j];
                G(j, i) = g[i][j].conj();
            }
        try {
            DetRep r = rep_from_g(G, f);
            if (!r.hermitian) return false;
        } catch (const DomainError&) {
            return false;
        }
        result = G;
        return true;
    };

    std::function<bool(int)> step = [&](int k) -> bool {
        if (k == m) return finish();
        Poly Q = delta(f, 0, k);
        std::vector<Poly> images(k);
        for (int j = 1; j < k; ++j) {
            images[j] = res_k(g[0][j], f, k);
            Q = gcd(Q, images[j]);
        }
        auto F = ma_irreducible_factorization(hsf[0][k]);
        std::size_t nf = F.factors.size();
        std::uint64_t preferred = 0;
        for (std::size_t t = 0; t < nf; ++t)
            if (!divides(F.factors[t], Q)) preferred |= std::uint64_t{1} << t;
        std::size_t limit = nf > 6 ? 64 : std::size_t{1} << nf;
        std::vector<std::uint64_t> order;
        for (std::uint64_t x = 0; x < limit; ++x) order.push_back(x ^ preferred);
        std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
            return __builtin_popcountll(a ^ preferred) < __builtin_popcountll(b ^ preferred);
        });
        for (std::uint64_t flips : order) {
            Poly g0k = Poly::constant(F.scalar, m);
            for (std::size_t t = 0; t < nf; ++t) g0k *= (flips >> t & 1U) ? F.factors[t].conj() : F.factors[t];
            bool ok = true;
            for (int j = 1; j < k && ok; ++j) {
                auto q = divide_exact(images[j], g0k);
                if (!q) ok = false;
                else g[j][k] = q->conj();
            }
            if (!ok) continue;
            g[0][k] = g0k;
            if (step(k + 1)) return true;
        }
        return false;
    };
    if (m == 1) {
        GMatrix G(1, 1, derivative(f, 0));
        return G;
    }
    if (step(2)) return result;
    return std::nullopt;
}

inline Certified<ScalarMatrix> hermitian_block(const Poly& f, std::mt19937_64& rng, int budget) {
    int m = f.nvars();
    const FieldId& id = f.field();
    Certified<ScalarMatrix> out;
    if (m == 1) {
        ScalarMatrix A(1, 1, coefficient_in(f, 0, 0).constant_term());
        out.value = A;
        return out;
    }
    std::vector<std::vector<Poly>> hsf(m, std::vector<Poly>(m, Poly(id, m)));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Poly d = delta(f, i, j);
            auto h = hermitian_square_factor(d);
            if (!h) {
                out.certificate = Certificate::refutation(delta_name(i, j) + "(f) is not a Hermitian square");
                out.certificate.evidence = {d};
                out.certificate.children.push_back(h.certificate);
                return out;
            }
            hsf[i][j] = *h;
        }
    auto attempt = [&](const Poly& p, const std::vector<std::vector<Poly>>& hs) -> std::optional<ScalarMatrix> {
        auto G = hermitian_core(p, hs);
        if (!G) return std::nullopt;
        return rep_from_g(*G, p).A;
    };
    if (m == 2 || partials_irreducible(f)) {
        if (auto A = attempt(f, hsf)) {
            out.value = *A;
            return out;
        }
    }
    // transport by a generic element of SL2(F)^m and back
    std::vector<int> ones(m, 1);
    Exponent top(m, 1);
    for (int tries = 0; tries < budget; ++tries) {
        GroupElement gam = random_group_element(id, m, rng, false);
        Poly gf = act_on_poly(gam, f, ones);
        FieldValue beta = gf.coefficient(top);
        if (beta.is_zero()) continue;
        Poly fp = gf / beta;
        if (!partials_irreducible(fp)) continue;
        std::vector<std::vector<Poly>> hs(m, std::vector<Poly>(m, Poly(id, m)));
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j) {
                auto h = hermitian_square_factor(delta(fp, i, j));
                if (!h) ok = false;
                else hs[i][j] = *h;
            }
        if (!ok) throw InternalError("hermitian_representation: Hermitian squares not preserved by the group action");
        auto Ap = attempt(fp, hs);
        if (!Ap) continue;
        auto [b2, B] = act_on_matrix(inverse(gam), *Ap);
        (void)b2;
        if (is_hermitian(B) && charpoly(B) == f) {
            out.value = B;
            return out;
        }
    }
    throw BoundExceeded("hermitian_representation: generic transport retry budget (" + std::to_string(budget) + " seeds) exhausted");
}

}  // namespace detail

struct HermitianOptions {
    int retry_budget = kDefaultRetryBudget;
    std::uint64_t seed = 0;
};

// Hermitian A over K with det(diag(x)+A) = f, or a refutation naming a Δ_ij that is not a Hermitian square
inline Certified<DetRep> hermitian_representation(const Poly& f_in, const HermitianOptions& opt = {}) {
    FieldId K = hermitian_field(f_in.field());
    Poly f = f_in.field() == K ? f_in : change_field(f_in, K);
    if (!f.in_fixed_field()) throw DomainError("hermitian_representation: coefficients must lie in the fixed field");
    auto blocks = detail::split_blocks(f);
    std::mt19937_64 rng(opt.seed);
    Certified<DetRep> out;
    ScalarMatrix A = zero_matrix(K, f.nvars());
    for (const auto& b : blocks) {
        auto r = detail::hermitian_block(b.local, rng, opt.retry_budget);
        if (!r) {
            out.certificate = r.certificate;
            // report indices in the caller's variables
            if (b.vars.size() != static_cast<std::size_t>(f.nvars())) {
                std::string names;
                for (int v : b.vars) names += (names.empty() ? "" : ",") + var_name(v);
                out.certificate.condition += " (block in " + names + ", local numbering)";
            }
            return out;
        }
        detail::place_block(A, b, *r);
    }
    DetRep rep{A, true, K};
    if (!is_hermitian(A)) throw InternalError("hermitian_representation: result is not Hermitian");
    if (charpoly(A) != f) throw InternalError("hermitian_representation: det(diag(x)+A) differs from f");
    out.certificate.kind = Certificate::Kind::HermitianSquare;
    out.certificate.condition = "every Delta_ij(f) is a Hermitian square";
    out.value = rep;
    return out;
}

inline Certified<DetRep> is_in_image_hermitian(const MinorVector& a, const HermitianOptions& opt = {}) {
    if (!a.values[0].is_one()) throw DomainError("minor vector must have a_{} = 1");
    for (std::size_t s = 0; s < a.values.size(); ++s)
        if (!a.values[s].in_fixed_field()) {
            Certified<DetRep> out;
            out.certificate = Certificate::refutation("principal minor a_" + std::to_string(s) + " = " + a.values[s].to_string() +
                                                      " is not in the fixed field");
            return out;
        }
    return hermitian_representation(minors_to_poly(a), opt);
}

// ------------------------------------------------------ general membership

namespace detail {

struct SplitCheck {
    bool ok = true;
    Certificate failure;
};

// r = res_k(g_ab, f) must be (free of x_a, x_k)·(free of x_k, x_b) with both parts multiaffine
inline SplitCheck check_split(const Poly& f, const Poly& g_ab, int a, int b, int k) {
    SplitCheck sc;
    Poly r = res_k(g_ab, f, k);
    std::string what = "res_{" + var_name(k) + "}(" + g_name(a, b) + ", f)";
    std::string need = " is not a product of a multiaffine polynomial free of {" + var_name(a) + "," + var_name(k) +
                       "} and one free of {" + var_name(k) + "," + var_name(b) + "}";
    if (r.is_zero()) {
        sc.ok = false;
        sc.failure = Certificate::refutation(what + " vanishes");
        return sc;
    }
    auto F = ma_factorization(r);
    if (!F) {
        sc.ok = false;
        sc.failure = Certificate::refutation(what + need);
        sc.failure.evidence = {r};
        sc.failure.children.push_back(F.certificate);
        return sc;
    }
    const auto& fs = F->factors;
    std::vector<const Poly*> left, right, free;  // left = g_ak, right = g_kb
    for (const auto& p : fs) {
        bool ha = p.degree(a) > 0, hb = p.degree(b) > 0, hk = p.degree(k) > 0;
        if (hk || (ha && hb)) {
            sc.ok = false;
            break;
        }
        if (ha) right.push_back(&p);
        else if (hb) left.push_back(&p);
        else free.push_back(&p);
    }
    if (sc.ok) {
        sc.ok = false;
        if (free.size() <= 16) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()) && !sc.ok; ++mask) {
                auto L = left, R = right;
                for (std::size_t t = 0; t < free.size(); ++t) ((mask >> t & 1U) ? L : R).push_back(free[t]);
                if (pairwise_disjoint(L, f.nvars()) && pairwise_disjoint(R, f.nvars())) sc.ok = true;
            }
        }
    }
    if (!sc.ok) {
        sc.failure = Certificate::refutation(what + need);
        sc.failure.evidence = fs;
        sc.failure.scalar = F->scalar;
    }
    return sc;
}

inline std::optional<ScalarMatrix> general_block_small(const Poly& f) {
    int m = f.nvars();
    if (m == 1) return ScalarMatrix(1, 1, coefficient_in(f, 0, 0).constant_term());
    MinorVector a = coefficient_vector(f);
    ScalarMatrix A(2, 2, FieldValue::one(f.field()));
    A(0, 0) = a.at({1});
    A(1, 1) = a.at({2});
    A(1, 0) = a.at({1}) * a.at({2}) - a.at({1, 2});
    return A;
}

inline Certified<ScalarMatrix> general_block(const Poly& f) {
    int m = f.nvars();
    const FieldId& id = f.field();
    Certified<ScalarMatrix> out;
    if (m <= 2) {
        out.value = general_block_small(f);
        return out;
    }
    // candidate (g_1j, g_j1) per j, pruned by the resultant condition for every k
    std::vector<std::vector<std::pair<Poly, Poly>>> cands(m);
    for (int j = 1; j < m; ++j) {
        Poly d = delta(f, 0, j);
        auto F = ma_factorization(d);
        if (!F) {
            out.certificate = Certificate::refutation(delta_name(0, j) + "(f) is not a product of multiaffine polynomials");
            out.certificate.evidence = {d};
            out.certificate.children.push_back(F.certificate);
            return out;
        }
        const auto& fs = F->factors;
        if (fs.size() > 20) throw BoundExceeded("is_in_image_general: too many factors in " + delta_name(0, j));
        Certificate all_fail = Certificate::refutation("no factorization " + delta_name(0, j) + "(f) = " + g_name(0, j) + "*" +
                                                       g_name(j, 0) + " satisfies the multiaffine and resultant conditions");
        all_fail.evidence = fs;
        all_fail.scalar = F->scalar;
        std::vector<Poly> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fs.size()); ++mask) {
            std::vector<const Poly*> L, R;
            Poly g0j = Poly::constant(id, m, -1);
            for (std::size_t t = 0; t < fs.size(); ++t) {
                if (mask >> t & 1U) {
                    L.push_back(&fs[t]);
                    g0j *= fs[t];
                } else {
                    R.push_back(&fs[t]);
                }
            }
            if (!pairwise_disjoint(L, m) || !pairwise_disjoint(R, m)) continue;
            if (std::find(seen.begin(), seen.end(), g0j) != seen.end()) continue;
            seen.push_back(g0j);
            Poly gj0 = divide_or_throw(d, g0j, "general_block");
            Certificate cand = Certificate::refutation("candidate " + g_name(0, j) + " = " + g0j.to_string() + ", " + g_name(j, 0) +
                                                       " = " + gj0.to_string());
            bool ok = true;
            for (int k = 1; k < m; ++k) {
                if (k == j) continue;
                auto s1 = check_split(f, g0j, 0, j, k);
                if (!s1.ok) {
                    ok = false;
                    cand.children.push_back(s1.failure);
                }
                auto s2 = check_split(f, gj0, j, 0, k);
                if (!s2.ok) {
                    ok = false;
                    cand.children.push_back(s2.failure);
                }
            }
            if (ok) cands[j].emplace_back(g0j, gj0);
            else all_fail.children.push_back(cand);
        }
        if (cands[j].empty()) {
            if (seen.empty()) {
                all_fail.condition = delta_name(0, j) + "(f) has no factorization into two multiaffine polynomials";
            }
            out.certificate = all_fail;
            return out;
        }
    }
    // depth-first over the candidate choices; g_jk = res_j(g_1k, f)/g_1j and g_kj = res_k(g_1j, f)/g_1k
    std::vector<std::vector<Poly>> g(m, std::vector<Poly>(m, Poly(id, m)));
    std::optional<ScalarMatrix> found;
    std::function<bool(int)> step = [&](int j) -> bool {
        if (j == m) {
            for (int i = 0; i < m; ++i)
                for (int jj = 0; jj < m; ++jj)
                    for (int k = 0; k < m; ++k) {
                        if (i == jj || jj == k || i == k) continue;
                        if (res_k(g[i][jj], f, k) != g[i][k] * g[k][jj]) return false;
                    }
            GMatrix G(m, m, Poly(id, m));
            for (int i = 0; i < m; ++i)
                for (int jj = 0; jj < m; ++jj) G(i, jj) = i == jj ? derivative(f, i) : g[i][jj];
            try {
                found = rep_from_g(G, f).A;
                return true;
            } catch (const DomainError&) {
                return false;
            }
        }
        for (const auto& [g0j, gj0] : cands[j]) {
            g[0][j] = g0j;
            g[j][0] = gj0;
            bool ok = true;
            for (int k = 1; k < j && ok; ++k) {
                auto gjk = divide_exact(res_k(g[0][k], f, j), g0j);
                auto gkj = divide_exact(res_k(g0j, f, k), g[0][k]);
                if (!gjk || !gkj || !gjk->is_multiaffine() || !gkj->is_multiaffine() || *gjk * *gkj != delta(f, j, k)) {
                    ok = false;
                    break;
                }
                g[j][k] = *gjk;
                g[k][j] = *gkj;
            }
            if (ok && step(j + 1)) return true;
        }
        return false;
    };
    if (step(1)) {
        out.value = found;
        return out;
    }
    out.certificate = Certificate::refutation("no compatible choice of the factorizations of the Rayleigh differences");
    for (int j = 1; j < m; ++j) {
        Certificate c = Certificate::refutation(delta_name(0, j) + ": " + std::to_string(cands[j].size()) + " locally admissible factorizations");
        out.certificate.children.push_back(c);
    }
    return out;
}

}  // namespace detail

// A over F with det(diag(x)+A) = f_a, or a refutation certificate
inline Certified<DetRep> is_in_image_general(const MinorVector& a, int bound = kDefaultGeneralBound) {
    if (!a.values[0].is_one()) throw DomainError("minor vector must have a_{} = 1");
    Poly f = minors_to_poly(a);
    auto blocks = detail::split_blocks(f);
    Certified<DetRep> out;
    ScalarMatrix A = zero_matrix(a.field, a.n);
    for (const auto& b : blocks) {
        if (static_cast<int>(b.vars.size()) > bound)
            throw BoundExceeded("is_in_image_general: irreducible block of size " + std::to_string(b.vars.size()) + " exceeds the bound " +
                                std::to_string(bound));
    }
    for (const auto& b : blocks) {
        auto r = detail::general_block(b.local);
        if (!r) {
            out.certificate = r.certificate;
            if (b.vars.size() != static_cast<std::size_t>(a.n)) {
                std::string names;
                for (int v : b.vars) names += (names.empty() ? "" : ",") + var_name(v);
                out.certificate.condition += " (block in " + names + ", local numbering)";
            }
            return out;
        }
        detail::place_block(A, b, *r);
    }
    if (principal_minors(A) != a) throw InternalError("is_in_image_general: witness minors differ from the input");
    out.certificate.kind = Certificate::Kind::MaProduct;
    out.certificate.condition = "compatible factorizations of all Delta_ij(f)";
    out.value = DetRep{A, a.field.has_involution() && is_hermitian(A), a.field};
    return out;
}

// ------------------------------------------------------ necessary conditions

enum class CheckMode { Norm, RealClosure };

struct ConditionRow {
    std::string name;
    bool passed = true;
    std::string detail;
    std::optional<FieldValue> value;
};

struct ConditionReport {
    std::vector<ConditionRow> rows;
    bool all_passed() const {
        return std::all_of(rows.begin(), rows.end(), [](const ConditionRow& r) { return r.passed; });
    }
};

inline ConditionReport necessary_conditions_hermitian(const MinorVector& a, std::uint64_t seed, int samples,
                                                      CheckMode mode = CheckMode::Norm) {
    if (a.n < 2) throw DomainError("necessary conditions need n >= 2");
    const FieldId& F = a.field;
    if (mode == CheckMode::RealClosure && F.fixed_field().kind != FieldKind::Rational)
        throw DomainError("real-closure mode needs Q or Q(i)");
    FieldId K = hermitian_field(F);
    ConditionReport rep;
    Poly f = minors_to_poly(a);

    if (a.n >= 4) {
        auto pts = certificate_family(a.n, default_lambda_set(F));
        std::size_t bad = 0;
        for (const auto& p : pts) {
            auto vals = evaluate_family_point(f, p);
            for (int op = 0; op < 5; ++op) {
                if (vals[op].is_zero()) continue;
                if (++bad <= 10) rep.rows.push_back({family_equation_name(p, op), false, "nonzero", vals[op]});
            }
        }
        rep.rows.push_back({"degree-12 equations", bad == 0,
                            std::to_string(pts.size() * 5) + " evaluated, " + std::to_string(bad) + " nonzero", std::nullopt});
    }

    std::mt19937_64 rng(seed);
    std::vector<int> ones(a.n, 1);
    Exponent top(a.n, 1);
    for (int s = 0; s <= samples; ++s) {
        GroupElement gam = GroupElement::identity(F, a.n);
        MinorVector b = a;
        if (s > 0) {
            bool found = false;
            for (int tries = 0; tries < 10 && !found; ++tries) {
                gam = random_group_element(F, a.n, rng, true);
                Poly gf = act_on_poly(gam, f, ones);
                if (gf.coefficient(top).is_zero()) continue;
                b = coefficient_vector(gf);
                found = true;
            }
            if (!found) continue;
        }
        std::string gtext = to_string(gam);
        FieldValue v1 = pair_condition(b);
        ConditionRow r1{"(i) b1*b2 - b0*b12", true, "gamma: " + gtext, v1};
        if (mode == CheckMode::RealClosure) r1.passed = v1.sign() >= 0;
        else r1.passed = hermitian_square_scalar(embed(restrict_to_fixed(v1), K)).has_value();
        rep.rows.push_back(r1);
        if (a.n >= 3) {
            FieldValue h = hyperdet_leading(b);
            ConditionRow r2{"(ii) HypDet", true, "gamma: " + gtext, h};
            if (mode == CheckMode::RealClosure) {
                r2.passed = h.sign() <= 0;
            } else if (K.characteristic() == 2) {
                continue;
            } else {
                FieldValue hk = embed(restrict_to_fixed(h), K);
                r2.passed = sqrt_in_fixed_field(hk / detail::extension_d(K)).has_value();
            }
            rep.rows.push_back(r2);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- rank one

struct RankOneResult {
    std::optional<std::vector<FieldValue>> v;
    std::string reason;
};

// v with A = v·v*, for Hermitian A of rank ≤ 1
inline RankOneResult rank_one_extract(const ScalarMatrix& A) {
    if (!is_hermitian(A)) throw DomainError("rank_one_extract: matrix is not Hermitian");
    const FieldId id = matrix_field(A);
    std::size_t n = A.rows();
    std::size_t r = rank(A);
    if (r == 0) return {std::vector<FieldValue>(n, FieldValue::zero(id)), ""};
    if (r != 1) return {std::nullopt, "rank is " + std::to_string(r) + ", not 1"};
    std::size_t k = 0;
    while (k < n && A(k, k).is_zero()) ++k;
    if (k == n) return {std::nullopt, "rank one with zero diagonal"};
    auto beta = hermitian_square_scalar(A(k, k));
    if (!beta) return {std::nullopt, "diagonal entry " + A(k, k).to_string() + " is not a norm over " + id.name()};
    std::vector<FieldValue> v(n, FieldValue::zero(id));
    FieldValue bc = beta->conj();
    for (std::size_t i = 0; i < n; ++i) v[i] = A(i, k) / bc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v[i] * v[j].conj() != A(i, j)) throw InternalError("rank_one_extract: v*v^H differs from A");
    return {v, ""};
}

// --------------------------------------------------------------- hermitize

struct HermitizeResult {
    std::optional<std::vector<FieldValue>> d;  // D = diag(d), D⁻¹AD Hermitian
    std::string reason;
};

inline HermitizeResult hermitize_by_diagonal(const ScalarMatrix& A) {
    if (!A.square()) throw DomainError("hermitize_by_diagonal: matrix is not square");
    const FieldId id = matrix_field(A);
    std::size_t n = A.rows();
    std::vector<FieldValue> ones(n, FieldValue::one(id));
    if (is_hermitian(A)) return {ones, ""};
    for (std::size_t i = 0; i < n; ++i)
        if (!A(i, i).in_fixed_field()) return {std::nullopt, "diagonal entry " + std::to_string(i + 1) + " is not in the fixed field"};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && A(i, j).is_zero() != A(j, i).is_zero()) return {std::nullopt, "asymmetric zero pattern"};
    // s_i = d_i², with a_ij / conj(a_ji) = s_i / s_j; each connected component is rooted at s = 1
    std::vector<std::optional<FieldValue>> s(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (s[root]) continue;
        s[root] = FieldValue::one(id);
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || A(i, j).is_zero()) continue;
                FieldValue lambda = A(i, j) / A(j, i).conj();
                if (!lambda.in_fixed_field()) return {std::nullopt, "ratio a_ij/conj(a_ji) is not in the fixed field"};
                if (id.fixed_field().kind == FieldKind::Rational && lambda.sign() <= 0)
                    return {std::nullopt, "ratio a_ij/conj(a_ji) is not positive"};
                FieldValue sj = *s[i] / lambda;
                if (!s[j]) {
                    s[j] = sj;
                    stack.push_back(j);
                } else if (*s[j] != sj) {
                    return {std::nullopt, "cocycle condition lambda_ij = lambda_ik*lambda_kj fails"};
                }
            }
        }
    }
    std::vector<FieldValue> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = sqrt_in_fixed_field(*s[i]);
        if (!r) return {std::nullopt, "square root outside field"};
        d[i] = *r;
    }
    if (!is_hermitian(diagonal_conjugate(A, d))) throw InternalError("hermitize_by_diagonal: result is not Hermitian");
    return {d, ""};
}

}  // namespace pmm
