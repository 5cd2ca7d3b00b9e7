#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "int_matrix.hpp"

namespace semicoh {

// U * M * V = D with U, V unimodular, D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    IntMatrix u, d, v;
    std::vector<Int> diag;  // min(rows, cols) entries of d
    std::size_t rank = 0;   // count of nonzero diagonal entries (they form a prefix)
};

namespace detail {

struct SmithWork {
    IntMatrix m;
    std::optional<IntMatrix> u, uinv, v, vinv;
    std::vector<Int> diag;
    std::size_t rank = 0;
};

// Diagonalization by row/column reduction with min-abs pivoting.
//
// If mod > 0, entries of the working matrix are kept as balanced residues
// mod `mod`. That preserves {x : Mx = 0 (mod m)} (the working matrix stays
// congruent to a row-equivalent of M*V), so it is valid for congruence
// kernels, but U*M*V = D no longer holds for the original M. Callers that
// need the exact decomposition must pass mod = 0.
inline SmithWork smith_core(IntMatrix m, bool wu, bool wui, bool wv, bool wvi,
                            const Int& mod, bool chain) {
    const std::size_t R = m.rows(), C = m.cols();
    SmithWork w;
    if (wu) w.u = IntMatrix::identity(R);
    if (wui) w.uinv = IntMatrix::identity(R);
    if (wv) w.v = IntMatrix::identity(C);
    if (wvi) w.vinv = IntMatrix::identity(C);

    auto reduce_row = [&](std::size_t i) {
        if (mod > 0)
            for (std::size_t j = 0; j < C; ++j) m(i, j) = balanced_mod(m(i, j), mod);
    };
    auto reduce_col = [&](std::size_t j) {
        if (mod > 0)
            for (std::size_t i = 0; i < R; ++i) m(i, j) = balanced_mod(m(i, j), mod);
    };
    if (mod > 0)
        for (std::size_t i = 0; i < R; ++i) reduce_row(i);

    auto row_addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
        m.addmul_row(dst, src, c);
        reduce_row(dst);
        if (w.u) w.u->addmul_row(dst, src, c);
        if (w.uinv) w.uinv->addmul_col(src, dst, -c);
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
        m.addmul_col(dst, src, c);
        reduce_col(dst);
        if (w.v) w.v->addmul_col(dst, src, c);
        if (w.vinv) w.vinv->addmul_row(src, dst, -c);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        m.swap_rows(i, j);
        if (w.u) w.u->swap_rows(i, j);
        if (w.uinv) w.uinv->swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        m.swap_cols(i, j);
        if (w.v) w.v->swap_cols(i, j);
        if (w.vinv) w.vinv->swap_rows(i, j);
    };
    auto row_negate = [&](std::size_t i) {
        m.negate_row(i);
        if (w.u) w.u->negate_row(i);
        if (w.uinv) w.uinv->negate_col(i);
    };

    const std::size_t tmax = std::min(R, C);
    std::size_t t = 0;
    while (t < tmax) {
        // Min-abs nonzero pivot in the trailing submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < R && !(found && best == 1); ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (m(i, j) == 0) continue;
                Int a = semicoh::abs(m(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (m(i, t) == 0) continue;
            Int q = m(i, t) / m(t, t);
            if (q != 0) row_addmul(i, t, -q);
            if (m(i, t) != 0) clean = false;
        }
        if (!clean) continue;
        for (std::size_t j = t + 1; j < C; ++j) {
            if (m(t, j) == 0) continue;
            Int q = m(t, j) / m(t, t);
            if (q != 0) col_addmul(j, t, -q);
            if (m(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        if (chain) {
            // Fold a non-divisible entry into row t; the next pass shrinks the pivot.
            bool redo = false;
            for (std::size_t i = t + 1; i < R && !redo; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        row_addmul(t, i, Int(1));
                        redo = true;
                        break;
                    }
            if (redo) continue;
        }
        if (m(t, t) < 0) row_negate(t);
        ++t;
    }

    w.diag.resize(tmax);
    for (std::size_t i = 0; i < tmax; ++i) w.diag[i] = m(i, i);
    w.rank = t;
    w.m = std::move(m);
    return w;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    auto w = detail::smith_core(m, true, false, true, false, Int(0), true);
    SmithDecomposition s;
    s.u = std::move(*w.u);
    s.v = std::move(*w.v);
    s.d = std::move(w.m);
    s.diag = std::move(w.diag);
    s.rank = w.rank;
    return s;
}

// Basis data for {x : Mx = 0 (mod m)}, m >= 0 (m = 0 means the exact kernel).
// The lattice is spanned by v * diagonal(step), where step_i = m / gcd(d_i, m)
// for m > 0. For m = 0 the kernel is spanned by the v-columns with d_i = 0
// (step_i is 1 there and unused elsewhere).
struct CongruenceKernel {
    IntMatrix v, vinv;      // unimodular, cols(M) square
    std::vector<Int> diag;  // length cols(M), zero-padded past min(rows, cols)
    std::vector<Int> step;  // length cols(M)
    Int modulus;
};

inline CongruenceKernel congruence_kernel(const IntMatrix& m, const Int& modulus) {
    auto w = detail::smith_core(m, false, false, true, true, modulus, false);
    CongruenceKernel k;
    k.v = std::move(*w.v);
    k.vinv = std::move(*w.vinv);
    k.modulus = modulus;
    k.diag.assign(m.cols(), Int(0));
    for (std::size_t i = 0; i < w.diag.size() && i < m.cols(); ++i) k.diag[i] = w.diag[i];
    k.step.resize(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) {
        if (modulus > 0)
            k.step[i] = modulus / semicoh::gcd(k.diag[i], modulus);
        else
            k.step[i] = 1;
    }
    return k;
}

// Exact membership and solving for the integer column lattice of M.
class ColumnSpanSolver {
public:
    explicit ColumnSpanSolver(const IntMatrix& m) : cols_(m.cols()) {
        auto w = detail::smith_core(m, true, false, true, false, Int(0), true);
        u_ = std::move(*w.u);
        v_ = std::move(*w.v);
        diag_ = std::move(w.diag);
        rank_ = w.rank;
    }

    bool contains(const std::vector<Int>& b) const {
        std::vector<Int> c = u_.apply(b);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < rank_) {
                if (c[i] % diag_[i] != 0) return false;
            } else if (c[i] != 0) {
                return false;
            }
        }
        return true;
    }

    // x with M x = b, if any.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
        std::vector<Int> c = u_.apply(b);
        std::vector<Int> y(cols_, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < rank_) {
                if (c[i] % diag_[i] != 0) return std::nullopt;
                if (i < cols_) y[i] = c[i] / diag_[i];
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        return v_.apply(y);
    }

    std::size_t rank() const { return rank_; }

private:
    std::size_t cols_;
    IntMatrix u_, v_;
    std::vector<Int> diag_;
    std::size_t rank_ = 0;
};

}  // namespace semicoh
