// Hermite and Smith normal forms over the integers, with transform tracking.
//
// Row-style Hermite form: for an m x n integer matrix M, hnf(M) produces
// H = U * M with U unimodular (|det U| = 1), H in row echelon form whose
// pivots are positive and whose entries above each pivot lie in [0, pivot).
// Nonzero rows of H form the canonical basis of the row span of M.
//
// Smith form: snf(M) produces S = U * M * V with U, V unimodular and S
// diagonal with s_1 | s_2 | ... | s_r > 0.
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "rlp/matrix.hpp"

namespace rlp {

struct HnfResult {
    IntMat h;          // the Hermite form, same shape as the input
    IntMat u;          // unimodular transform, h = u * input
    std::size_t rank;  // number of nonzero rows of h
};

namespace detail {

inline void row_axpy(IntMat& m, std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= c * m(src, j);
}

inline void negate_row(IntMat& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace detail

namespace detail {

// Rank-tolerant Hermite reduction (zero rows sink to the bottom).
inline HnfResult hnf_any(const IntMat& m);

}  // namespace detail

// Hermite form of a full-row-rank matrix; throws RankError otherwise.
inline HnfResult hnf(const IntMat& m) {
    HnfResult res = detail::hnf_any(m);
    if (res.rank != m.rows()) throw RankError("hnf requires full row rank");
    return res;
}

namespace detail {

inline HnfResult hnf_any(const IntMat& m) {
    HnfResult res{m, IntMat::identity(m.rows()), 0};
    IntMat& h = res.h;
    IntMat& u = res.u;
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
        // Shrink the column below row r to a single gcd entry at row r.
        while (true) {
            std::size_t piv = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                if (piv == h.rows() || cmp(abs(h(i, col)), abs(h(piv, col))) < 0) piv = i;
            }
            if (piv == h.rows()) break;  // column is zero below r
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            bool leftover = false;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Int q = detail::floor_div(h(i, col), h(r, col));
                detail::row_axpy(h, i, r, q);
                detail::row_axpy(u, i, r, q);
                if (h(i, col) != 0) leftover = true;
            }
            if (!leftover) break;
        }
        if (h(r, col) == 0) continue;
        if (h(r, col) < 0) {
            detail::negate_row(h, r);
            detail::negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = detail::floor_div(h(i, col), h(r, col));
            detail::row_axpy(h, i, r, q);
            detail::row_axpy(u, i, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

}  // namespace detail

// Nonzero rows of the Hermite form: canonical basis of the row span.
inline IntMat hnf_basis(const IntMat& m) {
    HnfResult res = detail::hnf_any(m);
    IntMat b(res.rank, m.cols());
    for (std::size_t i = 0; i < res.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = res.h(i, j);
    return b;
}

// Basis of the left kernel {x : x * M = 0}, as rows.
inline IntMat left_kernel(const IntMat& m) {
    HnfResult res = detail::hnf_any(m);
    IntMat k(m.rows() - res.rank, m.rows());
    for (std::size_t i = res.rank; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) k(i - res.rank, j) = res.u(i, j);
    return hnf_basis(k);
}

struct SnfResult {
    IntMat s;          // diagonal Smith form, same shape as the input
    IntMat u;          // unimodular row transform
    IntMat v;          // unimodular column transform, s = u * input * v
    std::size_t rank;  // number of nonzero diagonal entries
};

inline SnfResult snf(const IntMat& m) {
    SnfResult res{m, IntMat::identity(m.rows()), IntMat::identity(m.cols()), 0};
    IntMat& s = res.s;
    IntMat& u = res.u;
    IntMat& v = res.v;
    const std::size_t nmin = std::min(s.rows(), s.cols());

    auto col_axpy = [](IntMat& a, std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) -= c * a(i, src);
    };
    auto swap_cols = [](IntMat& a, std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
    };

    std::size_t t = 0;
    while (t < nmin) {
        // Locate a minimal nonzero entry in the trailing block.
        std::size_t pi = s.rows(), pj = 0;
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j) {
                if (s(i, j) == 0) continue;
                if (pi == s.rows() || cmp(abs(s(i, j)), abs(s(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == s.rows()) break;  // trailing block is zero
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear the pivot column with row operations.
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q = detail::floor_div(s(i, t), s(t, t));
                detail::row_axpy(s, i, t, q);
                detail::row_axpy(u, i, t, q);
                if (s(i, t) != 0) {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            // Clear the pivot row with column operations.
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q = detail::floor_div(s(t, j), s(t, t));
                col_axpy(s, j, t, q);
                col_axpy(v, j, t, q);
                if (s(t, j) != 0) {
                    swap_cols(s, t, j);
                    swap_cols(v, t, j);
                    dirty = true;
                }
            }
        }
        // Enforce divisibility of the trailing block by the pivot.
        bool restart = false;
        for (std::size_t i = t + 1; i < s.rows() && !restart; ++i)
            for (std::size_t j = t + 1; j < s.cols() && !restart; ++j) {
                if (s(i, j) % s(t, t) != 0) {
                    detail::row_axpy(s, t, i, Int(-1));  // add row i to row t
                    detail::row_axpy(u, t, i, Int(-1));
                    restart = true;
                }
            }
        if (restart) continue;
        if (s(t, t) < 0) {
            detail::negate_row(s, t);
            detail::negate_row(u, t);
        }
        ++t;
    }
    res.rank = t;
    if (s.rows() == s.cols() && res.rank < s.rows())
        throw RankError("snf requires a nonsingular square matrix");
    return res;
}

// The invariant factors d_1 | d_2 | ... | d_r of the quotient spanned-by(sup)
// modulo spanned-by(sub), where sub's rows lie in the row span of sup.
inline IntVec invariant_factors(const IntMat& m) {
    SnfResult res = snf(m);
    IntVec d(res.rank);
    for (std::size_t i = 0; i < res.rank; ++i) d[i] = res.s(i, i);
    return d;
}

}  // namespace rlp
