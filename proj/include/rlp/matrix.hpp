// Arbitrary-precision integer/rational vectors and dense matrices.
//
// Conventions used throughout the library:
//   * all integers are GMP mpz, all rationals GMP mpq in lowest terms;
//   * vectors are rows, and linear maps act on the right: x -> x*A;
//   * a matrix whose rows span a lattice is called a basis matrix.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rlp/error.hpp"

namespace rlp {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// gcd of all entries (non-negative; 0 for the zero vector).
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Exact conversion; throws FormatError when a coordinate is not integral.
inline IntVec to_int(const RatVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw FormatError("non-integral coordinate");
        r[i] = v[i].get_num();
    }
    return r;
}

inline bool is_integral(const RatVec& v) {
    for (const Rat& x : v) {
        if (x.get_den() != 1) return false;
    }
    return true;
}

inline bool is_zero(const RatVec& v) {
    for (const Rat& x : v) {
        if (x != 0) return false;
    }
    return true;
}

template <class Vec>
Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class Vec>
Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class Vec, class Scalar>
Vec vec_scale(const Vec& a, const Scalar& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

inline RatVec vec_neg(const RatVec& a) { return vec_scale(a, Rat(-1)); }

template <class Vec>
auto dot(const Vec& a, const Vec& b) {
    typename Vec::value_type s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

// Dense row-major matrix over T (T = Int or Rat).
template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw FormatError("ragged matrix initializer");
            for (const T& x : row) a_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        Mat m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw FormatError("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<T>& r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    std::vector<std::vector<T>> rows_vec() const {
        std::vector<std::vector<T>> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool operator<(const Mat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
        return false;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline bool is_integral(const RatMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

inline IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw FormatError("non-integral matrix entry");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

// Row vector times matrix.
template <class T>
std::vector<T> vec_mul(const std::vector<T>& v, const Mat<T>& m) {
    std::vector<T> r(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

inline RatVec vec_mul(const RatVec& v, const IntMat& m) { return vec_mul(v, to_rat(m)); }
inline RatVec vec_mul(const IntVec& v, const RatMat& m) { return vec_mul(to_rat(v), m); }

// Exact determinant by fraction-free Gaussian elimination (Bareiss).
inline Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw RankError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

// Gauss-Jordan elimination over the rationals, with pivots restricted to the
// first col_limit columns (row operations still apply to the whole width, so
// augmented matrices reduce correctly). Returns the rank of the pivot block.
inline std::size_t row_reduce(RatMat& a, std::size_t col_limit) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < col_limit && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(rank, piv);
        Rat inv = 1 / a(rank, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(rank, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline std::size_t row_reduce(RatMat& a) { return row_reduce(a, a.cols()); }

inline std::size_t rank(const RatMat& m) {
    RatMat a = m;
    return row_reduce(a);
}

inline std::size_t rank(const IntMat& m) { return rank(to_rat(m)); }

// Exact inverse; throws RankError on singular input.
inline RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw RankError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (row_reduce(aug, n) != n) throw RankError("singular matrix");
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline RatMat inverse(const IntMat& m) { return inverse(to_rat(m)); }

// Solve x * A = b exactly (A square nonsingular).
inline RatVec solve_left(const RatMat& a, const RatVec& b) {
    // x * A = b  <=>  A^T * x^T = b^T; use x = b * A^{-1}.
    return vec_mul(b, inverse(a));
}

inline std::string to_string(const Rat& x) {
    return x.get_den() == 1 ? x.get_num().get_str() : x.get_str();
}

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const IntVec& v) { return to_string(to_rat(v)); }

}  // namespace rlp
