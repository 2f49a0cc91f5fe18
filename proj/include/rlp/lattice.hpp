// Full-rank sublattices of the ambient rational space, canonicalized by
// Hermite normal form so that equality of lattices is equality of bases.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rlp/hnf.hpp"
#include "rlp/matrix.hpp"

namespace rlp {

class Lattice {
  public:
    // Rows of `basis` span the lattice; must be square and nonsingular.
    explicit Lattice(const IntMat& basis) {
        if (basis.rows() != basis.cols()) throw RankError("lattice basis must be square");
        HnfResult res = hnf(basis);
        if (res.rank != basis.rows()) throw RankError("lattice basis is rank-deficient");
        basis_ = std::move(res.h);
        inv_ = inverse(basis_);
        det_ = rlp::det(basis_);  // positive: HNF pivots are positive
    }

    static Lattice standard(std::size_t n) { return Lattice(IntMat::identity(n)); }

    std::size_t dim() const { return basis_.rows(); }
    // Canonical (Hermite-form) basis; rows are the basis vectors.
    const IntMat& basis() const { return basis_; }
    const RatMat& basis_inverse() const { return inv_; }
    const Int& det() const { return det_; }

    bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    bool operator<(const Lattice& o) const {  // deterministic ordering for sorted output
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < basis_.cols(); ++j) {
                int c = cmp(basis_(i, j), o.basis_(i, j));
                if (c != 0) return c < 0;
            }
        return false;
    }

    // Coordinates of an ambient vector in this lattice's basis: v = result * basis.
    RatVec to_coords(const RatVec& v) const { return vec_mul(v, inv_); }
    RatVec from_coords(const RatVec& c) const { return vec_mul(c, to_rat(basis_)); }
    RatVec from_coords(const IntVec& c) const { return vec_mul(to_rat(c), to_rat(basis_)); }

    bool is_member(const RatVec& v) const { return is_integral(to_coords(v)); }

    // Integer coordinates of a lattice member; throws if v is not in the lattice.
    IntVec member_coords(const RatVec& v) const {
        RatVec c = to_coords(v);
        if (!is_integral(c)) throw NotLatticePointError("vector is not a lattice member");
        return to_int(c);
    }

    // Dual basis rows D with D * basis^T = I; spans Hom(lattice, Z) under the
    // standard pairing. Rational in general.
    RatMat dual_basis() const { return inv_.transpose(); }

  private:
    IntMat basis_;
    RatMat inv_;
    Int det_;
};

// |sup/sub|; requires sub ⊆ sup.
inline Int lattice_index(const Lattice& sub, const Lattice& sup) {
    for (std::size_t i = 0; i < sub.dim(); ++i) {
        RatVec row = to_rat(sub.basis().row(i));
        if (!sup.is_member(row)) throw NotSublatticeError("first lattice is not contained in second");
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), sub.det().get_mpz_t(), sup.det().get_mpz_t());
    return q;
}

inline bool is_member(const Lattice& l, const RatVec& v) { return l.is_member(v); }

// The primitive lattice vector generating ray(v) ∩ L, a positive multiple of v.
inline RatVec primitive_on_ray(const Lattice& l, const RatVec& v) {
    if (is_zero(v)) throw ZeroVectorError("primitive_on_ray of the zero vector");
    RatVec c = l.to_coords(v);
    // Least t > 0 with t*c integral is lcm(denominators)/gcd(numerators) ... in
    // two steps: scale up by the lcm of denominators, then divide by content.
    Int m = 1;
    for (const Rat& x : c) m = lcm(m, x.get_den());
    IntVec u(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) u[i] = Rat(c[i] * m).get_num();
    Int g = content(u);
    for (Int& x : u) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return l.from_coords(u);
}

}  // namespace rlp
