// Affine lattice maps x -> r * (x * A) + t: a lattice-affine part (A, t) and a
// separately recorded homothety factor r, so normalization witnesses can report
// their scaling exactly.
#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "rlp/lattice.hpp"
#include "rlp/matrix.hpp"

namespace rlp {

struct AffineLatticeMap {
    RatMat linear;        // acts on the right of row vectors
    RatVec translation;   // applied after the scaled linear part
    Rat homothety_ratio;  // 1 for pure lattice-affine maps

    AffineLatticeMap() = default;
    AffineLatticeMap(RatMat a, RatVec t, Rat r)
        : linear(std::move(a)), translation(std::move(t)), homothety_ratio(std::move(r)) {}

    static AffineLatticeMap identity(std::size_t n) {
        return AffineLatticeMap(RatMat::identity(n), RatVec(n, Rat(0)), Rat(1));
    }
    static AffineLatticeMap from_linear(RatMat a) {
        const std::size_t n = a.rows();
        return AffineLatticeMap(std::move(a), RatVec(n, Rat(0)), Rat(1));
    }

    std::size_t dim() const { return linear.rows(); }

    RatVec apply(const RatVec& x) const {
        RatVec y = vec_mul(x, linear);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = homothety_ratio * y[i] + translation[i];
        return y;
    }

    std::vector<RatVec> apply(const std::vector<RatVec>& pts) const {
        std::vector<RatVec> out;
        out.reserve(pts.size());
        for (const RatVec& p : pts) out.push_back(apply(p));
        return out;
    }

    bool is_identity() const {
        if (homothety_ratio != 1) return false;
        for (const Rat& t : translation)
            if (t != 0) return false;
        return linear == RatMat::identity(dim());
    }

    bool operator==(const AffineLatticeMap& o) const {
        return linear == o.linear && translation == o.translation &&
               homothety_ratio == o.homothety_ratio;
    }
    bool operator!=(const AffineLatticeMap& o) const { return !(*this == o); }
};

// compose(f, g): the map x -> g(f(x)).
inline AffineLatticeMap compose(const AffineLatticeMap& f, const AffineLatticeMap& g) {
    RatMat a = f.linear * g.linear;
    RatVec t = vec_mul(f.translation, g.linear);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.homothety_ratio * t[i] + g.translation[i];
    return AffineLatticeMap(std::move(a), std::move(t), f.homothety_ratio * g.homothety_ratio);
}

inline AffineLatticeMap inverse(const AffineLatticeMap& f) {
    RatMat ainv = inverse(f.linear);
    RatVec t = vec_mul(f.translation, ainv);
    Rat rinv = 1 / f.homothety_ratio;
    for (Rat& x : t) x = -rinv * x;
    return AffineLatticeMap(std::move(ainv), std::move(t), rinv);
}

// The matrix of the linear part in L-coordinates: B * A * B^{-1}.
inline RatMat linear_in_lattice_coords(const RatMat& a, const Lattice& l) {
    return to_rat(l.basis()) * a * l.basis_inverse();
}

// True when A maps L bijectively onto itself (integer, det ±1 in L-coordinates).
inline bool is_lattice_unimodular(const RatMat& a, const Lattice& l) {
    RatMat m = linear_in_lattice_coords(a, l);
    if (!is_integral(m)) return false;
    Int d = det(to_int(m));
    return d == 1 || d == -1;
}

// True when f is a pure lattice-affine self-map of L (no homothety).
inline bool preserves_lattice(const AffineLatticeMap& f, const Lattice& l) {
    return f.homothety_ratio == 1 && l.is_member(f.translation) &&
           is_lattice_unimodular(f.linear, l);
}

namespace detail {

// Subgroup of a finite abelian group ∏ Z/d_i, elements stored as reduced
// tuples; closure under addition computed by BFS.
inline std::vector<IntVec> subgroup_closure(const std::vector<IntVec>& gens, const IntVec& d) {
    auto reduce = [&d](IntVec x) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (d[i] == 0) continue;
            mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), d[i].get_mpz_t());
        }
        return x;
    };
    std::set<IntVec> seen;
    std::vector<IntVec> frontier;
    IntVec zero(d.size(), Int(0));
    seen.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& x : frontier)
            for (const IntVec& g : gens) {
                IntVec y = reduce(vec_add(x, g));
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return std::vector<IntVec>(seen.begin(), seen.end());
}

}  // namespace detail

// All lattices M with sub ⊆ M ⊆ sup stable under every map in G.
//
// Works in the finite quotient sup/sub: Smith form of sub's basis in
// sup-coordinates diagonalizes the quotient as ∏ Z/d_i; G acts there by
// conjugated integer matrices; G-stable subgroups are enumerated as closures
// of unions of G-orbits, and lifted back to lattices (deduplicated by the
// canonical basis). Output is sorted, contains both endpoints, and every
// member is G-stable by construction.
inline std::vector<Lattice> stable_intermediate_lattices(const Lattice& sub, const Lattice& sup,
                                                         const std::vector<AffineLatticeMap>& g) {
    const std::size_t n = sub.dim();
    for (std::size_t i = 0; i < n; ++i)
        if (!sup.is_member(to_rat(sub.basis().row(i))))
            throw NotSublatticeError("sub is not contained in sup");
    for (const AffineLatticeMap& f : g) {
        for (std::size_t i = 0; i < n; ++i) {
            RatVec lo = f.apply(to_rat(sub.basis().row(i)));
            RatVec hi = f.apply(to_rat(sup.basis().row(i)));
            RatVec o = f.apply(RatVec(n, Rat(0)));
            if (!sub.is_member(vec_sub(lo, o)) || !sub.is_member(o))
                throw NotStableError("a map does not stabilize sub");
            if (!sup.is_member(vec_sub(hi, o))) throw NotStableError("a map does not stabilize sup");
        }
    }

    // sub in sup-coordinates, Smith-diagonalized: columns change by V.
    IntMat m = to_int(to_rat(sub.basis()) * sup.basis_inverse());
    SnfResult s = snf(m);
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.s(i, i);
    RatMat v = to_rat(s.v);
    RatMat vinv = inverse(v);

    // G in the diagonalized quotient coordinates (effective linear part r*A).
    std::vector<IntMat> gq;
    for (const AffineLatticeMap& f : g) {
        RatMat eff = f.linear;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) eff(i, j) *= f.homothety_ratio;
        gq.push_back(to_int(vinv * (to_rat(sup.basis()) * eff * sup.basis_inverse()) * v));
    }

    auto reduce = [&d](IntVec x) {
        for (std::size_t i = 0; i < x.size(); ++i)
            mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), d[i].get_mpz_t());
        return x;
    };

    // All quotient elements (product over residues mod d_i).
    std::vector<IntVec> elems{IntVec(n, Int(0))};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<IntVec> next;
        for (const IntVec& e : elems)
            for (Int r = 0; r < d[i]; ++r) {
                IntVec x = e;
                x[i] = r;
                next.push_back(x);
            }
        elems = std::move(next);
    }

    // G-orbits partition the quotient.
    std::set<IntVec> assigned;
    std::vector<std::vector<IntVec>> orbits;
    for (const IntVec& e : elems) {
        if (assigned.count(e)) continue;
        std::set<IntVec> orb{e};
        std::vector<IntVec> frontier{e};
        while (!frontier.empty()) {
            std::vector<IntVec> next;
            for (const IntVec& x : frontier)
                for (const IntMat& a : gq) {
                    IntVec y = reduce(vec_mul(x, a));
                    if (orb.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        for (const IntVec& x : orb) assigned.insert(x);
        orbits.emplace_back(orb.begin(), orb.end());
    }

    // Distinct subgroups generated by single orbits, then all joins of those.
    std::set<std::vector<IntVec>> atoms;
    for (const auto& orb : orbits) atoms.insert(detail::subgroup_closure(orb, d));
    std::vector<std::vector<IntVec>> atom_list(atoms.begin(), atoms.end());
    std::set<std::vector<IntVec>> subgroups;
    const std::size_t k = atom_list.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i))
                gens.insert(gens.end(), atom_list[i].begin(), atom_list[i].end());
        subgroups.insert(detail::subgroup_closure(gens, d));
    }

    // Lift each subgroup to a lattice: sub's rows plus representatives mapped
    // back through V^{-1} to sup-coordinates and on to ambient coordinates.
    std::set<Lattice> out;
    for (const auto& sg : subgroups) {
        IntMat stack(n + sg.size(), n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stack(i, j) = sub.basis()(i, j);
        for (std::size_t i = 0; i < sg.size(); ++i) {
            IntVec amb = to_int(vec_mul(vec_mul(to_rat(sg[i]), vinv), to_rat(sup.basis())));
            for (std::size_t j = 0; j < n; ++j) stack(n + i, j) = amb[j];
        }
        out.insert(Lattice(hnf_basis(stack)));
    }
    return std::vector<Lattice>(out.begin(), out.end());
}

}  // namespace rlp
