// Two dual constructions for centered lattice polytopes: the star dual (the
// primitive polytope positively proportional to the polar, in dual-lattice
// coordinates) and the vee dual (hull of primitivized facet barycenters, in
// the original lattice).
#pragma once

#include <utility>
#include <vector>

#include "rlp/polytope.hpp"

namespace rlp {

// Marks which side of the duality a coordinate frame belongs to; star_dual
// output is read in dual coordinates, and two applications return to primal.
enum class DualLatticeTag : bool { primal = false, dual = true };

inline DualLatticeTag flip(DualLatticeTag t) {
    return t == DualLatticeTag::primal ? DualLatticeTag::dual : DualLatticeTag::primal;
}

// The polar's vertices are the facet normals scaled so each inequality reads
// <phi, .> >= -1; clearing denominators and primitivizing is exactly the
// normalization step. Output lives over the dual lattice, realized as the
// unit grid in the dual basis (facet normals are already dual coordinates).
inline LatticePolytope star_dual(const LatticePolytope& p) {
    if (!p.origin_interior())
        throw NotCenteredError("star dual requires the origin in the interior");
    const std::size_t n = p.dim();
    Int k = 1;
    for (const Facet& f : p.facets()) k = lcm(k, f.offset);
    std::vector<IntVec> verts;
    verts.reserve(p.facets().size());
    for (const Facet& f : p.facets()) {
        IntVec v(n);
        Int s;
        mpz_divexact(s.get_mpz_t(), k.get_mpz_t(), f.offset.get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) v[j] = s * f.normal[j];
        verts.push_back(std::move(v));
    }
    LatticePolytope polar = LatticePolytope::from_lattice_coords(Lattice::standard(n), verts);
    return normalize(polar).first;
}

// Hull of the primitivized facet vertex-barycenters. Regularity forces one
// common primitivizing scale; divergent scales are reported, which makes the
// construction double as a cheap non-regularity probe.
inline LatticePolytope vee_dual(const LatticePolytope& p) {
    const Lattice& l = p.lattice();
    std::vector<RatVec> verts;
    Rat scale;
    bool first = true;
    for (const Facet& f : p.facets()) {
        RatVec b(p.dim(), Rat(0));
        for (int vi : f.vertices) {
            const IntVec& u = p.vertex_coords()[vi];
            for (std::size_t j = 0; j < b.size(); ++j) b[j] += Rat(u[j]);
        }
        for (Rat& x : b) {
            x /= Rat(f.vertices.size());
            x.canonicalize();
        }
        RatVec prim_coords = primitive_on_ray(Lattice::standard(p.dim()), b);
        // One common scale prim = k * b across facets, else the input was not
        // regular.
        Rat k;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) {
                k = prim_coords[j] / b[j];
                k.canonicalize();
                break;
            }
        if (first) {
            scale = k;
            first = false;
        } else if (k != scale) {
            throw InconsistentScaleError("facet barycenters need different primitivizing scales");
        }
        verts.push_back(l.from_coords(to_int(prim_coords)));
    }
    return normalize(hull(verts, l)).first;
}

}  // namespace rlp
