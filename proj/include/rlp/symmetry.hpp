// Lattice-affine symmetries of a polytope and the flag-transitivity test.
//
// For a centered polytope every symmetry is linear, and a symmetry sending
// flag f to flag g is unique (it matches their frames: the vertex and the
// face barycenters along the chain, which are linearly independent). So the
// whole group is {transporter(f0 -> f) : f a flag}, and the polytope is
// regular exactly when every flag admits one.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rlp/polytope.hpp"

namespace rlp {

struct IsomGroup {
    std::vector<AffineLatticeMap> elements;   // deterministic (flag) order
    std::vector<std::size_t> generators;      // indices of a generating subset
    std::size_t order() const { return elements.size(); }
};

// The linear part in lattice coordinates, which must be integral for members
// of the isometry group.
inline IntMat lattice_matrix(const AffineLatticeMap& f, const Lattice& l) {
    return to_int(linear_in_lattice_coords(f.linear, l));
}

namespace detail {

// Integer flag frames: row d is the barycenter of the flag's dimension-d face
// scaled by a fixed per-dimension factor, so frames of different flags differ
// by exactly the candidate linear map.
class FlagFrameTable {
  public:
    explicit FlagFrameTable(const LatticePolytope& p) : p_(&p) {
        const FaceLattice& fl = p.face_lattice();
        const std::size_t n = p.dim();
        bary_.resize(n);
        for (std::size_t d = 0; d < n; ++d) {
            Int scale = 1;
            for (const auto& face : fl.faces[d]) scale = lcm(scale, Int(face.size()));
            bary_[d].reserve(fl.count(d));
            for (const auto& face : fl.faces[d]) {
                IntVec b(n, Int(0));
                for (int v : face) b = vec_add(b, p.vertex_coords()[v]);
                Int mult = scale / Int(face.size());
                for (Int& x : b) x *= mult;
                bary_[d].push_back(std::move(b));
            }
        }
    }

    IntMat frame(const Flag& f) const {
        const std::size_t n = p_->dim();
        IntMat r(n, n);
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t j = 0; j < n; ++j) r(d, j) = bary_[d][f[d]][j];
        return r;
    }

  private:
    const LatticePolytope* p_;
    std::vector<std::vector<IntVec>> bary_;
};

// Transporter search with a fixed source flag.
class TransporterEngine {
  public:
    TransporterEngine(const LatticePolytope& p, const Flag& src)
        : p_(&p), frames_(p) {
        IntMat r = frames_.frame(src);
        if (rlp::det(r) == 0)
            throw FrameError("flag frame is degenerate");  // impossible for centered input
        src_inv_ = inverse(r);
    }

    // The unique candidate mapping src's frame onto dst's, accepted only if it
    // is unimodular on the lattice and permutes the vertex set.
    std::optional<IntMat> try_transport(const Flag& dst) const {
        RatMat cand = src_inv_ * to_rat(frames_.frame(dst));
        if (!is_integral(cand)) return std::nullopt;
        IntMat a = to_int(cand);
        Int d = rlp::det(a);
        if (d != 1 && d != -1) return std::nullopt;
        const auto& verts = p_->vertex_coords();
        for (const IntVec& u : verts) {
            IntVec img = vec_mul(u, a);
            if (!std::binary_search(verts.begin(), verts.end(), img)) return std::nullopt;
        }
        return a;
    }

  private:
    const LatticePolytope* p_;
    FlagFrameTable frames_;
    RatMat src_inv_;
};

inline AffineLatticeMap ambient_from_lattice_matrix(const IntMat& a, const Lattice& l) {
    return AffineLatticeMap::from_linear(l.basis_inverse() * to_rat(a) * to_rat(l.basis()));
}

}  // namespace detail

// The unique affine candidate sending src to dst, when it exists.
inline std::optional<AffineLatticeMap> flag_transporter(const LatticePolytope& p, const Flag& src,
                                                        const Flag& dst) {
    if (!p.is_centered()) throw NotCenteredError("flag transporters require a centered polytope");
    detail::TransporterEngine engine(p, src);
    std::optional<IntMat> a = engine.try_transport(dst);
    if (!a) return std::nullopt;
    return detail::ambient_from_lattice_matrix(*a, p.lattice());
}

// True iff the symmetry group is transitive on complete flags; the input is
// normalized first, so callers never need to center it themselves.
inline bool is_regular(const LatticePolytope& p) {
    LatticePolytope q = p.is_centered() ? p : normalize(p).first;
    Flag first;
    q.visit_flags([&first](const Flag& f) {
        first = f;
        return false;
    });
    detail::TransporterEngine engine(q, first);
    return q.visit_flags([&engine](const Flag& f) { return engine.try_transport(f).has_value(); });
}

namespace detail {

// Greedy generating subset: walk the elements in order, keeping those not yet
// generated, maintaining the closure of the kept set incrementally.
inline std::vector<std::size_t> generating_subset(const std::vector<IntMat>& mats) {
    std::vector<std::size_t> gens;
    if (mats.empty()) return gens;
    auto key = [](const IntMat& m) {
        IntVec k;
        k.reserve(m.rows() * m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
        return k;
    };
    std::set<IntVec> generated;
    std::vector<IntMat> closure;
    const std::size_t n = mats[0].rows();
    IntMat id = IntMat::identity(n);
    generated.insert(key(id));
    closure.push_back(id);
    std::vector<IntMat> gen_mats;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (generated.count(key(mats[i]))) continue;
        gens.push_back(i);
        gen_mats.push_back(mats[i]);
        // Extend the closure: everything already generated must be multiplied
        // by the new generator set again.
        std::vector<IntMat> frontier = closure;
        while (!frontier.empty()) {
            std::vector<IntMat> next;
            for (const IntMat& x : frontier)
                for (const IntMat& g : gen_mats) {
                    IntMat y = x * g;
                    if (generated.insert(key(y)).second) {
                        closure.push_back(y);
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
        if (generated.size() >= mats.size()) break;
    }
    return gens;
}

}  // namespace detail

// The full symmetry group, as the set of transporters from a reference flag.
inline IsomGroup isom_group(const LatticePolytope& p) {
    if (!p.is_centered()) {
        auto [q, w] = normalize(p);
        IsomGroup inner = isom_group(q);
        AffineLatticeMap winv = inverse(w.map);
        IsomGroup out;
        out.generators = inner.generators;
        out.elements.reserve(inner.elements.size());
        for (const AffineLatticeMap& g : inner.elements)
            out.elements.push_back(compose(compose(w.map, g), winv));
        return out;
    }
    Flag first;
    p.visit_flags([&first](const Flag& f) {
        first = f;
        return false;
    });
    detail::TransporterEngine engine(p, first);
    std::vector<IntMat> mats;
    p.visit_flags([&engine, &mats](const Flag& f) {
        std::optional<IntMat> a = engine.try_transport(f);
        if (a) mats.push_back(std::move(*a));
        return true;
    });
    IsomGroup out;
    out.elements.reserve(mats.size());
    for (const IntMat& a : mats)
        out.elements.push_back(detail::ambient_from_lattice_matrix(a, p.lattice()));
    // Identity is the transporter to the reference flag itself, so the set is
    // nonempty; find generators on the lattice-coordinate matrices.
    std::vector<std::size_t> gens = detail::generating_subset(mats);
    out.generators = std::move(gens);
    return out;
}

// True iff the orbit of one (hence any) vertex under the given linear maps is
// exactly the vertex set.
inline bool vertex_orbit_check(const LatticePolytope& p, const std::vector<RatMat>& generators) {
    std::set<RatVec> target(p.vertices().begin(), p.vertices().end());
    std::set<RatVec> orbit{p.vertices().front()};
    std::vector<RatVec> frontier{p.vertices().front()};
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const RatVec& x : frontier)
            for (const RatMat& g : generators) {
                RatVec y = vec_mul(x, g);
                if (orbit.insert(y).second) {
                    if (!target.count(y)) return false;  // escaped the vertex set
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return orbit == target;
}

}  // namespace rlp
