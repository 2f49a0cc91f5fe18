// Full-dimensional lattice polytopes: exact hulls with facet inequalities in
// lattice coordinates, the face lattice, complete flags, centered/primitive
// normalization, and lattice-point counting.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "rlp/affine.hpp"
#include "rlp/hull.hpp"
#include "rlp/lattice.hpp"

namespace rlp {

// Facet inequality offset + <normal, u> >= 0 on lattice-basis coordinates u;
// the normal is a primitive vector of the dual lattice written in the dual of
// the lattice basis. Vertex indices refer to the polytope's canonical order.
struct Facet {
    IntVec normal;
    Int offset;
    std::vector<int> vertices;
};

struct FaceLattice {
    // faces[d] = faces of dimension d (0..n-1), each a sorted vertex-index set.
    std::vector<std::vector<std::vector<int>>> faces;
    // up[d][i] = indices into faces[d+1] of the faces containing faces[d][i].
    std::vector<std::vector<std::vector<int>>> up;

    std::size_t count(std::size_t d) const { return faces[d].size(); }
};

// A complete flag: one face index per dimension 0..n-1, increasing chain.
using Flag = std::vector<int>;

class LatticePolytope {
  public:
    LatticePolytope(const Lattice& lattice, const std::vector<RatVec>& points)
        : d_(std::make_shared<Data>(lattice)) {
        if (points.empty()) throw DegenerateError("no points given");
        std::set<IntVec> coords;
        for (const RatVec& p : points) {
            if (p.size() != lattice.dim()) throw FormatError("point dimension mismatch");
            coords.insert(lattice.member_coords(p));  // throws NotLatticePointError
        }
        init(std::vector<IntVec>(coords.begin(), coords.end()));
    }

    // Points already in lattice-basis coordinates.
    static LatticePolytope from_lattice_coords(const Lattice& lattice, const std::vector<IntVec>& pts) {
        LatticePolytope p{std::make_shared<Data>(lattice)};
        std::set<IntVec> coords(pts.begin(), pts.end());
        p.init(std::vector<IntVec>(coords.begin(), coords.end()));
        return p;
    }

    const Lattice& lattice() const { return d_->lattice; }
    std::size_t dim() const { return d_->lattice.dim(); }

    // Vertices in ambient coordinates, canonical (lattice-coordinate lex) order.
    const std::vector<RatVec>& vertices() const { return d_->verts_ambient; }
    // The same vertices in lattice-basis coordinates.
    const std::vector<IntVec>& vertex_coords() const { return d_->verts; }
    std::size_t vertex_count() const { return d_->verts.size(); }

    const std::vector<Facet>& facets() const { return d_->facets; }

    const FaceLattice& face_lattice() const {
        std::call_once(d_->face_once, [this] { d_->face.reset(new FaceLattice(build_faces())); });
        return *d_->face;
    }

    bool operator==(const LatticePolytope& o) const {
        return d_->lattice == o.d_->lattice && d_->verts == o.d_->verts;
    }
    bool operator!=(const LatticePolytope& o) const { return !(*this == o); }

    RatVec barycenter() const {
        RatVec b(dim(), Rat(0));
        for (const RatVec& v : d_->verts_ambient) b = vec_add(b, v);
        return vec_scale(b, Rat(1, long(d_->verts.size())));
    }

    bool is_centered() const { return is_zero(barycenter()); }

    // No integer d >= 2 divides every vertex coordinate (lattice basis).
    bool is_primitive() const { return vertex_content() == 1; }

    Int vertex_content() const {
        Int g = 0;
        for (const IntVec& u : d_->verts) g = gcd(g, content(u));
        return g;
    }

    bool contains(const RatVec& ambient_point) const {
        RatVec u = d_->lattice.to_coords(ambient_point);
        for (const Facet& f : d_->facets) {
            if (dot(u, f.normal) + Rat(f.offset) < 0) return false;
        }
        return true;
    }

    // True when the origin satisfies every facet inequality strictly.
    bool origin_interior() const {
        for (const Facet& f : d_->facets)
            if (f.offset <= 0) return false;
        return true;
    }

    Int lattice_point_count() const;

    // Lattice points on a closed edge; count() uses the first edge, counts()
    // returns the sorted per-edge list.
    Int edge_point_count() const { return edge_point_counts().front(); }
    std::vector<Int> edge_point_counts() const {
        const FaceLattice& fl = face_lattice();
        std::vector<Int> out;
        if (dim() == 1) {  // the polytope itself is the only segment
            out.push_back(content(vec_sub(d_->verts[1], d_->verts[0])) + 1);
            return out;
        }
        for (const auto& e : fl.faces[1]) {
            IntVec diff = vec_sub(d_->verts[e[1]], d_->verts[e[0]]);
            out.push_back(content(diff) + 1);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // The face spanned by the given vertices, as a polytope of its own
    // dimension over the induced (saturated) lattice, the first vertex at the
    // origin. Coordinates are taken in the Hermite basis of lattice ∩ span(F).
    LatticePolytope face_subpolytope(const std::vector<int>& face_vertices) const;

    // Direction lattice of a face: Hermite basis (rows, in lattice coords) of
    // lattice ∩ linear span of (face - first vertex).
    IntMat face_direction_basis(const std::vector<int>& face_vertices) const;

    // All complete flags (face index per dimension).
    std::vector<Flag> flags() const {
        std::vector<Flag> out;
        visit_flags([&out](const Flag& f) {
            out.push_back(f);
            return true;
        });
        return out;
    }

    // Calls fn on each flag until it returns false; returns false if stopped.
    template <class Fn>
    bool visit_flags(Fn&& fn) const;

    // Flag count by dynamic programming up the face poset (independent of the
    // chain enumeration; the two must agree).
    Int flag_count() const {
        const FaceLattice& fl = face_lattice();
        const std::size_t n = fl.faces.size();
        std::vector<Int> chains(fl.count(n - 1), Int(1));
        for (std::size_t d = n - 1; d-- > 0;) {
            std::vector<Int> next(fl.count(d), Int(0));
            for (std::size_t i = 0; i < fl.count(d); ++i)
                for (int j : fl.up[d][i]) next[i] += chains[j];
            chains = std::move(next);
        }
        Int total = 0;
        for (const Int& c : chains) total += c;
        return total;
    }

  private:
    struct Data {
        explicit Data(const Lattice& l) : lattice(l) {}
        Lattice lattice;
        std::vector<IntVec> verts;          // lattice coords, lex sorted
        std::vector<RatVec> verts_ambient;  // same order
        std::vector<Facet> facets;
        mutable std::once_flag face_once;
        mutable std::unique_ptr<FaceLattice> face;
    };

    explicit LatticePolytope(std::shared_ptr<Data> d) : d_(std::move(d)) {}

    void init(std::vector<IntVec> distinct_points);
    FaceLattice build_faces() const;

    std::shared_ptr<Data> d_;
};

inline void LatticePolytope::init(std::vector<IntVec> pts) {
    HullResult h = dd_hull(pts);  // throws DegenerateError on low-dim span
    std::map<int, int> vertex_rank;
    d_->verts.reserve(h.vertices.size());
    for (int idx : h.vertices) d_->verts.push_back(pts[idx]);
    std::sort(d_->verts.begin(), d_->verts.end());
    for (int idx : h.vertices) {
        const IntVec& u = pts[idx];
        int r = int(std::lower_bound(d_->verts.begin(), d_->verts.end(), u) - d_->verts.begin());
        vertex_rank[idx] = r;
    }
    d_->verts_ambient.reserve(d_->verts.size());
    for (const IntVec& u : d_->verts) d_->verts_ambient.push_back(d_->lattice.from_coords(u));
    d_->facets.reserve(h.facets.size());
    for (HullFacet& hf : h.facets) {
        Facet f;
        f.normal = std::move(hf.normal);
        f.offset = std::move(hf.offset);
        for (int idx : hf.tight) {
            auto it = vertex_rank.find(idx);
            if (it != vertex_rank.end()) f.vertices.push_back(it->second);
        }
        std::sort(f.vertices.begin(), f.vertices.end());
        d_->facets.push_back(std::move(f));
    }
}

inline FaceLattice LatticePolytope::build_faces() const {
    const std::size_t n = dim();
    const std::size_t nv = d_->verts.size();

    // Faces are exactly the intersections of facet vertex sets (plus the whole
    // polytope, excluded here); close the facet sets under intersection.
    std::vector<std::set<int>> facet_sets;
    for (const Facet& f : d_->facets) facet_sets.emplace_back(f.vertices.begin(), f.vertices.end());

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    for (const Facet& f : d_->facets)
        if (seen.insert(f.vertices).second) work.push_back(f.vertices);
    for (std::size_t head = 0; head < work.size(); ++head) {
        std::vector<int> cur = work[head];  // copy: work may reallocate
        for (const auto& fs : facet_sets) {
            std::vector<int> inter;
            for (int v : cur)
                if (fs.count(v)) inter.push_back(v);
            if (inter.empty() || inter.size() == cur.size()) continue;
            if (seen.insert(inter).second) work.push_back(std::move(inter));
        }
    }

    // Grade by affine dimension.
    FaceLattice fl;
    fl.faces.assign(n, {});
    for (const auto& face : seen) {
        RatMat dirs(face.size() - 1, n);
        for (std::size_t i = 1; i < face.size(); ++i) {
            IntVec diff = vec_sub(d_->verts[face[i]], d_->verts[face[0]]);
            for (std::size_t j = 0; j < n; ++j) dirs(i - 1, j) = Rat(diff[j]);
        }
        std::size_t d = face.size() == 1 ? 0 : rank(dirs);
        fl.faces[d].push_back(face);
    }
    for (auto& level : fl.faces) std::sort(level.begin(), level.end());

    // Sanity: every vertex appears as a 0-face.
    if (fl.faces[0].size() != nv) throw DegenerateError("face closure missed a vertex");

    fl.up.assign(n, {});
    for (std::size_t d = 0; d + 1 < n; ++d) {
        fl.up[d].assign(fl.count(d), {});
        for (std::size_t i = 0; i < fl.count(d); ++i) {
            const auto& lo = fl.faces[d][i];
            for (std::size_t j = 0; j < fl.count(d + 1); ++j) {
                const auto& hi = fl.faces[d + 1][j];
                if (std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()))
                    fl.up[d][i].push_back(int(j));
            }
        }
    }
    if (n >= 1) fl.up[n - 1].assign(fl.count(n - 1), {});
    return fl;
}

template <class Fn>
bool LatticePolytope::visit_flags(Fn&& fn) const {
    const FaceLattice& fl = face_lattice();
    const std::size_t n = fl.faces.size();
    Flag flag(n);
    // Depth-first over the up-links, vertices outermost.
    auto rec = [&](auto&& self, std::size_t d) -> bool {
        if (d + 1 == n) return fn(const_cast<const Flag&>(flag));
        for (int j : fl.up[d][flag[d]]) {
            flag[d + 1] = j;
            if (!self(self, d + 1)) return false;
        }
        return true;
    };
    for (std::size_t v = 0; v < fl.count(0); ++v) {
        flag[0] = int(v);
        if (n == 1) {
            if (!fn(const_cast<const Flag&>(flag))) return false;
        } else if (!rec(rec, 0)) {
            return false;
        }
    }
    return true;
}

inline Int LatticePolytope::lattice_point_count() const {
    const std::size_t n = dim();
    const auto& facets = d_->facets;
    // Bounding box in lattice coordinates.
    IntVec lo = d_->verts[0], hi = d_->verts[0];
    for (const IntVec& u : d_->verts)
        for (std::size_t j = 0; j < n; ++j) {
            if (u[j] < lo[j]) lo[j] = u[j];
            if (u[j] > hi[j]) hi[j] = u[j];
        }
    // For pruning: the best (largest) achievable contribution of coordinates
    // j..n-1 to each facet inequality.
    std::vector<std::vector<Int>> best_rest(facets.size(), std::vector<Int>(n + 1, Int(0)));
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (std::size_t j = n; j-- > 0;) {
            const Int& w = facets[f].normal[j];
            best_rest[f][j] = best_rest[f][j + 1] + (w > 0 ? w * hi[j] : w * lo[j]);
        }
    Int count = 0;
    std::vector<Int> partial(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) partial[f] = facets[f].offset;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            ++count;  // all inequalities already checked exactly
            return;
        }
        for (Int x = lo[j]; x <= hi[j]; ++x) {
            bool ok = true;
            for (std::size_t f = 0; f < facets.size() && ok; ++f) {
                Int p = partial[f] + facets[f].normal[j] * x;
                if (p + best_rest[f][j + 1] < 0) ok = false;
            }
            if (!ok) continue;
            std::vector<Int> saved = partial;
            for (std::size_t f = 0; f < facets.size(); ++f) partial[f] += facets[f].normal[j] * x;
            self(self, j + 1);
            partial = std::move(saved);
        }
    };
    rec(rec, 0);
    return count;
}

inline IntMat LatticePolytope::face_direction_basis(const std::vector<int>& face_vertices) const {
    const std::size_t n = dim();
    IntMat diffs(face_vertices.size() - 1, n);
    for (std::size_t i = 1; i < face_vertices.size(); ++i) {
        IntVec d0 = vec_sub(d_->verts[face_vertices[i]], d_->verts[face_vertices[0]]);
        for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = d0[j];
    }
    // Saturate: lattice ∩ Q-span = double orthogonal-complement kernel.
    IntMat k = left_kernel(diffs.transpose());
    return left_kernel(k.transpose());
}

inline LatticePolytope LatticePolytope::face_subpolytope(const std::vector<int>& face_vertices) const {
    if (face_vertices.size() < 2)
        return LatticePolytope::from_lattice_coords(Lattice::standard(0), {IntVec{}});
    IntMat basis = face_direction_basis(face_vertices);
    const std::size_t d = basis.rows();
    // Express each vertex offset in the face basis: solve c * basis = diff.
    RatMat bt = to_rat(basis).transpose();
    RatMat gram = to_rat(basis) * bt;
    RatMat ginv = inverse(gram);
    std::vector<IntVec> pts;
    for (int vi : face_vertices) {
        IntVec diff = vec_sub(d_->verts[vi], d_->verts[face_vertices[0]]);
        RatVec c = vec_mul(vec_mul(to_rat(diff), bt), ginv);
        pts.push_back(to_int(c));
    }
    return LatticePolytope::from_lattice_coords(Lattice::standard(d), pts);
}

// Convenience hull entry point over an explicit lattice.
inline LatticePolytope hull(const std::vector<RatVec>& points, const Lattice& l) {
    return LatticePolytope(l, points);
}

struct NormalizationWitness {
    AffineLatticeMap map;
};

// Center at the vertex barycenter and divide out the largest integer
// homothety; the witness maps the input onto the output: x -> r*(x - b).
inline std::pair<LatticePolytope, NormalizationWitness> normalize(const LatticePolytope& p) {
    const std::size_t n = p.dim();
    const Lattice& l = p.lattice();
    RatVec b = p.barycenter();
    RatVec bc = l.to_coords(b);
    // Least positive integer m with m*b in the lattice.
    Int m = 1;
    for (const Rat& x : bc) m = lcm(m, x.get_den());
    std::vector<IntVec> shifted;
    shifted.reserve(p.vertex_count());
    IntVec mb(n);
    for (std::size_t j = 0; j < n; ++j) mb[j] = Rat(bc[j] * m).get_num();
    Int g = 0;
    for (const IntVec& u : p.vertex_coords()) {
        IntVec w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = m * u[j] - mb[j];
        g = gcd(g, content(w));
        shifted.push_back(std::move(w));
    }
    if (g == 0) g = 1;  // single-point degenerate guard (not reachable for valid P)
    for (IntVec& w : shifted)
        for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    LatticePolytope out = LatticePolytope::from_lattice_coords(l, shifted);
    Rat ratio(m, g);
    ratio.canonicalize();
    RatVec t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = -ratio * b[j];
    NormalizationWitness w{AffineLatticeMap(RatMat::identity(n), std::move(t), ratio)};
    return {out, w};
}

inline bool is_centered(const LatticePolytope& p) { return p.is_centered(); }
inline bool is_primitive(const LatticePolytope& p) { return p.is_primitive(); }

}  // namespace rlp
