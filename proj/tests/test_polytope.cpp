#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "rlp/polytope.hpp"

using namespace rlp;

namespace {

std::vector<RatVec> rat_points(const std::vector<std::vector<int>>& pts) {
    std::vector<RatVec> out;
    for (const auto& p : pts) {
        RatVec v(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) v[i] = Rat(p[i]);
        out.push_back(v);
    }
    return out;
}

// The six vertices of the regular lattice hexagon in fundamental-weight
// coordinates of the rank-2 system with Cartan matrix [[2,-1],[-1,2]].
std::vector<std::vector<int>> hexagon_pts() {
    return {{1, 1}, {-1, 2}, {2, -1}, {-2, 1}, {1, -2}, {-1, -1}};
}

std::vector<std::vector<int>> cube_pts(int n, int k) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i & 1) ? k : -k;
        out.push_back(p);
    }
    return out;
}

// Affine rank of a vertex-index subset of P.
std::size_t affine_rank(const LatticePolytope& p, const std::vector<int>& idx) {
    if (idx.size() <= 1) return 0;
    RatMat dirs(idx.size() - 1, p.dim());
    for (std::size_t i = 1; i < idx.size(); ++i) {
        IntVec d = vec_sub(p.vertex_coords()[idx[i]], p.vertex_coords()[idx[0]]);
        for (std::size_t j = 0; j < p.dim(); ++j) dirs(i - 1, j) = Rat(d[j]);
    }
    return rank(dirs);
}

}  // namespace

TEST_CASE("hull of a square, extreme points only") {
    Lattice z2 = Lattice::standard(2);
    LatticePolytope p = hull(rat_points({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), z2);
    CHECK(p.vertex_count() == 4);
    CHECK(p.facets().size() == 4);

    // An interior point changes nothing.
    LatticePolytope q = hull(rat_points({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}}), z2);
    CHECK(q == p);

    // A boundary non-extreme point changes nothing either.
    LatticePolytope r = hull(rat_points({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {1, 0}}), z2);
    CHECK(r == p);
}

TEST_CASE("hull rejects bad input") {
    Lattice z2 = Lattice::standard(2);
    CHECK_THROWS_AS(hull(rat_points({{0, 0}, {1, 0}, {2, 0}}), z2), DegenerateError);
    CHECK_THROWS_AS(hull({RatVec{Rat(1, 2), Rat(0)}, RatVec{Rat(0), Rat(1)}, RatVec{Rat(1), Rat(1)}}, z2),
                    NotLatticePointError);
    Lattice even2(IntMat{{2, 0}, {0, 2}});
    CHECK_THROWS_AS(hull(rat_points({{1, 1}, {2, 0}, {0, 2}}), even2), NotLatticePointError);
}

TEST_CASE("hull is idempotent on its own vertices") {
    Lattice z2 = Lattice::standard(2);
    LatticePolytope p = hull(rat_points(hexagon_pts()), z2);
    LatticePolytope q = hull(p.vertices(), z2);
    CHECK(p == q);
}

TEST_CASE("facet inequalities are valid, tight, and primitive") {
    Lattice z3 = Lattice::standard(3);
    std::vector<LatticePolytope> batch = {
        hull(rat_points(cube_pts(3, 1)), z3),
        hull(rat_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}), z3),
        hull(rat_points({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}, {0, 0, -1}, {-1, -1, 0}}), z3),
    };
    for (const LatticePolytope& p : batch) {
        const std::size_t n = p.dim();
        for (const Facet& f : p.facets()) {
            CHECK(content(f.normal) == 1);
            std::vector<int> tight;
            for (std::size_t v = 0; v < p.vertex_count(); ++v) {
                Int s = dot(p.vertex_coords()[v], f.normal) + f.offset;
                CHECK(s >= 0);
                if (s == 0) tight.push_back(int(v));
            }
            CHECK(tight == f.vertices);
            CHECK(tight.size() >= n);
            CHECK(affine_rank(p, tight) == n - 1);
        }
    }
}

TEST_CASE("hexagon: six vertices, six edges, twelve flags") {
    Lattice z2 = Lattice::standard(2);
    LatticePolytope p = hull(rat_points(hexagon_pts()), z2);
    CHECK(p.vertex_count() == 6);
    CHECK(p.facets().size() == 6);
    const FaceLattice& fl = p.face_lattice();
    CHECK(fl.count(0) == 6);
    CHECK(fl.count(1) == 6);
    CHECK(p.flag_count() == 12);
    CHECK(p.flags().size() == 12);
}

TEST_CASE("3-cube: face counts, Euler relation, 48 flags") {
    Lattice z3 = Lattice::standard(3);
    LatticePolytope p = hull(rat_points(cube_pts(3, 1)), z3);
    const FaceLattice& fl = p.face_lattice();
    CHECK(fl.count(0) == 8);
    CHECK(fl.count(1) == 12);
    CHECK(fl.count(2) == 6);
    CHECK(fl.count(0) - fl.count(1) + fl.count(2) == 2);  // Euler for 3-polytopes
    CHECK(p.flag_count() == 48);
    CHECK(p.flags().size() == 48);
    // Every edge lies in exactly two facets of a 3-polytope.
    for (const auto& ups : fl.up[1]) CHECK(ups.size() == 2);
}

TEST_CASE("4-cube flags both ways") {
    Lattice z4 = Lattice::standard(4);
    LatticePolytope p = hull(rat_points(cube_pts(4, 1)), z4);
    CHECK(p.flag_count() == 384);  // 2^4 * 4!  chains
    CHECK(p.flags().size() == 384);
}

TEST_CASE("barycenter") {
    Lattice z2 = Lattice::standard(2);
    LatticePolytope sq = hull(rat_points(cube_pts(2, 1)), z2);
    CHECK(is_zero(sq.barycenter()));
    LatticePolytope tri = hull(rat_points({{0, 0}, {1, 0}, {0, 1}}), z2);
    CHECK(tri.barycenter() == RatVec{Rat(1, 3), Rat(1, 3)});
    LatticePolytope hex = hull(rat_points(hexagon_pts()), z2);
    CHECK(is_zero(hex.barycenter()));
}

TEST_CASE("centered and primitive predicates") {
    Lattice z2 = Lattice::standard(2);
    LatticePolytope sq1 = hull(rat_points(cube_pts(2, 1)), z2);
    CHECK(sq1.is_centered());
    CHECK(sq1.is_primitive());

    LatticePolytope sq2 = hull(rat_points(cube_pts(2, 2)), z2);
    CHECK(sq2.is_centered());
    CHECK_FALSE(sq2.is_primitive());

    // Doubled cube over the doubled lattice: coordinates are +-1 there, so it
    // is primitive even though its ambient coordinates are all even.
    Lattice even3(IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    LatticePolytope c1 = hull(rat_points(cube_pts(3, 2)), even3);
    CHECK(c1.is_primitive());
    CHECK(c1.is_centered());
}

TEST_CASE("normalization: translate then divide") {
    Lattice z2 = Lattice::standard(2);
    LatticePolytope shifted = hull(rat_points({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), z2);
    auto [p, w] = normalize(shifted);
    CHECK(p == hull(rat_points(cube_pts(2, 1)), z2));
    CHECK(w.map.homothety_ratio == 1);
    CHECK(w.map.translation == RatVec{Rat(-1), Rat(-1)});
    // The witness carries input vertices onto output vertices.
    LatticePolytope image = hull(w.map.apply(shifted.vertices()), z2);
    CHECK(image == p);

    // Already centered and primitive: identity witness.
    auto [p2, w2] = normalize(p);
    CHECK(p2 == p);
    CHECK(w2.map.is_identity());

    // Homothety division step: a tripled hexagon reports ratio 1/3.
    std::vector<RatVec> big;
    for (const auto& q : rat_points(hexagon_pts())) big.push_back(vec_scale(q, Rat(3)));
    auto [hex, w3] = normalize(hull(big, z2));
    CHECK(hex == hull(rat_points(hexagon_pts()), z2));
    CHECK(w3.map.homothety_ratio == Rat(1, 3));

    // Idempotence.
    auto [hex2, w4] = normalize(hex);
    CHECK(hex2 == hex);
    CHECK(w4.map.is_identity());
}

TEST_CASE("lattice point counts") {
    // Doubled 3-cube over the doubled grid: 3^3 points of that lattice.
    Lattice even3(IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    LatticePolytope c1 = hull(rat_points(cube_pts(3, 2)), even3);
    CHECK(c1.lattice_point_count() == 27);

    // Unit cube over the unit grid: also 27.
    Lattice z3 = Lattice::standard(3);
    CHECK(hull(rat_points(cube_pts(3, 1)), z3).lattice_point_count() == 27);

    // Hexagon over the full weight lattice: 13 points; over the root lattice
    // (spanned by the Cartan rows): 7.
    Lattice z2 = Lattice::standard(2);
    LatticePolytope hex_w = hull(rat_points(hexagon_pts()), z2);
    CHECK(hex_w.lattice_point_count() == 13);
    Lattice root2(IntMat{{2, -1}, {-1, 2}});
    LatticePolytope hex_r = hull(rat_points(hexagon_pts()), root2);
    CHECK(hex_r.lattice_point_count() == 7);

    // Triangle with interior structure.
    LatticePolytope tri = hull(rat_points({{0, 0}, {3, 0}, {0, 3}}), z2);
    CHECK(tri.lattice_point_count() == 10);
}

TEST_CASE("lattice point count is unimodular-invariant") {
    Lattice z3 = Lattice::standard(3);
    LatticePolytope p = hull(rat_points(cube_pts(3, 1)), z3);
    RatMat shear{{1, 2, 0}, {0, 1, 0}, {1, 0, 1}};
    std::vector<RatVec> mapped;
    for (const RatVec& v : p.vertices()) mapped.push_back(vec_mul(v, shear));
    LatticePolytope q = hull(mapped, z3);
    CHECK(q.lattice_point_count() == p.lattice_point_count());
    CHECK(q.flag_count() == p.flag_count());
}

TEST_CASE("edge point counts") {
    Lattice even3(IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    LatticePolytope c1 = hull(rat_points(cube_pts(3, 2)), even3);
    CHECK(c1.edge_point_count() == 3);  // edge vector is twice a primitive one

    // Over the unit grid the same cube's edges have midpoints.
    Lattice z3 = Lattice::standard(3);
    LatticePolytope c = hull(rat_points(cube_pts(3, 1)), z3);
    CHECK(c.edge_point_count() == 3);

    // Over the all-coordinates-congruent lattice the edges are primitive.
    Lattice congr3(IntMat{{1, 1, 1}, {0, 2, 0}, {0, 0, 2}});
    LatticePolytope c2 = hull(rat_points(cube_pts(3, 1)), congr3);
    auto counts = c2.edge_point_counts();
    CHECK(counts.size() == 12);
    CHECK(std::all_of(counts.begin(), counts.end(), [](const Int& x) { return x == 2; }));

    // Dimension 1: a segment is its own edge.
    Lattice z1 = Lattice::standard(1);
    LatticePolytope seg = hull(rat_points({{-2}, {2}}), z1);
    CHECK(seg.edge_point_count() == 5);
}

TEST_CASE("face subpolytopes") {
    Lattice even3(IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    LatticePolytope c1 = hull(rat_points(cube_pts(3, 2)), even3);
    const FaceLattice& fl = c1.face_lattice();
    REQUIRE(fl.count(2) == 6);

    // Every facet of the doubled cube is a doubled square.
    for (const auto& f : fl.faces[2]) {
        LatticePolytope face = c1.face_subpolytope(f);
        CHECK(face.dim() == 2);
        CHECK(face.vertex_count() == 4);
        auto [norm, w] = normalize(face);
        CHECK(norm.vertex_coords() ==
              std::vector<IntVec>{{Int(-1), Int(-1)}, {Int(-1), Int(1)}, {Int(1), Int(-1)}, {Int(1), Int(1)}});
    }

    // Edges keep their lattice point count.
    for (const auto& e : fl.faces[1]) {
        LatticePolytope edge = c1.face_subpolytope(e);
        CHECK(edge.dim() == 1);
        CHECK(edge.edge_point_count() == 3);
    }
}

TEST_CASE("containment and interior") {
    Lattice z2 = Lattice::standard(2);
    LatticePolytope hex = hull(rat_points(hexagon_pts()), z2);
    CHECK(hex.contains(RatVec{Rat(0), Rat(0)}));
    CHECK(hex.contains(RatVec{Rat(1), Rat(1)}));
    CHECK(hex.contains(RatVec{Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(hex.contains(RatVec{Rat(2), Rat(2)}));
    CHECK(hex.origin_interior());

    LatticePolytope tri = hull(rat_points({{0, 0}, {1, 0}, {0, 1}}), z2);
    CHECK_FALSE(tri.origin_interior());  // the origin is a vertex
}
