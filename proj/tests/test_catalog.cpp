#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rlp/catalog.hpp"
#include "rlp/duality.hpp"

using namespace rlp;

namespace {

// A random matrix of determinant +-1 produced by composing elementary row
// operations, rejecting growth beyond the entry bound.
IntMat random_unimodular(std::size_t n, std::mt19937& rng, long bound) {
    IntMat m = IntMat::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int step = 0; step < 40; ++step) {
        std::size_t i = pick(rng), j = pick(rng);
        int c = coef(rng);
        if (i == j || c == 0) continue;
        IntMat next = m;
        for (std::size_t k = 0; k < n; ++k) next(i, k) += Int(c) * m(j, k);
        bool small = true;
        for (std::size_t r = 0; r < n && small; ++r)
            for (std::size_t k = 0; k < n; ++k)
                if (abs(next(r, k)) > bound) {
                    small = false;
                    break;
                }
        if (small) m = next;
    }
    return m;
}

std::set<std::vector<Rat>> vertex_set(const LatticePolytope& p) {
    std::set<std::vector<Rat>> s;
    for (const RatVec& v : p.vertices()) s.insert(v);
    return s;
}

std::string classify_family(const LatticePolytope& p) {
    ClassificationResult r = classify(p);
    REQUIRE(r.matched());
    return r.entry->family;
}

}  // namespace

TEST_CASE("entry construction validates its parameters") {
    CHECK_THROWS_AS(make_entry("S3", 3), BadEntryError);   // 3 does not divide 4
    CHECK_THROWS_AS(make_entry("S0", 4), BadEntryError);
    CHECK_THROWS_AS(make_entry("C3", 2), BadEntryError);
    CHECK_THROWS_AS(make_entry("CC1", 2), BadEntryError);
    CHECK_THROWS_AS(make_entry("H1", 3), BadEntryError);
    CHECK_THROWS_AS(make_entry("D1", 3), BadEntryError);
    CHECK_THROWS_AS(make_entry("D2", 5), BadEntryError);
    CHECK_THROWS_AS(make_entry("Q7", 3), BadEntryError);
    CHECK_THROWS_AS(make_entry("C1", 1), BadEntryError);
    CHECK_THROWS_AS(table(1), UnsupportedDimensionError);
}

TEST_CASE("table sizes per dimension") {
    CHECK(table(2).size() == 6);
    CHECK(table(3).size() == 9);
    CHECK(table(4).size() == 10);
    CHECK(table(5).size() == 10);
    CHECK(table(6).size() == 8);
}

TEST_CASE("simplex point counts match direct polytope enumeration") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t d = 1; d <= n + 1; ++d) {
            if ((n + 1) % d != 0) continue;
            CAPTURE(n, d);
            CHECK(simplex_count(n, d) ==
                  build(make_entry("S" + std::to_string(d), n)).lattice_point_count());
        }
    }
    CHECK(simplex_count(2, 1) == 4);
    CHECK(simplex_count(3, 2) == 11);
    CHECK(simplex_count(4, 5) == 126);
    CHECK(simplex_count(5, 3) == 57);
    CHECK_THROWS_AS(simplex_count(4, 3), BadEntryError);
}

TEST_CASE("every table entry classifies back to itself") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const CatalogEntry& e : table(n)) {
            CAPTURE(e.name());
            LatticePolytope p = build(e);
            ClassificationResult r = classify(p);
            REQUIRE(r.matched());
            CHECK(same_class(*r.entry, e));
        }
    }
}

TEST_CASE("classification witness maps vertices onto the canonical model") {
    for (const char* fam : {"S2", "C2", "C3", "CC1", "CC3"}) {
        CatalogEntry e = make_entry(fam, 3);
        CAPTURE(e.name());
        LatticePolytope p = build(e);
        ClassificationResult r = classify(p);
        REQUIRE(r.matched());
        std::set<std::vector<Rat>> image;
        for (const RatVec& v : p.vertices()) image.insert(r.witness.apply(v));
        CHECK(image == vertex_set(build(*r.entry)));
    }
}

TEST_CASE("classification is invariant under lattice symmetries and scaling") {
    std::mt19937 rng(20260825);
    std::vector<CatalogEntry> pool;
    for (std::size_t n = 2; n <= 4; ++n)
        for (const CatalogEntry& e : table(n)) pool.push_back(e);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> shift(-4, 4);
    std::uniform_int_distribution<int> scale(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        const CatalogEntry& e = pool[pick(rng)];
        CAPTURE(trial, e.name());
        LatticePolytope p = build(e);
        const std::size_t n = p.dim();
        IntMat u = random_unimodular(n, rng, 3);
        Int m(scale(rng));
        IntVec t(n);
        for (auto& x : t) x = Int(shift(rng));
        std::vector<IntVec> moved;
        for (const IntVec& v : p.vertex_coords()) {
            IntVec w = vec_mul(v, u);
            for (std::size_t i = 0; i < n; ++i) w[i] = m * w[i] + t[i];
            moved.push_back(w);
        }
        LatticePolytope q = LatticePolytope::from_lattice_coords(p.lattice(), moved);
        ClassificationResult r = classify(q);
        REQUIRE(r.matched());
        CHECK(same_class(*r.entry, e));
        // The witness composed with normalization carries q onto the model.
        auto [norm, wit] = normalize(q);
        std::set<std::vector<Rat>> image;
        for (const RatVec& v : norm.vertices()) image.insert(r.witness.apply(v));
        CHECK(image == vertex_set(build(e)));
    }
}

TEST_CASE("degenerate and irregular inputs are reported, not matched") {
    LatticePolytope seg =
        LatticePolytope::from_lattice_coords(Lattice::standard(1), {IntVec{0}, IntVec{3}});
    CHECK(classify(seg).status == ClassificationResult::Status::regular_but_unmatched);

    LatticePolytope rect = LatticePolytope::from_lattice_coords(
        Lattice::standard(2), {IntVec{0, 0}, IntVec{2, 0}, IntVec{0, 4}, IntVec{2, 4}});
    CHECK(classify(rect).status == ClassificationResult::Status::not_regular);

    // The 24-cell over an intermediate index-two lattice: vertex-transitive
    // but not flag-transitive, so it must be rejected as irregular.
    CatalogEntry d1 = make_entry("D1", 4);
    IntMat cartan = cartan_matrix(Family::D, 4);
    IntMat gens(5, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) gens(i, j) = cartan(i, j);
    gens(4, 0) = 1;
    LatticePolytope mid = hull(build(d1).vertices(), Lattice(hnf_basis(gens)));
    CHECK(classify(mid).status == ClassificationResult::Status::not_regular);
}

TEST_CASE("computed point counts follow the closed forms") {
    for (std::size_t n = 3; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(build(make_entry("C1", n)).lattice_point_count() == detail::int_pow(3, n));
        CHECK(build(make_entry("C2", n)).lattice_point_count() == detail::int_pow(2, n) + 1);
        Int c3 = build(make_entry("C3", n)).lattice_point_count();
        if (n % 2 == 0)
            CHECK(c3 == (detail::int_pow(3, n) + 1) / 2);
        else
            CHECK(c3 == (detail::int_pow(5, n) + 1) / 2);
        CHECK(build(make_entry("CC1", n)).lattice_point_count() == 2 * Int(n) * Int(n) + 1);
        CHECK(build(make_entry("CC2", n)).lattice_point_count() == 2 * Int(n) + 1);
        CHECK(build(make_entry("CC3", n)).lattice_point_count() == 2 * Int(n) + 1);
    }
    CHECK(build(make_entry("H1", 2)).lattice_point_count() == 7);
    CHECK(build(make_entry("H2", 2)).lattice_point_count() == 13);
    CHECK(build(make_entry("D1", 4)).lattice_point_count() == 25);
    CHECK(build(make_entry("D2", 4)).lattice_point_count() == 49);
}

TEST_CASE("polar duals land on the recorded classes") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const CatalogEntry& e : table(n)) {
            CAPTURE(e.name());
            LatticePolytope p = build(e);
            CHECK(classify_family(vee_dual(p)) == e.vee_dual);
        }
    }
}

TEST_CASE("star duals pair scaled classes and fix the self-dual ones") {
    // Computed pairing; where this disagrees with the recorded star column,
    // verify_entry reports the discrepancy instead.
    std::map<std::string, std::string> expected = {
        {"C1", "CC2"}, {"C2", "CC1"}, {"C3", "CC3"},
        {"CC1", "C2"}, {"CC2", "C1"}, {"CC3", "C3"}};
    for (std::size_t n = 3; n <= 5; ++n) {
        for (const auto& [fam, dual] : expected) {
            CAPTURE(n, fam);
            CHECK(classify_family(star_dual(build(make_entry(fam, n)))) == dual);
        }
        for (std::size_t d = 1; d <= n + 1; ++d)
            if ((n + 1) % d == 0)
                CHECK(classify_family(star_dual(build(make_entry("S" + std::to_string(d), n)))) ==
                      "S" + std::to_string((n + 1) / d));
    }
    for (const char* fam : {"H1", "H2"})
        CHECK(classify_family(star_dual(build(make_entry(fam, 2)))) == fam);
    for (const char* fam : {"D1", "D2"})
        CHECK(classify_family(star_dual(build(make_entry(fam, 4)))) == fam);
}

TEST_CASE("both dualities are involutions on the catalog") {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const CatalogEntry& e : table(n)) {
            CAPTURE(e.name());
            LatticePolytope p = build(e);
            LatticePolytope vv = vee_dual(vee_dual(p));
            CHECK(LatticePolytope::from_lattice_coords(p.lattice(), vv.vertex_coords()) == p);
            LatticePolytope ss = star_dual(star_dual(p));
            CHECK(LatticePolytope::from_lattice_coords(p.lattice(), ss.vertex_coords()) == p);
        }
    }
}

TEST_CASE("facets classify to the recorded facet class") {
    for (std::size_t n = 3; n <= 5; ++n) {
        for (const CatalogEntry& e : table(n)) {
            CAPTURE(e.name());
            LatticePolytope p = build(e);
            for (const Facet& f : p.facets()) {
                ClassificationResult r = classify(face_polytope(p, f.vertices));
                REQUIRE(r.matched());
                CHECK(r.entry->family == e.facet_family);
            }
        }
    }
}

TEST_CASE("dimension-two coincidences collapse to the two squares") {
    CHECK(classify_family(vee_dual(build(make_entry("C1", 2)))) == "C2");
    CHECK(classify_family(vee_dual(build(make_entry("C2", 2)))) == "C1");
    CHECK(classify_family(star_dual(build(make_entry("C1", 2)))) == "C2");
    CHECK(make_entry("C1", 2).vee_dual == "C2");
    CHECK(make_entry("C2", 2).vee_dual == "C1");
}

TEST_CASE("entries are separated by their recorded invariants") {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::set<std::tuple<Int, Int, Int, std::string, std::string, std::string>> seen;
        for (const CatalogEntry& e : table(n)) {
            auto key = std::make_tuple(e.card, e.edge_points, e.isom_order, e.facet_family,
                                       e.vee_dual, e.star_dual);
            CAPTURE(n, e.name());
            CHECK(seen.insert(key).second);
        }
    }
    // Without the dual columns one collision exists: the two octahedra with
    // seven points.  The dual columns (and the lattices) separate them.
    CatalogEntry a = make_entry("CC2", 3), b = make_entry("CC3", 3);
    CHECK(a.card == b.card);
    CHECK(a.edge_points == b.edge_points);
    CHECK(a.isom_order == b.isom_order);
    CHECK(a.facet_family == b.facet_family);
    CHECK(a.vee_dual != b.vee_dual);
    CHECK(a.lattice != b.lattice);
}

TEST_CASE("verify_entry confirms the columns that hold and flags the rest") {
    std::map<std::string, std::set<std::string>> failing;
    for (const CatalogEntry& e : table(3)) {
        EntryReport rep = verify_entry(e);
        for (const ColumnCheck& c : rep.checks)
            if (!c.pass) failing[e.family].insert(c.column);
        if (failing.find(e.family) == failing.end()) CHECK(rep.all_pass);
    }
    // Exact arithmetic disagrees with the recorded table in exactly these
    // cells: two point counts and the star column of the scaled pairs.
    std::map<std::string, std::set<std::string>> expected = {
        {"C2", {"star-dual"}},
        {"C3", {"card", "star-dual"}},
        {"CC1", {"card", "star-dual"}},
        {"CC3", {"star-dual"}},
    };
    CHECK(failing == expected);
}

TEST_CASE("half-cube candidates join the catalog only in dimension four") {
    ExclusionTarget t;
    t.kind = ExclusionTarget::Kind::demicube;

    t.rank = 4;
    NonexistenceReport four = check_exclusion(t);
    CHECK_FALSE(four.excluded);
    CHECK(four.matched_class == "CC2^4");

    t.rank = 5;
    NonexistenceReport five = check_exclusion(t);
    CHECK(five.excluded);
    CHECK(five.facet_vertex_counts == std::vector<Int>{Int(5), Int(8)});

    t.rank = 3;
    NonexistenceReport three = check_exclusion(t);  // tetrahedron: already listed
    CHECK_FALSE(three.excluded);
    CHECK(three.matched_class == "S1^3");
}

TEST_CASE("the E6 root hull is irregular over both candidate lattices") {
    ExclusionTarget t;
    t.kind = ExclusionTarget::Kind::e_series;
    t.rank = 6;
    NonexistenceReport rep = check_exclusion(t);
    CHECK(rep.excluded);
    REQUIRE(rep.checks.size() == 2);
    CHECK_FALSE(rep.checks[0].regular);
    CHECK_FALSE(rep.checks[1].regular);

    t.rank = 7;
    CHECK_THROWS_AS(check_exclusion(t), BudgetExceededError);
    t.rank = 8;
    CHECK_THROWS_AS(check_exclusion(t), BudgetExceededError);
    t.rank = 5;
    CHECK_THROWS_AS(check_exclusion(t), BadEntryError);
}

TEST_CASE("recorded symmetry orders equal the flag counts") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const CatalogEntry& e : table(n)) {
            CAPTURE(e.name());
            LatticePolytope p = build(e);
            std::size_t flags = 0;
            p.visit_flags([&flags](const Flag&) {
                ++flags;
                return true;
            });
            CHECK(Int(static_cast<unsigned long>(flags)) == e.isom_order);
        }
    }
}
