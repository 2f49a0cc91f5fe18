// Acceptance suite: ten independent criteria, each printing one verdict line.
//
// Every criterion recomputes its expected values from scratch (closed forms,
// recorded table columns, independent enumerations) and compares them against
// the library with exact arithmetic.  Detail lines precede the verdict for
// any mismatch.  Criteria with a wall-clock budget fail when they run over
// it, even if every check passed.  Exit status is 0 iff every selected
// criterion passes.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rlp/audit2d.hpp"
#include "rlp/catalog.hpp"
#include "rlp/duality.hpp"

using namespace rlp;

namespace {

struct Tally {
    int checks = 0;
    int failures = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            detail << "    " << what << "\n";
        }
    }
    bool pass() const { return failures == 0; }
};

Int int_pow(unsigned b, std::size_t e) { return detail::int_pow(b, e); }
Int factorial(std::size_t n) { return detail::factorial(n); }

std::size_t count_flags(const LatticePolytope& p) { return detail::count_flags(p); }

std::string classify_name(const LatticePolytope& p) {
    ClassificationResult r = classify(p);
    if (r.matched()) return r.entry->name();
    return r.status == ClassificationResult::Status::not_regular ? "(not regular)"
                                                                 : "(unmatched)";
}

// ---------------------------------------------------------------------------
// Criterion 1: recorded cardinalities against exact lattice-point counts.

void criterion1(Tally& t) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const CatalogEntry& e : table(n)) {
            if (e.family[0] == 'S') continue;  // simplex counts are criterion 6
            Int expected;
            if (e.family == "C1") expected = int_pow(3, n);
            else if (e.family == "C2") expected = int_pow(2, n) + 1;
            else if (e.family == "C3")
                expected = n % 2 == 0 ? Int((int_pow(3, n) + 1) / 2)
                                      : Int((int_pow(5, n) - 1) / 2);
            else if (e.family == "CC1") expected = 4 * Int(n) * Int(n) + 1;
            else if (e.family == "CC2" || e.family == "CC3") expected = 2 * Int(n) + 1;
            else if (e.family == "H1") expected = 7;
            else if (e.family == "H2") expected = 13;
            else if (e.family == "D1") expected = 25;
            else if (e.family == "D2") expected = 81;
            Int got = build(e).lattice_point_count();
            t.expect(got == expected, e.name() + " cardinality: recorded " +
                                          expected.get_str() + ", counted " + got.get_str());
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 2: points per edge.

void criterion2(Tally& t) {
    auto check_edges = [&t](const CatalogEntry& e, const Int& expected) {
        std::vector<Int> counts = build(e).edge_point_counts();
        bool ok = !counts.empty();
        for (const Int& c : counts) ok = ok && c == expected;
        t.expect(ok, e.name() + " edge points: recorded " + expected.get_str() + ", counted " +
                         (counts.empty() ? "(none)" : counts.front().get_str()));
    };
    for (std::size_t n = 2; n <= 6; ++n)
        for (const CatalogEntry& e : table(n)) {
            if (e.family[0] == 'S') continue;
            check_edges(e, e.edge_points);
        }
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t d = 1; d <= n + 1; ++d)
            if ((n + 1) % d == 0)
                check_edges(make_entry("S" + std::to_string(d), n), Int(d + 1));
}

// ---------------------------------------------------------------------------
// Criterion 3: regularity and symmetry-group order = number of complete flags.

void criterion3(Tally& t) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const CatalogEntry& e : table(n)) {
            Int expected;
            if (e.family[0] == 'S') expected = factorial(n + 1);
            else if (e.family[0] == 'H') expected = 12;
            else if (e.family[0] == 'D') expected = 1152;
            else expected = int_pow(2, n) * factorial(n);
            LatticePolytope p = build(e);
            t.expect(is_regular(p), e.name() + " is not regular");
            Int flags(static_cast<unsigned long>(count_flags(p)));
            Int order(static_cast<unsigned long>(isom_group(p).order()));
            t.expect(flags == expected, e.name() + " flag count: expected " +
                                            expected.get_str() + ", got " + flags.get_str());
            t.expect(order == expected, e.name() + " symmetry order: expected " +
                                            expected.get_str() + ", got " + order.get_str());
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: both polar duals land on the recorded columns; both are
// involutions.

void criterion4(Tally& t) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const CatalogEntry& e : table(n)) {
            LatticePolytope p = build(e);
            std::string vee_exp = e.vee_dual + "^" + std::to_string(n);
            std::string star_exp = e.star_dual + "^" + std::to_string(n);
            std::string vee_got = classify_name(vee_dual(p));
            std::string star_got = classify_name(star_dual(p));
            t.expect(vee_got == vee_exp,
                     e.name() + " vee dual: recorded " + vee_exp + ", computed " + vee_got);
            t.expect(star_got == star_exp,
                     e.name() + " star dual: recorded " + star_exp + ", computed " + star_got);
            LatticePolytope vv = vee_dual(vee_dual(p));
            t.expect(LatticePolytope::from_lattice_coords(p.lattice(), vv.vertex_coords()) == p,
                     e.name() + " vee dual is not an involution");
            LatticePolytope ss = star_dual(star_dual(p));
            t.expect(LatticePolytope::from_lattice_coords(p.lattice(), ss.vertex_coords()) == p,
                     e.name() + " star dual is not an involution");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 5: facet classes of the cross-polytope families.

void criterion5(Tally& t) {
    auto facet_classes = [](const LatticePolytope& p) {
        std::set<std::string> names;
        for (const Facet& f : p.facets()) names.insert(classify_name(face_polytope(p, f.vertices)));
        return names;
    };
    t.expect(facet_classes(build(make_entry("CC3", 4))) == std::set<std::string>{"S2^3"},
             "CC3^4 facets must classify as S2^3");
    t.expect(facet_classes(build(make_entry("CC3", 6))) == std::set<std::string>{"S3^5"},
             "CC3^6 facets must classify as S3^5");
    for (std::size_t n = 3; n <= 6; ++n) {
        std::string expect = "S" + std::to_string(n) + "^" + std::to_string(n - 1);
        for (const char* fam : {"CC1", "CC2"}) {
            auto got = facet_classes(build(make_entry(fam, n)));
            t.expect(got == std::set<std::string>{expect},
                     std::string(fam) + "^" + std::to_string(n) + " facets must classify as " +
                         expect);
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 6: the counting formula for simplices against direct enumeration.

void criterion6(Tally& t) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t d = 1; d <= n + 1; ++d) {
            if ((n + 1) % d != 0) continue;
            CatalogEntry e = make_entry("S" + std::to_string(d), n);
            Int formula = simplex_count(n, d);
            Int direct = build(e).lattice_point_count();
            t.expect(formula == direct, e.name() + " counting formula " + formula.get_str() +
                                            " != direct count " + direct.get_str());
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 7: root-system properties of every entry.

void criterion7(Tally& t) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const CatalogEntry& e : table(n)) {
            LatticePolytope q = build(e);
            RootSystem rs;
            try {
                rs = extract_roots(q);
            } catch (const Error& err) {
                t.expect(false, e.name() + ": extract_roots failed: " + err.what());
                continue;
            }
            t.expect(rs.components == e.components,
                     e.name() + " root system type is " + to_string(rs.components) +
                         ", expected " + to_string(e.components));

            // Lattice sandwich in weight coordinates.
            Lattice lam = lattice_in_weight_coords(rs);
            Lattice rootl = root_lattice(rs);
            bool sandwich = true;
            for (std::size_t i = 0; i < n; ++i) {
                sandwich = sandwich && lam.is_member(to_rat(rootl.basis().row(i)));
                sandwich = sandwich && is_integral(to_rat(lam.basis().row(i)));
            }
            t.expect(sandwich, e.name() + " lattice is not between root and weight lattices");

            // Weyl reflections are polytope symmetries (ambient coordinates of
            // built models are the canonical weight coordinates).
            WeylGroup w = weyl_group(canonical_root_system(e.components));
            std::set<RatVec> vset(q.vertices().begin(), q.vertices().end());
            bool weyl_in_isom = true;
            std::vector<RatMat> wgens;
            for (const IntMat& g : w.generators) {
                RatMat gr = to_rat(g);
                wgens.push_back(gr);
                RatMat in_lat = linear_in_lattice_coords(gr, q.lattice());
                weyl_in_isom = weyl_in_isom && is_integral(in_lat) &&
                               abs(det(to_int(in_lat))) == 1;
                for (const RatVec& v : q.vertices())
                    weyl_in_isom = weyl_in_isom && vset.count(vec_mul(v, gr)) > 0;
            }
            t.expect(weyl_in_isom, e.name() + ": a Weyl reflection is not a symmetry");

            // Symmetries act on the root set.
            IsomGroup ig = isom_group(q);
            std::set<IntVec> rootset(rs.roots.begin(), rs.roots.end());
            bool isom_in_aut = true;
            for (std::size_t gi : ig.generators) {
                IntMat m = lattice_matrix(ig.elements[gi], q.lattice());
                for (const IntVec& r : rs.roots)
                    isom_in_aut = isom_in_aut && rootset.count(vec_mul(r, m)) > 0;
            }
            t.expect(isom_in_aut, e.name() + ": a symmetry does not permute the roots");

            t.expect(vertex_orbit_check(q, wgens),
                     e.name() + ": Weyl group is not transitive on vertices");

            // Facet root systems are the restriction of the ambient one.
            const auto& coords = q.vertex_coords();
            for (const Facet& f : q.facets()) {
                IntMat dirs(f.vertices.size() - 1, n);
                for (std::size_t i = 1; i < f.vertices.size(); ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        dirs(i - 1, j) = coords[f.vertices[i]][j] - coords[f.vertices[0]][j];
                RootSystem restricted = face_root_system(rs, dirs);
                RootSystem of_facet = extract_roots(face_polytope(q, f.vertices));
                if (!(restricted.components == of_facet.components &&
                      restricted.roots.size() == of_facet.roots.size())) {
                    t.expect(false, e.name() + ": facet root system " +
                                        to_string(of_facet.components) +
                                        " differs from the restriction " +
                                        to_string(restricted.components));
                    break;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 8: the negative checks, with their own sub-budgets.

void criterion8(Tally& t) {
    auto t0 = std::chrono::steady_clock::now();
    ExclusionTarget demi{ExclusionTarget::Kind::demicube, 5, false};
    NonexistenceReport five = check_exclusion(demi);
    double demi_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t.expect(five.excluded, "demicube(5) must not be regular");
    t.expect(five.facet_vertex_counts == std::vector<Int>{Int(5), Int(8)},
             "demicube(5) must have facets with 5 and 8 vertices");
    t.expect(demi_s < 10.0, "demicube(5) check exceeded its 10 s budget");

    t0 = std::chrono::steady_clock::now();
    ExclusionTarget e6{ExclusionTarget::Kind::e_series, 6, false};
    NonexistenceReport rep = check_exclusion(e6);
    double e6_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t.expect(rep.excluded && rep.checks.size() == 2, "the E6 root hull must not be regular");
    for (const LatticeCheck& c : rep.checks)
        t.expect(!c.regular, "E6 root hull regular over the " + c.label);
    t.expect(e6_s < 1800.0, "E6 check exceeded its 30 min budget");
}

// ---------------------------------------------------------------------------
// Criterion 9: classification is stable under random lattice-affine noise.

void criterion9(Tally& t) {
    std::mt19937 rng(271828);
    std::vector<CatalogEntry> pool;
    for (std::size_t n = 2; n <= 4; ++n)
        for (const CatalogEntry& e : table(n)) pool.push_back(e);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> shift(-5, 5);
    std::uniform_int_distribution<int> ratio(1, 3);
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const CatalogEntry& e = pool[pick(rng)];
        LatticePolytope p = build(e);
        const std::size_t n = p.dim();
        // Random determinant +-1 matrix with entries within [-3, 3].
        IntMat u = IntMat::identity(n);
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        for (int step = 0; step < 30; ++step) {
            std::size_t i = idx(rng), j = idx(rng);
            int c = coef(rng);
            if (i == j || c == 0) continue;
            IntMat next = u;
            for (std::size_t k = 0; k < n; ++k) next(i, k) += Int(c) * u(j, k);
            bool ok = true;
            for (std::size_t r = 0; r < n && ok; ++r)
                for (std::size_t k = 0; k < n; ++k)
                    if (abs(next(r, k)) > 3) {
                        ok = false;
                        break;
                    }
            if (ok) u = next;
        }
        Int m(ratio(rng));
        IntVec tr(n);
        for (Int& x : tr) x = Int(shift(rng));
        std::vector<IntVec> moved;
        for (const IntVec& v : p.vertex_coords()) {
            IntVec im = vec_mul(v, u);
            for (std::size_t k = 0; k < n; ++k) im[k] = m * im[k] + tr[k];
            moved.push_back(im);
        }
        ClassificationResult r =
            classify(LatticePolytope::from_lattice_coords(p.lattice(), moved));
        bool ok = r.matched() && same_class(*r.entry, e);
        t.expect(ok, "trial " + std::to_string(trial) + ": " + e.name() + " came back as " +
                         (r.matched() ? r.entry->name() : r.diagnostic));
    }
}

// ---------------------------------------------------------------------------
// Criterion 10: the exhaustive two-dimensional audit.

void criterion10(Tally& t) {
    Audit2DResult res = audit2d(3);
    t.expect(res.outside_catalog.empty(),
             std::to_string(res.outside_catalog.size()) +
                 " regular polygons fall outside the catalog");
    std::set<std::string> allowed = {"S1^2", "S3^2", "C1^2", "C2^2", "H1^2", "H2^2"};
    for (const auto& [name, count] : res.by_class)
        t.expect(allowed.count(name) > 0, "unexpected class " + name);
    t.expect(res.by_class.size() == 6, "expected all six classes to appear within the box");
    t.expect(res.regular > 0, "the audit found no regular polygons at all");
}

struct Criterion {
    int id;
    const char* summary;
    double budget_s;  // 0 = no stated budget
    void (*run)(Tally&);
};

const Criterion kCriteria[] = {
    {1, "recorded cardinalities, dimensions 2-6", 60, criterion1},
    {2, "points per edge, dimensions 2-6 (simplices 2-5)", 0, criterion2},
    {3, "regularity and symmetry order = flag count, dimensions 2-6", 300, criterion3},
    {4, "polar duals match the recorded columns and are involutions, dimensions 2-5", 0,
     criterion4},
    {5, "cross-polytope facet classes", 0, criterion5},
    {6, "simplex counting formula vs direct enumeration", 0, criterion6},
    {7, "root-system properties of every entry, dimensions 2-6", 0, criterion7},
    {8, "negative checks: demicube(5) and the E6 root hull", 0, criterion8},
    {9, "classification under random lattice-affine noise", 300, criterion9},
    {10, "exhaustive two-dimensional audit, bound 3", 600, criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (selected != 0 && c.id != selected) continue;
        Tally t;
        auto t0 = std::chrono::steady_clock::now();
        c.run(t);
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = c.budget_s == 0 || elapsed < c.budget_s;
        bool pass = t.pass() && in_budget;
        std::fputs(t.detail.str().c_str(), stdout);
        if (!in_budget)
            std::printf("    ran %.1f s, over the %.0f s budget\n", elapsed, c.budget_s);
        std::printf("criterion %2d: %s — %s (%d checks, %d failed, %.1f s)\n", c.id,
                    pass ? "PASS" : "FAIL", c.summary, t.checks, t.failures, elapsed);
        std::fflush(stdout);
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}
