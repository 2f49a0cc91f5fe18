// The classification catalog of centered primitive regular lattice polytopes.
//
// Each class is recorded by its root-system type, the realization lattice
// written in the fundamental-weight coordinates of that type, and the
// dominant vertex whose Weyl orbit is the vertex set.  Around that data the
// header provides: builders for every class, the classification map from an
// arbitrary polytope back into the catalog, per-entry verification of the
// recorded table columns, the counting formula for the simplex classes, and
// the negative checks (demicube candidates and the E-series root hulls) that
// rule out the remaining root-system types.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rlp/duality.hpp"
#include "rlp/rootsys.hpp"
#include "rlp/symmetry.hpp"

namespace rlp {

// ---------------------------------------------------------------------------
// Entries.

// One row of the catalog.  `family` is a short token: "S<d>" for the simplex
// with parameter d, "C1".."C3" for the cube classes, "CC1".."CC3" for the
// cross-polytope (cocube) classes, "H1"/"H2" for the hexagons and "D1"/"D2"
// for the 24-cells.  The expected-value fields record the published table
// columns for verify_entry; dual columns name a family in the same dimension,
// facet_family one in dimension n-1 ("" when the facets are segments).
struct CatalogEntry {
    std::string family;
    std::size_t dimension = 0;
    std::vector<Component> components;
    Lattice lattice;  // in fundamental-weight coordinates
    IntVec s0;        // dominant vertex, weight coordinates

    Int card = 0;         // recorded lattice-point count
    Int edge_points = 0;  // recorded points per edge
    Int isom_order = 0;   // recorded symmetry-group order (= complete flags)
    std::string facet_family;
    std::string vee_dual;
    std::string star_dual;
    std::string lattice_label;  // human description of `lattice`

    CatalogEntry() : lattice(Lattice::standard(0)) {}
    std::string name() const { return family + "^" + std::to_string(dimension); }
};

inline bool same_class(const CatalogEntry& a, const CatalogEntry& b) {
    return a.family == b.family && a.dimension == b.dimension;
}

// ---------------------------------------------------------------------------
// Simplex lattice-point counting.
//
// The simplex with parameter d in dimension n, written in the frame where its
// vertices are d·e_i (i = 1..n+1) on the hyperplane of coordinate sum d, has
// lattice points exactly the nonnegative integer tuples summing to d(n+1)
// whose coordinates share one residue tau mod (n+1), where tau runs over the
// multiples of d.  The count enumerates those tuples.

namespace detail {

// Number of nonnegative integer (slots)-tuples with the given sum, counted by
// explicit recursive enumeration of the tuples.
inline Int count_sum_tuples(std::size_t slots, const Int& sum) {
    if (slots == 1) return 1;  // the remainder fills the last slot
    Int total = 0;
    for (Int a = 0; a <= sum; ++a) total += count_sum_tuples(slots - 1, sum - a);
    return total;
}

}  // namespace detail

inline Int simplex_count(std::size_t n, std::size_t d) {
    if (d == 0 || (n + 1) % d != 0)
        throw BadEntryError("simplex parameter must divide dimension + 1");
    // Tuples a_i = tau + (n+1) b_i with sum d(n+1) exist iff the b_i are
    // nonnegative integers summing to d - tau; enumerate per residue tau.
    Int total = 0;
    for (std::size_t tau = 0; tau < n + 1; tau += d) {
        if (tau > d) continue;  // coordinate sum would exceed d(n+1)
        total += detail::count_sum_tuples(n + 1, Int(d - tau));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Entry construction.

namespace detail {

inline Lattice lattice_from_rows(const std::vector<IntVec>& rows) {
    const std::size_t n = rows.front().size();
    IntMat stack(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) stack(i, j) = rows[i][j];
    return Lattice(hnf_basis(stack));
}

// The orthogonal frame of the cross-polytope realizations, written in
// fundamental-weight coordinates.  For n >= 4 this is the usual dictionary
// between the D_n weights and the orthonormal frame; n = 3 uses the A3
// coordinates the classifier produces for octahedra (the two types coincide
// in rank 3, with the frame landing on the middle fundamental weight).
inline std::vector<IntVec> cross_frame(std::size_t n) {
    std::vector<IntVec> eps(n, IntVec(n, Int(0)));
    if (n == 3) {
        eps[0] = IntVec{0, 1, 0};
        eps[1] = IntVec{1, -1, 1};
        eps[2] = IntVec{-1, 0, 1};
        return eps;
    }
    eps[0][0] = 1;
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        eps[i][i] = 1;
        eps[i][i - 1] = -1;
    }
    eps[n - 2][n - 2] = 1;
    eps[n - 2][n - 1] = 1;
    eps[n - 2][n - 3] = -1;
    eps[n - 1][n - 1] = 1;
    eps[n - 1][n - 2] = -1;
    return eps;
}

inline Int factorial(std::size_t n) {
    Int f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= Int(i);
    return f;
}

inline Int int_pow(unsigned base, std::size_t e) {
    Int p = 1;
    for (std::size_t i = 0; i < e; ++i) p *= Int(base);
    return p;
}

// In dimension 2 the cube classes collapse to two squares and the cross
// classes coincide with them; this maps a family token to the surviving name.
inline std::string dim2_alias(const std::string& family) {
    if (family == "C3" || family == "CC2") return "C2";
    if (family == "CC1" || family == "CC3") return "C1";
    return family;
}

inline std::string dual_name(const std::string& family, std::size_t n) {
    return n == 2 ? dim2_alias(family) : family;
}

}  // namespace detail

// The catalog row for a family token in dimension n.  Invalid parameters
// (unknown token, simplex parameter not dividing n+1, a class that does not
// exist in dimension n) raise BadEntryError.
inline CatalogEntry make_entry(const std::string& family, std::size_t n) {
    if (n < 2) throw BadEntryError("catalog entries start at dimension 2");
    CatalogEntry e;
    e.family = family;
    e.dimension = n;

    if (family.size() >= 2 && family[0] == 'S') {
        std::size_t d = 0;
        for (std::size_t i = 1; i < family.size(); ++i) {
            if (family[i] < '0' || family[i] > '9')
                throw BadEntryError("unknown catalog family: " + family);
            d = 10 * d + std::size_t(family[i] - '0');
        }
        if (d == 0 || (n + 1) % d != 0)
            throw BadEntryError("simplex parameter must divide dimension + 1");
        e.components = {Component{Family::A, n}};
        IntMat cartan = cartan_matrix(Family::A, n);
        std::vector<IntVec> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(cartan.row(i));
        IntVec gen(n, Int(0));
        gen[0] = Int(d);
        rows.push_back(gen);
        e.lattice = detail::lattice_from_rows(rows);
        e.s0 = gen;
        e.card = simplex_count(n, d);
        e.edge_points = Int(d + 1);
        e.isom_order = detail::factorial(n + 1);
        e.facet_family = n == 2 ? "" : "S" + std::to_string(n);
        e.vee_dual = "S" + std::to_string(d);
        e.star_dual = "S" + std::to_string((n + 1) / d);
        e.lattice_label = "root lattice + Z*" + std::to_string(d) + "*w1";
        return e;
    }

    if (family == "C1" || family == "C2" || family == "C3") {
        if (family == "C3" && n == 2)
            throw BadEntryError("the third cube class only exists from dimension 3 on");
        e.components.assign(n, Component{Family::A, 1});
        e.isom_order = detail::int_pow(2, n) * detail::factorial(n);
        std::vector<IntVec> rows;
        if (family == "C1") {
            for (std::size_t i = 0; i < n; ++i) {
                IntVec r(n, Int(0));
                r[i] = 2;
                rows.push_back(r);
            }
            e.s0 = IntVec(n, Int(2));
            e.card = detail::int_pow(3, n);
            e.edge_points = 3;
            e.facet_family = n == 2 ? "" : "C1";
            e.vee_dual = detail::dual_name("CC2", n);
            e.star_dual = detail::dual_name("CC2", n);
            e.lattice_label = "2Z^n (root lattice)";
        } else if (family == "C2") {
            rows.push_back(IntVec(n, Int(1)));
            for (std::size_t i = 1; i < n; ++i) {
                IntVec r(n, Int(0));
                r[i] = 2;
                rows.push_back(r);
            }
            e.s0 = IntVec(n, Int(1));
            e.card = detail::int_pow(2, n) + 1;
            e.edge_points = 2;
            e.facet_family = n == 2 ? "" : "C1";
            e.vee_dual = detail::dual_name("CC3", n);
            e.star_dual = detail::dual_name("CC3", n);
            e.lattice_label = "2Z^n + Z*(1,...,1)";
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                IntVec r(n, Int(0));
                r[i] = 1;
                r[i + 1] = 1;
                rows.push_back(r);
            }
            IntVec last(n, Int(0));
            last[n - 1] = 2;
            rows.push_back(last);
            const bool even = n % 2 == 0;
            e.s0 = IntVec(n, Int(even ? 1 : 2));
            e.card = even ? Int((detail::int_pow(3, n) + 1) / 2)
                          : Int((detail::int_pow(5, n) - 1) / 2);
            e.edge_points = even ? 2 : 3;
            e.facet_family = n == 3 ? detail::dim2_alias("C3") : "C3";
            e.vee_dual = detail::dual_name("CC1", n);
            e.star_dual = detail::dual_name("CC1", n);
            e.lattice_label = "even coordinate-sum sublattice of Z^n";
        }
        e.lattice = detail::lattice_from_rows(rows);
        return e;
    }

    if (family == "CC1" || family == "CC2" || family == "CC3") {
        if (n < 3) throw BadEntryError("cross-polytope classes start at dimension 3");
        e.components = n == 3 ? std::vector<Component>{Component{Family::A, 3}}
                              : std::vector<Component>{Component{Family::D, n}};
        e.isom_order = detail::int_pow(2, n) * detail::factorial(n);
        std::vector<IntVec> eps = detail::cross_frame(n);
        IntMat cartan = cartan_matrix(e.components);
        if (family == "CC1") {
            std::vector<IntVec> rows;
            for (std::size_t i = 0; i < n; ++i) rows.push_back(cartan.row(i));
            e.lattice = detail::lattice_from_rows(rows);
            e.s0 = vec_add(eps[0], eps[0]);
            e.card = Int(4) * Int(n) * Int(n) + 1;
            e.edge_points = 3;
            e.facet_family = "S" + std::to_string(n);
            e.vee_dual = "C3";
            e.star_dual = "C3";
            e.lattice_label = "root lattice";
        } else if (family == "CC2") {
            e.lattice = detail::lattice_from_rows(eps);
            e.s0 = eps[0];
            e.card = Int(2) * Int(n) + 1;
            e.edge_points = 2;
            e.facet_family = "S" + std::to_string(n);
            e.vee_dual = "C1";
            e.star_dual = "C1";
            e.lattice_label = "integer span of the cross frame";
        } else {
            e.lattice = Lattice::standard(n);
            e.s0 = eps[0];
            e.card = Int(2) * Int(n) + 1;
            e.edge_points = 2;
            e.facet_family = "S" + std::to_string(n % 2 == 0 ? n / 2 : n);
            e.vee_dual = "C2";
            e.star_dual = "C2";
            e.lattice_label = "weight lattice";
        }
        return e;
    }

    if (family == "H1" || family == "H2") {
        if (n != 2) throw BadEntryError("hexagon classes only exist in dimension 2");
        e.components = {Component{Family::A, 2}};
        e.lattice = family == "H1" ? Lattice(cartan_matrix(Family::A, 2)) : Lattice::standard(2);
        e.s0 = IntVec{1, 1};
        e.card = family == "H1" ? 7 : 13;
        e.edge_points = 2;
        e.isom_order = 12;
        e.facet_family = "";
        e.vee_dual = family == "H1" ? "H2" : "H1";
        e.star_dual = family;
        e.lattice_label = family == "H1" ? "root lattice" : "weight lattice";
        return e;
    }

    if (family == "D1" || family == "D2") {
        if (n != 4) throw BadEntryError("24-cell classes only exist in dimension 4");
        e.components = {Component{Family::D, 4}};
        e.lattice = family == "D1" ? Lattice(cartan_matrix(Family::D, 4)) : Lattice::standard(4);
        e.s0 = IntVec{0, 1, 0, 0};
        e.card = family == "D1" ? 25 : 81;
        e.edge_points = 2;
        e.isom_order = 1152;
        e.facet_family = family == "D1" ? "CC1" : "CC2";
        e.vee_dual = family == "D1" ? "D2" : "D1";
        e.star_dual = family;
        e.lattice_label = family == "D1" ? "root lattice" : "weight lattice";
        return e;
    }

    throw BadEntryError("unknown catalog family: " + family);
}

// The complete duplicate-free list of classes in dimension n.
inline std::vector<CatalogEntry> table(std::size_t n) {
    if (n < 2) throw UnsupportedDimensionError("the catalog starts at dimension 2");
    std::vector<CatalogEntry> out;
    for (std::size_t d = 1; d <= n + 1; ++d)
        if ((n + 1) % d == 0) out.push_back(make_entry("S" + std::to_string(d), n));
    out.push_back(make_entry("C1", n));
    out.push_back(make_entry("C2", n));
    if (n >= 3) out.push_back(make_entry("C3", n));
    if (n >= 3) {
        out.push_back(make_entry("CC1", n));
        out.push_back(make_entry("CC2", n));
        out.push_back(make_entry("CC3", n));
    }
    if (n == 2) {
        out.push_back(make_entry("H1", n));
        out.push_back(make_entry("H2", n));
    }
    if (n == 4) {
        out.push_back(make_entry("D1", n));
        out.push_back(make_entry("D2", n));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Construction.

// The polytope of an entry: the Weyl orbit of the dominant vertex, taken as a
// hull over the entry's lattice.
inline LatticePolytope build(const CatalogEntry& e) {
    RootSystem rs = canonical_root_system(e.components);
    WeylGroup w = weyl_group(rs);
    std::vector<IntVec> orbit = weyl_orbit(w, e.s0);
    std::vector<RatVec> pts;
    pts.reserve(orbit.size());
    for (const IntVec& v : orbit) pts.push_back(to_rat(v));
    return hull(pts, e.lattice);
}

// ---------------------------------------------------------------------------
// Classification.

struct ClassificationResult {
    enum class Status { matched, not_regular, regular_but_unmatched };
    Status status = Status::regular_but_unmatched;
    std::optional<CatalogEntry> entry;  // set iff matched
    AffineLatticeMap witness;           // maps the normalized input onto build(*entry)
    std::string diagnostic;             // set iff not matched

    bool matched() const { return status == Status::matched; }
};

namespace detail {

inline ClassificationResult classification_failure(ClassificationResult::Status s,
                                                   std::string why) {
    ClassificationResult r;
    r.status = s;
    r.diagnostic = std::move(why);
    return r;
}

}  // namespace detail

// Classify an arbitrary polytope against the catalog: normalize, test
// regularity, extract the root system, rewrite everything in its fundamental-
// weight coordinates and match (type, dominant vertex, lattice) against the
// table rows modulo diagram automorphisms.  Failures are encoded in the
// result, never thrown.
inline ClassificationResult classify(const LatticePolytope& p) {
    using Status = ClassificationResult::Status;
    LatticePolytope q = normalize(p).first;
    const std::size_t n = q.dim();
    if (n < 2)
        return detail::classification_failure(Status::regular_but_unmatched,
                                              "no catalog below dimension 2");
    if (!is_regular(q))
        return detail::classification_failure(Status::not_regular,
                                              "symmetries are not transitive on complete flags");

    RootSystem rs;
    try {
        rs = extract_roots(q);
    } catch (const Error& err) {
        return detail::classification_failure(
            Status::regular_but_unmatched,
            std::string("edge directions do not form a supported root system: ") + err.what());
    }

    // Vertices in weight coordinates; the dominant one represents the orbit.
    std::vector<IntVec> wverts;
    wverts.reserve(q.vertex_count());
    for (const IntVec& v : q.vertex_coords()) wverts.push_back(vec_mul(v, rs.weight_map));
    std::optional<IntVec> dominant;
    for (const IntVec& v : wverts) {
        bool dom = true;
        for (const Int& x : v)
            if (x < 0) {
                dom = false;
                break;
            }
        if (!dom) continue;
        if (dominant)
            return detail::classification_failure(Status::regular_but_unmatched,
                                                  "dominant vertex is not unique");
        dominant = v;
    }
    if (!dominant)
        return detail::classification_failure(Status::regular_but_unmatched,
                                              "no dominant vertex in the orbit");

    std::vector<std::vector<std::size_t>> perms = detail::diagram_automorphisms(rs.cartan);
    for (const CatalogEntry& e : table(n)) {
        if (e.components != rs.components) continue;
        for (const auto& perm : perms) {
            IntVec s(n);
            IntMat wmap(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                s[perm[i]] = (*dominant)[i];
                for (std::size_t r = 0; r < n; ++r) wmap(r, perm[i]) = rs.weight_map(r, i);
            }
            if (s != e.s0 || Lattice(wmap) != e.lattice) continue;
            ClassificationResult out;
            out.status = Status::matched;
            out.entry = e;
            out.witness =
                AffineLatticeMap::from_linear(q.lattice().basis_inverse() * to_rat(wmap));
            return out;
        }
    }
    return detail::classification_failure(Status::regular_but_unmatched,
                                          "no catalog row has this lattice data");
}

// ---------------------------------------------------------------------------
// Faces as polytopes.

// A face of p, rewritten as a full-dimensional polytope over the intrinsic
// lattice of its affine span (the saturation of the span inside p's lattice),
// with the first face vertex at the origin.
inline LatticePolytope face_polytope(const LatticePolytope& p, const std::vector<int>& face) {
    const std::size_t n = p.dim();
    const auto& coords = p.vertex_coords();
    const IntVec& base = coords[face.front()];
    IntMat dirs(face.size() - 1, n);
    for (std::size_t i = 1; i < face.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) dirs(i - 1, j) = coords[face[i]][j] - base[j];
    IntMat k = left_kernel(dirs.transpose());
    IntMat basis = left_kernel(k.transpose());
    const std::size_t d = basis.rows();
    RatMat bt = to_rat(basis).transpose();
    RatMat ginv = inverse(to_rat(basis) * bt);
    std::vector<IntVec> rel;
    rel.reserve(face.size());
    for (int vi : face) {
        IntVec diff = vec_sub(coords[std::size_t(vi)], base);
        rel.push_back(to_int(vec_mul(vec_mul(to_rat(diff), bt), ginv)));
    }
    return LatticePolytope::from_lattice_coords(Lattice::standard(d), rel);
}

// ---------------------------------------------------------------------------
// Per-entry verification.

struct ColumnCheck {
    std::string column;
    bool pass = false;
    std::string expected;
    std::string got;
};

struct EntryReport {
    CatalogEntry entry;
    std::vector<ColumnCheck> checks;
    bool all_pass = false;
};

namespace detail {

inline std::size_t count_flags(const LatticePolytope& p) {
    std::size_t count = 0;
    p.visit_flags([&count](const Flag&) {
        ++count;
        return true;
    });
    return count;
}

inline std::string classified_name(const ClassificationResult& r) {
    if (r.matched()) return r.entry->family;
    return r.status == ClassificationResult::Status::not_regular
               ? "(not regular)"
               : "(unmatched: " + r.diagnostic + ")";
}

}  // namespace detail

// Rebuild an entry and compare every recorded column against computation.
// The report lists one pass/fail line per column; nothing is thrown on a
// mismatch, so published values that disagree with exact arithmetic surface
// as failing columns.
inline EntryReport verify_entry(const CatalogEntry& e) {
    EntryReport rep;
    rep.entry = e;
    LatticePolytope p = build(e);

    IsomGroup ig = isom_group(p);
    std::size_t flags = detail::count_flags(p);
    bool regular = ig.order() == flags;
    rep.checks.push_back({"regular", regular, "true", regular ? "true" : "false"});

    Int order = Int(static_cast<unsigned long>(ig.order()));
    rep.checks.push_back(
        {"isom", order == e.isom_order, e.isom_order.get_str(), order.get_str()});

    Int card = p.lattice_point_count();
    rep.checks.push_back({"card", card == e.card, e.card.get_str(), card.get_str()});

    std::vector<Int> edges = p.edge_point_counts();
    bool edges_ok = !edges.empty();
    for (const Int& c : edges) edges_ok = edges_ok && c == e.edge_points;
    rep.checks.push_back({"edges", edges_ok, e.edge_points.get_str(),
                          edges.empty() ? "(none)" : edges.front().get_str()});

    if (!e.facet_family.empty()) {
        bool ok = true;
        std::string got;
        for (const Facet& f : p.facets()) {
            ClassificationResult r = classify(face_polytope(p, f.vertices));
            std::string name = detail::classified_name(r);
            if (got.empty()) got = name;
            if (!r.matched() || r.entry->family != e.facet_family) {
                ok = false;
                got = name;
                break;
            }
        }
        rep.checks.push_back({"facet", ok, e.facet_family, got});
    }

    ClassificationResult vee = classify(vee_dual(p));
    rep.checks.push_back({"vee-dual", vee.matched() && vee.entry->family == e.vee_dual,
                          e.vee_dual, detail::classified_name(vee)});
    ClassificationResult star = classify(star_dual(p));
    rep.checks.push_back({"star-dual", star.matched() && star.entry->family == e.star_dual,
                          e.star_dual, detail::classified_name(star)});

    rep.all_pass = true;
    for (const ColumnCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// Negative checks.

struct ExclusionTarget {
    enum class Kind { e_series, demicube };
    Kind kind = Kind::e_series;
    std::size_t rank = 6;     // 6, 7 or 8 for the E-series; n for demicubes
    bool allow_large = false; // opt-in for the expensive E7/E8 hulls
};

struct LatticeCheck {
    std::string label;
    bool regular = false;
};

struct NonexistenceReport {
    std::string target;
    std::vector<LatticeCheck> checks;      // regularity verdict per candidate lattice
    std::vector<Int> facet_vertex_counts;  // demicube only: distinct facet sizes
    std::string matched_class;             // set when a candidate is regular
    bool excluded = false;                 // true iff no candidate is regular
};

// Check that a candidate family yields no new regular polytope.  For the
// E-series the only candidate is the hull of the roots, tested over the root
// and weight lattices; for demicube(n) it is the half-spinor orbit over the
// smallest lattice containing it.  E7/E8 are large and sit behind an explicit
// opt-in flag.
inline NonexistenceReport check_exclusion(const ExclusionTarget& t) {
    NonexistenceReport rep;
    if (t.kind == ExclusionTarget::Kind::e_series) {
        if (t.rank < 6 || t.rank > 8) throw BadEntryError("E-series rank must be 6, 7 or 8");
        if (t.rank > 6 && !t.allow_large)
            throw BudgetExceededError("E7/E8 hulls are large; pass the opt-in flag to run them");
        rep.target = "E" + std::to_string(t.rank);
        RootSystem rs = canonical_root_system({Component{Family::E, t.rank}});
        std::vector<RatVec> pts;
        pts.reserve(rs.roots.size());
        for (const IntVec& r : rs.roots) pts.push_back(to_rat(r));
        Lattice root(rs.cartan);
        Lattice weight = Lattice::standard(t.rank);
        rep.checks.push_back({"root lattice", is_regular(hull(pts, root))});
        if (root != weight)
            rep.checks.push_back({"weight lattice", is_regular(hull(pts, weight))});
    } else {
        if (t.rank < 3) throw BadEntryError("demicube checks start at dimension 3");
        rep.target = "demicube(" + std::to_string(t.rank) + ")";
        const std::size_t n = t.rank;
        RootSystem rs = canonical_root_system({n == 3 ? Component{Family::A, 3}
                                                      : Component{Family::D, n}});
        IntVec spinor(n, Int(0));
        spinor[n - 1] = 1;
        std::vector<IntVec> orbit = weyl_orbit(weyl_group(rs), spinor);
        std::vector<IntVec> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(rs.cartan.row(i));
        rows.push_back(spinor);
        Lattice l = detail::lattice_from_rows(rows);
        std::vector<RatVec> pts;
        pts.reserve(orbit.size());
        for (const IntVec& v : orbit) pts.push_back(to_rat(v));
        LatticePolytope p = hull(pts, l);
        std::set<Int> sizes;
        for (const Facet& f : p.facets()) sizes.insert(Int(f.vertices.size()));
        rep.facet_vertex_counts.assign(sizes.begin(), sizes.end());
        bool regular = is_regular(p);
        rep.checks.push_back({"orbit lattice", regular});
        if (regular) {
            ClassificationResult r = classify(p);
            if (r.matched()) rep.matched_class = r.entry->name();
        }
    }
    rep.excluded = true;
    for (const LatticeCheck& c : rep.checks) rep.excluded = rep.excluded && !c.regular;
    return rep;
}

}  // namespace rlp
