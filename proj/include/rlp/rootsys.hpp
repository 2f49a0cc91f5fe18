// Root systems of lattice polytopes: the primitive edge directions in both
// signs. Entirely combinatorial — Cartan integers come from root strings, not
// from an inner product — and every typed system is certified by mapping it
// onto the canonical model of its type in fundamental-weight coordinates.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rlp/polytope.hpp"

namespace rlp {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

struct Component {
    Family family;
    std::size_t rank;
    bool operator==(const Component& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const Component& o) const { return !(*this == o); }
    bool operator<(const Component& o) const {
        if (family != o.family) return family < o.family;
        return rank < o.rank;
    }
};

inline std::string to_string(const Component& c) {
    return std::string(1, char(c.family)) + std::to_string(c.rank);
}

inline std::string to_string(const std::vector<Component>& comps) {
    // Collapse repeats: n copies of A1 print as "A1^n".
    std::string out;
    for (std::size_t i = 0; i < comps.size();) {
        std::size_t j = i;
        while (j < comps.size() && comps[j] == comps[i]) ++j;
        if (!out.empty()) out += " x ";
        out += to_string(comps[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "0" : out;
}

struct RootSystem {
    Lattice coords;                    // realization lattice; vectors below are in its basis
    std::vector<IntVec> roots;         // sorted
    std::vector<IntVec> simple_roots;  // Bourbaki order, concatenated per component
    IntMat cartan;                     // Cartan matrix of the ordered simple roots
    std::vector<Component> components;
    IntMat weight_map;  // right-multiplication: realization coords -> weight coords

    RootSystem() : coords(Lattice::standard(0)) {}
    std::size_t rank() const { return simple_roots.size(); }
    bool empty() const { return roots.empty(); }
};

// ---------------------------------------------------------------------------
// Root strings.

namespace detail {

inline bool root_member(const std::vector<IntVec>& sorted_roots, const IntVec& v) {
    return std::binary_search(sorted_roots.begin(), sorted_roots.end(), v);
}

}  // namespace detail

// <beta, alpha-dual> computed from the alpha-string through beta (p - q form);
// the input root list must be sorted.
inline Int cartan_integer(const std::vector<IntVec>& roots, const IntVec& alpha,
                          const IntVec& beta) {
    if (!detail::root_member(roots, alpha)) throw NotRootError("alpha is not a root");
    if (!detail::root_member(roots, beta)) throw NotRootError("beta is not a root");
    if (beta == alpha) return 2;
    IntVec neg = vec_scale(alpha, Int(-1));
    if (beta == neg) return -2;
    Int p = 0, q = 0;
    IntVec cur = vec_sub(beta, alpha);
    while (detail::root_member(roots, cur)) {
        ++p;
        cur = vec_sub(cur, alpha);
    }
    cur = vec_add(beta, alpha);
    while (detail::root_member(roots, cur)) {
        ++q;
        cur = vec_add(cur, alpha);
    }
    return p - q;
}

// ---------------------------------------------------------------------------
// Canonical models in fundamental-weight coordinates.

inline IntMat cartan_matrix(Family f, std::size_t rank) {
    auto path_entry = [](std::size_t i, std::size_t j) { return i + 1 == j || j + 1 == i; };
    IntMat a(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) a(i, i) = 2;
    switch (f) {
        case Family::A:
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t j = 0; j < rank; ++j)
                    if (path_entry(i, j)) a(i, j) = -1;
            break;
        case Family::D:
            if (rank < 3) throw UnsupportedTypeError("D-family needs rank >= 3");
            // Path 1..(n-2), with both n-1 and n attached to n-2.
            for (std::size_t i = 0; i + 1 < rank - 1; ++i) {
                if (i + 1 < rank - 1) {
                    a(i, i + 1) = -1;
                    a(i + 1, i) = -1;
                }
            }
            a(rank - 3, rank - 1) = -1;
            a(rank - 1, rank - 3) = -1;
            break;
        case Family::E: {
            if (rank < 6 || rank > 8) throw UnsupportedTypeError("E-family needs rank 6..8");
            // Bourbaki: path 1-3-4-5-...-n, node 2 attached to node 4.
            auto link = [&a](std::size_t i, std::size_t j) {
                a(i - 1, j - 1) = -1;
                a(j - 1, i - 1) = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (std::size_t k = 4; k < rank; ++k) link(k, k + 1);
            break;
        }
    }
    return a;
}

inline IntMat cartan_matrix(const std::vector<Component>& comps) {
    std::size_t n = 0;
    for (const Component& c : comps) n += c.rank;
    IntMat a(n, n);
    std::size_t off = 0;
    for (const Component& c : comps) {
        IntMat block = cartan_matrix(c.family, c.rank);
        for (std::size_t i = 0; i < c.rank; ++i)
            for (std::size_t j = 0; j < c.rank; ++j) a(off + i, off + j) = block(i, j);
        off += c.rank;
    }
    return a;
}

// The canonical realization of a type: weight coordinates, where the weight
// lattice is the unit grid and the simple roots are the Cartan matrix rows.
inline RootSystem canonical_root_system(const std::vector<Component>& comps) {
    IntMat a = cartan_matrix(comps);
    const std::size_t n = a.rows();
    std::set<IntVec> roots;
    std::vector<IntVec> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec alpha = a.row(i);
        if (roots.insert(alpha).second) frontier.push_back(alpha);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& r : frontier)
            for (std::size_t j = 0; j < n; ++j) {
                // Simple reflection in weight coordinates: x -> x - x_j * row_j(A).
                IntVec img = r;
                const Int& cj = r[j];
                if (cj == 0) continue;
                for (std::size_t k = 0; k < n; ++k) img[k] -= cj * a(j, k);
                if (roots.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    RootSystem rs;
    rs.coords = Lattice::standard(n);
    rs.roots.assign(roots.begin(), roots.end());
    rs.simple_roots = a.rows_vec();
    rs.cartan = a;
    rs.components = comps;
    rs.weight_map = IntMat::identity(n);
    return rs;
}

inline Int expected_root_count(const std::vector<Component>& comps) {
    Int total = 0;
    for (const Component& c : comps) {
        const std::size_t n = c.rank;
        switch (c.family) {
            case Family::A: total += Int(n) * Int(n + 1); break;
            case Family::D: total += 2 * Int(n) * Int(n - 1); break;
            case Family::E: total += (n == 6 ? 72 : n == 7 ? 126 : 240); break;
        }
    }
    return total;
}

inline Int weyl_order(const std::vector<Component>& comps) {
    auto factorial = [](std::size_t k) {
        Int f = 1;
        for (std::size_t i = 2; i <= k; ++i) f *= Int(i);
        return f;
    };
    Int total = 1;
    for (const Component& c : comps) {
        switch (c.family) {
            case Family::A: total *= factorial(c.rank + 1); break;
            case Family::D: {
                Int p = factorial(c.rank);
                mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), c.rank - 1);
                total *= p;
                break;
            }
            case Family::E:
                total *= (c.rank == 6 ? Int(51840)
                                      : c.rank == 7 ? Int(2903040) : Int(696729600));
                break;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Analysis of a raw symmetric vector set.

namespace detail {

struct RootAnalysis {
    bool ok = false;
    std::string reason;
    RootSystem rs;
};

// Deterministic functional positive on no-zero-coordinate... a generic linear
// functional (1, N, N^2, ...) with N exceeding every coordinate magnitude; it
// cannot vanish on any nonzero small vector, so it splits the set into
// positives and negatives reproducibly.
inline bool string_positive(const IntVec& v, const Int& big) {
    Int acc = 0;
    for (std::size_t i = v.size(); i-- > 0;) acc = acc * big + v[i];
    return acc > 0;
}

// Bourbaki ordering of one diagram component; input: adjacency within the
// chosen simple roots, the component's node indices. Returns node indices in
// Bourbaki order plus the family.
inline std::pair<Component, std::vector<std::size_t>> order_component(
    const std::vector<std::size_t>& nodes, const std::vector<std::vector<std::size_t>>& adj,
    const std::vector<IntVec>& simples) {
    const std::size_t k = nodes.size();
    auto degree = [&](std::size_t v) { return adj[v].size(); };

    if (k == 1) return {{Family::A, 1}, nodes};

    std::vector<std::size_t> branch, leaves;
    for (std::size_t v : nodes) {
        if (degree(v) >= 3) branch.push_back(v);
        if (degree(v) <= 1) leaves.push_back(v);
    }
    auto walk_from = [&](std::size_t start, std::size_t toward) {
        // Walk a path starting at leaf `start` through `toward` until a branch
        // node or the end; returns the nodes visited (excluding branch stops).
        std::vector<std::size_t> path{start};
        std::size_t prev = start, cur = toward;
        while (degree(cur) == 2) {
            path.push_back(cur);
            for (std::size_t nb : adj[cur])
                if (nb != prev) {
                    prev = cur;
                    cur = nb;
                    break;
                }
        }
        path.push_back(cur);
        return path;
    };

    if (branch.empty()) {
        // A path: type A_k; orient from the lexicographically smaller endpoint.
        if (leaves.size() != 2) throw UnsupportedTypeError("diagram is not a path");
        std::size_t e0 = leaves[0], e1 = leaves[1];
        if (simples[e1] < simples[e0]) std::swap(e0, e1);
        std::vector<std::size_t> order{e0};
        std::size_t prev = e0, cur = adj[e0][0];
        while (true) {
            order.push_back(cur);
            if (cur == e1) break;
            for (std::size_t nb : adj[cur])
                if (nb != prev) {
                    prev = cur;
                    cur = nb;
                    break;
                }
        }
        if (order.size() != k) throw UnsupportedTypeError("diagram is not a path");
        return {{Family::A, k}, order};
    }

    if (branch.size() != 1 || degree(branch[0]) != 3 || leaves.size() != 3)
        throw UnsupportedTypeError("diagram has an unsupported branch structure");
    const std::size_t b = branch[0];

    // The three arms, from leaf inward to (and excluding) the branch node.
    std::vector<std::vector<std::size_t>> arms;
    for (std::size_t leaf : leaves) {
        std::vector<std::size_t> path = walk_from(leaf, adj[leaf][0]);
        if (path.back() != b) throw UnsupportedTypeError("arm does not reach the branch node");
        path.pop_back();
        arms.push_back(path);
    }
    std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return simples[x.front()] < simples[y.front()];  // deterministic tie-break
    });
    const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();

    std::vector<std::size_t> order;
    if (a0 == 1 && a1 == 1) {
        // D_k: the long arm runs 1..k-2 ending at the branch node; the two
        // short arms are the fork ends k-1, k (lexicographic tie-break).
        order = arms[2];  // walks leaf -> inward, which is Bourbaki's direction
        order.push_back(b);
        std::size_t u = arms[0][0], v = arms[1][0];
        if (simples[v] < simples[u]) std::swap(u, v);
        order.push_back(u);
        order.push_back(v);
        return {{Family::D, k}, order};
    }
    if (a0 == 1 && a1 == 2 && (a2 >= 2 && a2 <= 4) && k >= 6) {
        // E_k: short arm leaf is node 2; middle arm is (1, 3); long arm is 5..k.
        order.resize(k);
        order[1] = arms[0][0];          // node 2
        order[0] = arms[1][0];          // node 1 (leaf of the length-2 arm)
        order[2] = arms[1][1];          // node 3 (adjacent to branch)
        order[3] = b;                   // node 4
        for (std::size_t i = 0; i < a2; ++i) order[4 + i] = arms[2][a2 - 1 - i];
        return {{Family::E, k}, order};
    }
    throw UnsupportedTypeError("diagram shape matches no simply-laced type");
}

inline RootAnalysis analyze_root_set(std::vector<IntVec> roots, const Lattice& l) {
    RootAnalysis res;
    auto fail = [&res](const std::string& why) {
        res.ok = false;
        res.reason = why;
        return res;
    };

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.empty()) return fail("empty root set");
    const std::size_t n = l.dim();

    for (const IntVec& r : roots) {
        if (r.size() != n) return fail("root dimension mismatch");
        Int c = content(r);
        if (c == 0) return fail("zero vector in root set");
        if (c != 1) return fail("non-primitive vector in root set");
        if (!root_member(roots, vec_scale(r, Int(-1)))) return fail("set is not symmetric");
    }
    // Primitivity makes reducedness automatic (k*alpha has content k), but the
    // defining property is still asserted directly.
    for (const IntVec& r : roots)
        for (Int k = 2; k <= 3; ++k)
            if (root_member(roots, vec_scale(r, k))) return fail("set is not reduced");

    // Reflection closure via strings.
    for (const IntVec& a : roots)
        for (const IntVec& b : roots) {
            Int c = cartan_integer(roots, a, b);
            IntVec img = vec_sub(b, vec_scale(a, c));
            if (!root_member(roots, img)) return fail("not closed under root reflections");
        }

    // Full rank in the realization.
    {
        IntMat m(roots.size(), n);
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = roots[i][j];
        if (rank(m) != n) return fail("roots do not span the realization");
    }

    // Positive system from the deterministic generic functional.
    Int big = 0;
    for (const IntVec& r : roots)
        for (const Int& x : r) big = std::max(big, Int(abs(x)));
    big = big + 1;
    std::vector<IntVec> pos;
    for (const IntVec& r : roots)
        if (string_positive(r, big)) pos.push_back(r);
    std::sort(pos.begin(), pos.end());
    if (2 * pos.size() != roots.size()) return fail("positive system is unbalanced");

    // Simple = positive and not the sum of two positives.
    std::vector<IntVec> simples;
    for (const IntVec& r : pos) {
        bool decomposable = false;
        for (const IntVec& s : pos) {
            IntVec diff = vec_sub(r, s);
            if (diff != IntVec(n, Int(0)) && std::binary_search(pos.begin(), pos.end(), diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(r);
    }
    if (simples.size() != n) return fail("simple root count differs from the rank");

    // Cartan integers of the candidate simples; simply-laced check.
    IntMat a0(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a0(i, j) = cartan_integer(roots, simples[j], simples[i]);
    for (std::size_t i = 0; i < n; ++i) {
        if (a0(i, i) != 2) return fail("Cartan diagonal is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a0(i, j) != 0 && a0(i, j) != -1)
                throw UnsupportedTypeError("root system is not simply-laced");
            if (a0(i, j) != a0(j, i)) throw UnsupportedTypeError("asymmetric Cartan matrix");
        }
    }

    // Connected components of the Dynkin graph, each put in Bourbaki order.
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && a0(i, j) == -1) adj[i].push_back(j);
    std::vector<int> comp_id(n, -1);
    std::vector<std::vector<std::size_t>> comp_nodes;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp_id[i] >= 0) continue;
        std::vector<std::size_t> stack{i}, found;
        comp_id[i] = int(comp_nodes.size());
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            found.push_back(v);
            for (std::size_t w : adj[v])
                if (comp_id[w] < 0) {
                    comp_id[w] = comp_id[i];
                    stack.push_back(w);
                }
        }
        std::sort(found.begin(), found.end());
        comp_nodes.push_back(found);
    }

    std::vector<std::pair<Component, std::vector<std::size_t>>> ordered;
    try {
        for (const auto& nodes : comp_nodes) ordered.push_back(order_component(nodes, adj, simples));
    } catch (const UnsupportedTypeError&) {
        throw;
    }
    std::sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        std::vector<IntVec> xs, ys;
        for (std::size_t v : x.second) xs.push_back(simples[v]);
        for (std::size_t v : y.second) ys.push_back(simples[v]);
        return xs < ys;
    });

    RootSystem rs;
    rs.coords = l;
    rs.roots = roots;
    for (const auto& [comp, order] : ordered) {
        rs.components.push_back(comp);
        for (std::size_t v : order) rs.simple_roots.push_back(simples[v]);
    }
    rs.cartan = IntMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rs.cartan(i, j) = cartan_integer(roots, rs.simple_roots[j], rs.simple_roots[i]);

    // Certificate: the weight-coordinate map must carry the lattice into the
    // unit grid (the sandwich upper bound) and the root set bijectively onto
    // the canonical model of the detected type.
    IntMat malpha(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) malpha(i, j) = rs.simple_roots[i][j];
    RatMat t = inverse(malpha) * to_rat(rs.cartan);
    if (!is_integral(t)) return fail("lattice is not contained in the weight lattice");
    rs.weight_map = to_int(t);
    RootSystem canon = canonical_root_system(rs.components);
    std::vector<IntVec> image;
    image.reserve(roots.size());
    for (const IntVec& r : roots) image.push_back(vec_mul(r, rs.weight_map));
    std::sort(image.begin(), image.end());
    if (image != canon.roots) return fail("root set is not isomorphic to the canonical model");

    res.ok = true;
    res.rs = std::move(rs);
    return res;
}

}  // namespace detail

// String-level root-system axioms plus the lattice sandwich; a failure reason
// is written to *reason when given.
inline bool verify_root_axioms(const std::vector<IntVec>& roots, const Lattice& l,
                               std::string* reason = nullptr) {
    try {
        detail::RootAnalysis a = detail::analyze_root_set(roots, l);
        if (!a.ok && reason) *reason = a.reason;
        return a.ok;
    } catch (const UnsupportedTypeError&) {
        // Axioms hold; the type is simply outside the simply-laced scope.
        return true;
    }
}

inline std::vector<Component> cartan_type(const RootSystem& rs) { return rs.components; }

// The root system of a polytope: primitive edge directions in both signs.
inline RootSystem extract_roots(const LatticePolytope& p) {
    std::vector<IntVec> roots;
    auto add_direction = [&roots, &p](const IntVec& diff) {
        IntVec d = diff;
        Int c = content(d);
        for (Int& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        roots.push_back(d);
        roots.push_back(vec_scale(d, Int(-1)));
    };
    if (p.dim() == 1) {
        add_direction(vec_sub(p.vertex_coords()[1], p.vertex_coords()[0]));
    } else {
        const FaceLattice& fl = p.face_lattice();
        for (const auto& e : fl.faces[1])
            add_direction(vec_sub(p.vertex_coords()[e[1]], p.vertex_coords()[e[0]]));
    }
    detail::RootAnalysis a = detail::analyze_root_set(std::move(roots), p.lattice());
    if (!a.ok) throw NotRootSystemError(a.reason);
    return a.rs;
}

// ---------------------------------------------------------------------------
// Lattices of a typed system, in fundamental-weight coordinates.

inline Lattice weight_lattice(const RootSystem& rs) { return Lattice::standard(rs.rank()); }

inline Lattice root_lattice(const RootSystem& rs) { return Lattice(rs.cartan); }

// The polytope's own lattice transported to weight coordinates.
inline Lattice lattice_in_weight_coords(const RootSystem& rs) { return Lattice(rs.weight_map); }

// ---------------------------------------------------------------------------
// Weyl group and full automorphism group.

struct WeylGroup {
    std::vector<IntMat> generators;  // simple reflections, realization coords
    Int order;                       // classical closed form for the type
};

inline WeylGroup weyl_group(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    WeylGroup w;
    w.order = weyl_order(rs.components);
    for (std::size_t j = 0; j < n; ++j) {
        // sigma_j(x) = x - <x, alpha_j-dual> alpha_j, with the pairing read off
        // the j-th weight coordinate.
        IntMat s = IntMat::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                s(i, k) -= rs.weight_map(i, j) * rs.simple_roots[j][k];
        w.generators.push_back(std::move(s));
    }
    return w;
}

// Orbit of a realization-coordinate vector under the simple reflections.
inline std::vector<IntVec> weyl_orbit(const WeylGroup& w, const IntVec& v) {
    std::set<IntVec> orbit{v};
    std::vector<IntVec> frontier{v};
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& x : frontier)
            for (const IntMat& g : w.generators) {
                IntVec y = vec_mul(x, g);
                if (orbit.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return std::vector<IntVec>(orbit.begin(), orbit.end());
}

struct AutGroup {
    WeylGroup weyl;
    std::vector<RatMat> diagram;  // coset representatives, identity first
    Int order;                    // |W| * #diagram
};

namespace detail {

// All permutations of the simple roots preserving the Cartan matrix.
inline std::vector<std::vector<std::size_t>> diagram_automorphisms(const IntMat& cartan) {
    const std::size_t n = cartan.rows();
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> img(n, n);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            found.push_back(img);
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (cartan(i, j) != cartan(c, img[j])) ok = false;
                if (cartan(j, i) != cartan(img[j], c)) ok = false;
            }
            if (!ok) continue;
            img[i] = c;
            used[c] = true;
            self(self, i + 1);
            used[c] = false;
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace detail

inline AutGroup aut_group(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    AutGroup a;
    a.weyl = weyl_group(rs);
    IntMat malpha(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) malpha(i, j) = rs.simple_roots[i][j];
    RatMat malpha_inv = inverse(malpha);
    auto perms = detail::diagram_automorphisms(rs.cartan);
    std::sort(perms.begin(), perms.end());  // identity first, deterministic order
    for (const auto& perm : perms) {
        IntMat p(n, n);
        for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
        a.diagram.push_back(malpha_inv * to_rat(p * malpha));
    }
    a.order = a.weyl.order * Int(a.diagram.size());
    return a;
}

// Every Weyl element as a matrix (realization coords); guarded by a cap on
// the group order.
inline std::vector<IntMat> enumerate_weyl(const WeylGroup& w, std::size_t cap = 1000000) {
    if (w.order > Int(cap)) throw BudgetExceededError("Weyl group too large to enumerate");
    auto key = [](const IntMat& m) {
        IntVec k;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
        return k;
    };
    const std::size_t n = w.generators.empty() ? 0 : w.generators[0].rows();
    std::set<IntVec> seen;
    std::vector<IntMat> out{IntMat::identity(n)};
    seen.insert(key(out[0]));
    for (std::size_t head = 0; head < out.size(); ++head) {
        IntMat cur = out[head];
        for (const IntMat& g : w.generators) {
            IntMat nxt = cur * g;
            if (seen.insert(key(nxt)).second) out.push_back(std::move(nxt));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Restriction to a face direction.

// Roots lying in the span of the given directions (rows, realization coords),
// re-expressed in the saturated basis of lattice ∩ span and re-verified there.
inline RootSystem face_root_system(const RootSystem& rs, const IntMat& directions) {
    const std::size_t n = rs.coords.dim();
    // Saturated basis of the subspace inside the realization lattice.
    IntMat k = left_kernel(directions.transpose());
    IntMat basis = left_kernel(k.transpose());
    const std::size_t d = basis.rows();
    if (d == 0) return RootSystem();

    RatMat bt = to_rat(basis).transpose();
    RatMat ginv = inverse(to_rat(basis) * bt);
    std::vector<IntVec> sub;
    for (const IntVec& r : rs.roots) {
        // r is in the span iff it is orthogonal to the kernel rows.
        bool inside = true;
        for (std::size_t i = 0; i < k.rows() && inside; ++i)
            if (dot(r, k.row(i)) != 0) inside = false;
        if (!inside) continue;
        RatVec c = vec_mul(vec_mul(to_rat(r), bt), ginv);
        sub.push_back(to_int(c));
    }
    (void)n;
    if (sub.empty()) return RootSystem();
    detail::RootAnalysis a = detail::analyze_root_set(std::move(sub), Lattice::standard(d));
    if (!a.ok) throw NotRootSystemError(a.reason);
    return a.rs;
}

}  // namespace rlp
