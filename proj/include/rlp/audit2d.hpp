// Exhaustive regularity audit over a two-dimensional coordinate box.
//
// Enumerates every strictly-convex-position vertex subset of [-B, B]^2
// exactly once (fix the lexicographically least vertex, grow the boundary
// counterclockwise with a strict left turn at every step), tests each
// resulting polygon for regularity, and classifies the regular ones.  Cheap
// exact screens — vertex count in {3, 4, 6}, equal lattice lengths on all
// edges, central symmetry for even counts, all necessary conditions for a
// flag-transitive lattice polygon — keep the full regularity test to a small
// set of survivors.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rlp/catalog.hpp"

namespace rlp {

struct Audit2DResult {
    long long convex_polygons = 0;  // strictly-convex subsets enumerated
    long long screened = 0;         // survivors of the cheap necessary tests
    long long regular = 0;          // exactly regular polygons
    std::map<std::string, long long> by_class;   // catalog class -> count
    std::vector<LatticePolytope> outside_catalog;  // regular but unmatched
};

namespace detail {

struct Audit2D {
    std::vector<std::pair<long, long>> pts;
    std::vector<int> chain;
    Audit2DResult res;

    static long long cross(std::pair<long, long> o, std::pair<long, long> a,
                           std::pair<long, long> b) {
        return (long long)(a.first - o.first) * (b.second - o.second) -
               (long long)(a.second - o.second) * (b.first - o.first);
    }

    static long edge_gcd(std::pair<long, long> a, std::pair<long, long> b) {
        return std::gcd(std::labs(a.first - b.first), std::labs(a.second - b.second));
    }

    void emit() {
        const std::size_t k = chain.size();
        ++res.convex_polygons;
        if (k != 3 && k != 4 && k != 6) return;  // crystallographic restriction
        auto at = [this](std::size_t i) { return pts[chain[i % chain.size()]]; };
        // Simple strict convexity: every vertex left of every directed edge.
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i || j == (i + 1) % k) continue;
                if (cross(at(i), at(i + 1), at(j)) <= 0) return;
            }
        long g = edge_gcd(at(0), at(1));
        for (std::size_t i = 1; i < k; ++i)
            if (edge_gcd(at(i), at(i + 1)) != g) return;
        if (k % 2 == 0) {
            long sx = at(0).first + at(k / 2).first, sy = at(0).second + at(k / 2).second;
            for (std::size_t i = 1; i < k / 2; ++i)
                if (at(i).first + at(i + k / 2).first != sx ||
                    at(i).second + at(i + k / 2).second != sy)
                    return;
        }
        ++res.screened;
        std::vector<IntVec> verts;
        verts.reserve(k);
        for (int idx : chain) verts.push_back(IntVec{Int(pts[idx].first), Int(pts[idx].second)});
        LatticePolytope p = LatticePolytope::from_lattice_coords(Lattice::standard(2), verts);
        if (!is_regular(p)) return;
        ++res.regular;
        ClassificationResult r = classify(p);
        if (r.matched())
            ++res.by_class[r.entry->name()];
        else
            res.outside_catalog.push_back(p);
    }

    void extend() {
        const std::size_t len = chain.size();
        if (len >= 3) emit();
        if (len == 6) return;  // no regular lattice polygon has more vertices
        const int v0 = chain.front();
        const int cur = chain.back();
        for (int q = v0 + 1; q < int(pts.size()); ++q) {
            if (std::find(chain.begin(), chain.end(), q) != chain.end()) continue;
            if (len >= 2) {
                const int prev = chain[len - 2];
                if (cross(pts[prev], pts[cur], pts[q]) <= 0) continue;
                // Convex polygons stay strictly left of their first edge.
                if (cross(pts[v0], pts[chain[1]], pts[q]) <= 0) continue;
            }
            chain.push_back(q);
            extend();
            chain.pop_back();
        }
    }
};

}  // namespace detail

inline Audit2DResult audit2d(long bound) {
    if (bound < 1 || bound > 4)
        throw BudgetExceededError("audit bound must be between 1 and 4");
    detail::Audit2D a;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) a.pts.emplace_back(x, y);
    std::sort(a.pts.begin(), a.pts.end());
    for (int v0 = 0; v0 + 2 < int(a.pts.size()); ++v0) {
        a.chain.assign(1, v0);
        a.extend();
    }
    return std::move(a.res);
}

}  // namespace rlp
