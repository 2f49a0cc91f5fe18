// Exact convex hull of integer points by the incremental double-description
// method, run on the homogenization cone: constraints are rows (1, p) for the
// input points; the extreme rays of the cone they cut out are exactly the
// facet inequalities (offset, normal) of the hull with offset + <normal, x> >= 0.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <set>
#include <vector>

#include "rlp/matrix.hpp"

namespace rlp {

struct HullFacet {
    IntVec normal;           // primitive; inequality offset + <normal, x> >= 0
    Int offset;
    std::vector<int> tight;  // indices of input points on the facet, sorted
};

struct HullResult {
    std::vector<int> vertices;     // indices of input points that are extreme
    std::vector<HullFacet> facets;
};

namespace detail {

class Bits {
  public:
    explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    Bits intersect(const Bits& o) const {
        Bits r(*this);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }

  private:
    std::vector<std::uint64_t> w_;
};

struct Ray {
    IntVec v;    // length n+1: (offset, normal), primitive
    Bits tight;  // which processed constraints it is tight on
};

inline void primitivize(IntVec& v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace detail

// Hull of distinct integer points affinely spanning n-space.
inline HullResult dd_hull(const std::vector<IntVec>& pts) {
    const std::size_t n = pts.empty() ? 0 : pts[0].size();
    const std::size_t m = pts.size();

    // Homogenized constraint rows (1, p).
    std::vector<IntVec> cons(m);
    for (std::size_t i = 0; i < m; ++i) {
        cons[i] = IntVec(n + 1);
        cons[i][0] = 1;
        for (std::size_t j = 0; j < n; ++j) cons[i][j + 1] = pts[i][j];
    }

    // Greedily pick n+1 affinely independent points to seed a simplex cone.
    std::vector<std::size_t> seed;
    {
        RatMat chosen(0, 0);
        std::vector<RatVec> rows;
        for (std::size_t i = 0; i < m && seed.size() < n + 1; ++i) {
            rows.push_back(to_rat(cons[i]));
            RatMat trial = RatMat::from_rows(rows);
            if (rank(trial) == rows.size()) {
                seed.push_back(i);
            } else {
                rows.pop_back();
            }
        }
        if (seed.size() != n + 1) throw DegenerateError("points do not affinely span the space");
    }

    // Process seed constraints first, then the rest.
    std::vector<std::size_t> order = seed;
    {
        std::set<std::size_t> in_seed(seed.begin(), seed.end());
        for (std::size_t i = 0; i < m; ++i)
            if (!in_seed.count(i)) order.push_back(i);
    }

    // Initial rays: rows of the inverse-transpose of the seed constraint
    // matrix; ray i is tight on every seed constraint except the i-th.
    std::vector<detail::Ray> rays;
    {
        IntMat mseed(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) mseed(i, j) = cons[seed[i]][j];
        RatMat ninv = inverse(mseed).transpose();
        for (std::size_t i = 0; i <= n; ++i) {
            RatVec r = ninv.row(i);
            Int den = 1;
            for (const Rat& x : r) den = lcm(den, x.get_den());
            IntVec v(n + 1);
            for (std::size_t j = 0; j <= n; ++j) v[j] = Rat(r[j] * den).get_num();
            detail::primitivize(v);
            detail::Ray ray{std::move(v), detail::Bits(m)};
            for (std::size_t k = 0; k <= n; ++k)
                if (k != i) ray.tight.set(seed[k]);
            rays.push_back(std::move(ray));
        }
    }

    // Insert the remaining constraints one at a time.
    for (std::size_t step = n + 1; step < m; ++step) {
        const std::size_t q = order[step];
        std::vector<Int> s(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(rays[i].v, cons[q]);
            if (s[i] > 0)
                pos.push_back(i);
            else if (s[i] < 0)
                neg.push_back(i);
            else
                zero.push_back(i);
        }
        for (std::size_t i : zero) rays[i].tight.set(q);
        if (neg.empty()) continue;

        std::vector<detail::Ray> created;
        for (std::size_t ip : pos)
            for (std::size_t in : neg) {
                // Combinatorial adjacency: no third ray is tight on everything
                // both of these are tight on.
                detail::Bits common = rays[ip].tight.intersect(rays[in].tight);
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == ip || k == in) continue;
                    if (common.subset_of(rays[k].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVec v(n + 1);
                for (std::size_t j = 0; j <= n; ++j)
                    v[j] = s[ip] * rays[in].v[j] - s[in] * rays[ip].v[j];
                detail::primitivize(v);
                detail::Ray ray{std::move(v), detail::Bits(m)};
                for (std::size_t k = 0; k <= step; ++k) {
                    if (dot(ray.v, cons[order[k]]) == 0) ray.tight.set(order[k]);
                }
                created.push_back(std::move(ray));
            }

        std::vector<detail::Ray> kept;
        kept.reserve(pos.size() + zero.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (s[i] >= 0) kept.push_back(std::move(rays[i]));
        for (detail::Ray& r : created) kept.push_back(std::move(r));
        rays = std::move(kept);
    }

    // Rays are the facets; recover tight point sets exactly.
    HullResult out;
    std::vector<std::vector<int>> tight_pts(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t p = 0; p < m; ++p)
            if (dot(rays[i].v, cons[p]) == 0) tight_pts[i].push_back(int(p));
    }
    // A point is extreme iff its tight facet normals span the full space.
    std::vector<std::vector<int>> facets_at(m);
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (int p : tight_pts[i]) facets_at[p].push_back(int(i));
    for (std::size_t p = 0; p < m; ++p) {
        if (facets_at[p].size() < n) continue;
        RatMat normals(facets_at[p].size(), n);
        for (std::size_t r = 0; r < facets_at[p].size(); ++r)
            for (std::size_t j = 0; j < n; ++j)
                normals(r, j) = Rat(rays[facets_at[p][r]].v[j + 1]);
        if (rank(normals) == n) out.vertices.push_back(int(p));
    }

    for (std::size_t i = 0; i < rays.size(); ++i) {
        HullFacet f;
        f.offset = rays[i].v[0];
        f.normal = IntVec(rays[i].v.begin() + 1, rays[i].v.end());
        f.tight = std::move(tight_pts[i]);
        out.facets.push_back(std::move(f));
    }
    std::sort(out.facets.begin(), out.facets.end(), [](const HullFacet& a, const HullFacet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    });
    return out;
}

}  // namespace rlp
