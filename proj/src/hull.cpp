#include "minkval/hull.hpp"
#include "minkval/errors.hpp"
#include "minkval/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace minkval {

namespace {

struct SFacet {
    std::vector<int> vidx;        // n sorted point indices
    Vec normal;
    double offset = 0.0;
    bool alive = true;
    std::vector<int> outside;     // candidate points beyond this facet
};

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double spread(const std::vector<Vec>& pts) {
    if (pts.empty()) return 0.0;
    const size_t n = pts[0].size();
    double d = 0.0;
    for (size_t j = 0; j < n; ++j) {
        double lo = pts[0][j], hi = pts[0][j];
        for (const Vec& p : pts) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        d = std::max(d, hi - lo);
    }
    return d;
}

// Greedy affinely-independent seed: returns indices of n+1 points spanning
// R^n, or throws DegenerateHull with the rank reached.
std::vector<int> initial_simplex(const std::vector<Vec>& pts, int n, double tol) {
    std::vector<int> chosen;
    int first = 0;
    for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i] < pts[first]) first = static_cast<int>(i);
    chosen.push_back(first);

    std::vector<Vec> basis; // orthonormal directions of the affine span
    while (static_cast<int>(chosen.size()) < n + 1) {
        int best = -1;
        double best_res = tol;
        Vec best_dir;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (std::find(chosen.begin(), chosen.end(), static_cast<int>(i)) != chosen.end())
                continue;
            Vec w = sub(pts[i], pts[chosen[0]]);
            for (const Vec& b : basis) w = sub(w, scale(b, dot(w, b)));
            double res = norm(w);
            if (res > best_res) {
                best_res = res;
                best = static_cast<int>(i);
                best_dir = scale(w, 1.0 / res);
            }
        }
        if (best < 0)
            throw DegenerateHull("convex_hull: input not full-dimensional",
                                 static_cast<int>(basis.size()));
        chosen.push_back(best);
        basis.push_back(best_dir);
    }
    return chosen;
}

} // namespace

HullResult convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw EmptyBody("convex_hull: empty point list");
    const int n = static_cast<int>(points[0].size());
    if (n < 2) throw DimensionError("convex_hull: ambient dimension must be >= 2");
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != n)
            throw DimensionError("convex_hull: inconsistent point dimensions");

    const double diam = std::max(spread(points), 1e-300);
    const double eps = 1e-9 * diam;

    // Deduplicate, keeping first occurrences.
    std::vector<Vec> pts;
    std::vector<int> orig; // index into `points`
    for (size_t i = 0; i < points.size(); ++i) {
        bool dup = false;
        for (const Vec& q : pts) {
            double d2 = 0.0;
            for (int j = 0; j < n; ++j) d2 += (points[i][j] - q[j]) * (points[i][j] - q[j]);
            if (d2 <= eps * eps) { dup = true; break; }
        }
        if (!dup) {
            pts.push_back(points[i]);
            orig.push_back(static_cast<int>(i));
        }
    }
    if (static_cast<int>(pts.size()) < n + 1)
        throw DegenerateHull("convex_hull: fewer than n+1 distinct points",
                             affine_rank(pts));

    std::vector<int> seed = initial_simplex(pts, n, eps);

    Vec interior(static_cast<size_t>(n), 0.0);
    for (int s : seed) interior = add(interior, pts[s]);
    interior = scale(interior, 1.0 / (n + 1));

    std::vector<SFacet> facets;
    std::map<std::vector<int>, std::vector<int>> ridge_map; // ridge -> facet ids

    auto facet_plane = [&](SFacet& f) {
        std::vector<Vec> rows;
        const Vec& base = pts[f.vidx[0]];
        for (size_t i = 1; i < f.vidx.size(); ++i)
            rows.push_back(sub(pts[f.vidx[i]], base));
        f.normal = nullspace_unit(rows, n);
        double b = 0.0;
        for (int v : f.vidx) b += dot(f.normal, pts[v]);
        b /= static_cast<double>(f.vidx.size());
        if (dot(f.normal, interior) > b) {
            f.normal = negate(f.normal);
            b = -b;
        }
        f.offset = b;
    };

    auto register_ridges = [&](int fid) {
        const SFacet& f = facets[fid];
        for (size_t skip = 0; skip < f.vidx.size(); ++skip) {
            std::vector<int> ridge;
            for (size_t i = 0; i < f.vidx.size(); ++i)
                if (i != skip) ridge.push_back(f.vidx[i]);
            ridge_map[ridge].push_back(fid);
        }
    };

    for (int skip = 0; skip <= n; ++skip) {
        SFacet f;
        for (int i = 0; i <= n; ++i)
            if (i != skip) f.vidx.push_back(seed[i]);
        std::sort(f.vidx.begin(), f.vidx.end());
        facet_plane(f);
        facets.push_back(std::move(f));
        register_ridges(static_cast<int>(facets.size()) - 1);
    }

    // Assign every non-seed point to the first facet it lies beyond.
    std::deque<int> work;
    {
        std::vector<bool> in_seed(pts.size(), false);
        for (int s : seed) in_seed[s] = true;
        for (size_t p = 0; p < pts.size(); ++p) {
            if (in_seed[p]) continue;
            for (size_t f = 0; f < facets.size(); ++f) {
                if (dot(facets[f].normal, pts[p]) - facets[f].offset > eps) {
                    facets[f].outside.push_back(static_cast<int>(p));
                    break;
                }
            }
        }
        for (size_t f = 0; f < facets.size(); ++f)
            if (!facets[f].outside.empty()) work.push_back(static_cast<int>(f));
    }

    while (!work.empty()) {
        int fid = work.front();
        work.pop_front();
        if (!facets[fid].alive || facets[fid].outside.empty()) continue;

        // Apex: farthest outside point of this facet.
        int apex = -1;
        double best = -1.0;
        for (int p : facets[fid].outside) {
            double d = dot(facets[fid].normal, pts[p]) - facets[fid].offset;
            if (d > best) { best = d; apex = p; }
        }

        // Visible region: BFS across ridges.
        std::vector<int> visible{fid};
        std::vector<bool> seen(facets.size(), false);
        seen[fid] = true;
        for (size_t q = 0; q < visible.size(); ++q) {
            const SFacet& f = facets[visible[q]];
            for (size_t skip = 0; skip < f.vidx.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t i = 0; i < f.vidx.size(); ++i)
                    if (i != skip) ridge.push_back(f.vidx[i]);
                for (int nb : ridge_map[ridge]) {
                    if (seen[nb] || !facets[nb].alive) continue;
                    if (dot(facets[nb].normal, pts[apex]) - facets[nb].offset > eps) {
                        seen[nb] = true;
                        visible.push_back(nb);
                    }
                }
            }
        }

        // Horizon ridges: between a visible facet and a live invisible one.
        std::vector<std::vector<int>> horizon;
        for (int vf : visible) {
            const SFacet& f = facets[vf];
            for (size_t skip = 0; skip < f.vidx.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t i = 0; i < f.vidx.size(); ++i)
                    if (i != skip) ridge.push_back(f.vidx[i]);
                bool boundary = false;
                for (int nb : ridge_map[ridge])
                    if (facets[nb].alive && !seen[nb]) boundary = true;
                if (ridge_map[ridge].size() == 1) boundary = true; // safety
                if (boundary) horizon.push_back(ridge);
            }
        }

        // Collect orphaned candidate points, kill visible facets.
        std::vector<int> orphans;
        for (int vf : visible) {
            for (int p : facets[vf].outside)
                if (p != apex) orphans.push_back(p);
            facets[vf].outside.clear();
            facets[vf].alive = false;
            const SFacet& f = facets[vf];
            for (size_t skip = 0; skip < f.vidx.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t i = 0; i < f.vidx.size(); ++i)
                    if (i != skip) ridge.push_back(f.vidx[i]);
                auto& ids = ridge_map[ridge];
                ids.erase(std::remove(ids.begin(), ids.end(), vf), ids.end());
                if (ids.empty()) ridge_map.erase(ridge);
            }
        }

        std::vector<int> created;
        for (const std::vector<int>& ridge : horizon) {
            SFacet f;
            f.vidx = ridge;
            f.vidx.push_back(apex);
            std::sort(f.vidx.begin(), f.vidx.end());
            try {
                facet_plane(f);
            } catch (const NumericalError&) {
                // Apex lies in the ridge's affine span: the piece is flat.
                // Inherit the plane of the surviving neighbor across the ridge.
                auto it = ridge_map.find(ridge);
                if (it == ridge_map.end() || it->second.empty()) continue;
                int nb = it->second.front();
                f.normal = facets[nb].normal;
                f.offset = facets[nb].offset;
            }
            facets.push_back(std::move(f));
            int nf = static_cast<int>(facets.size()) - 1;
            created.push_back(nf);
            register_ridges(nf);
        }

        // Re-home orphans (deduplicated, original order).
        std::sort(orphans.begin(), orphans.end());
        orphans.erase(std::unique(orphans.begin(), orphans.end()), orphans.end());
        for (int p : orphans) {
            for (int nf : created) {
                if (dot(facets[nf].normal, pts[p]) - facets[nf].offset > eps) {
                    facets[nf].outside.push_back(p);
                    break;
                }
            }
        }
        for (int nf : created)
            if (!facets[nf].outside.empty()) work.push_back(nf);
    }

    // Recompute the interior point from the full vertex set; cone volumes.
    std::vector<int> used;
    for (const SFacet& f : facets)
        if (f.alive) used.insert(used.end(), f.vidx.begin(), f.vidx.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    Vec center(static_cast<size_t>(n), 0.0);
    for (int v : used) center = add(center, pts[v]);
    center = scale(center, 1.0 / static_cast<double>(used.size()));

    double volume = 0.0;
    const double nfac = factorial(n);
    for (const SFacet& f : facets) {
        if (!f.alive) continue;
        Mat M(n);
        for (int i = 0; i < n; ++i) {
            Vec e = sub(pts[f.vidx[i]], center);
            for (int j = 0; j < n; ++j) M.at(i, j) = e[j];
        }
        volume += std::fabs(mat_det(M)) / nfac;
    }

    // Merge coplanar simplicial pieces into geometric facets.
    struct Group {
        Vec normal;
        double offset;
        double measure;
        std::vector<int> vids;
    };
    std::vector<Group> groups;
    const double rfac = factorial(n - 1);
    std::vector<int> order;
    for (size_t f = 0; f < facets.size(); ++f)
        if (facets[f].alive) order.push_back(static_cast<int>(f));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (facets[a].normal != facets[b].normal) return facets[a].normal < facets[b].normal;
        return facets[a].offset < facets[b].offset;
    });
    for (int fidx : order) {
        const SFacet& f = facets[fidx];
        std::vector<Vec> edges;
        for (size_t i = 1; i < f.vidx.size(); ++i)
            edges.push_back(sub(pts[f.vidx[i]], pts[f.vidx[0]]));
        double m = gram_volume(edges) / rfac;
        bool merged = false;
        for (Group& g : groups) {
            if (dot(g.normal, f.normal) > 1.0 - 1e-9 &&
                std::fabs(g.offset - f.offset) < 1e-7 * std::max(1.0, diam)) {
                g.measure += m;
                g.vids.insert(g.vids.end(), f.vidx.begin(), f.vidx.end());
                merged = true;
                break;
            }
        }
        if (!merged) groups.push_back({f.normal, f.offset, m, f.vidx});
    }

    // Extreme points: vertices whose incident facet normals span R^n.
    std::vector<int> extreme;
    for (int v : used) {
        std::vector<Vec> normals;
        for (const Group& g : groups)
            if (dot(g.normal, pts[v]) >= g.offset - 1e-7 * diam)
                normals.push_back(g.normal);
        if (static_cast<int>(orthonormal_basis(normals, 1e-7).size()) == n)
            extreme.push_back(v);
    }

    HullResult out;
    out.volume = volume;
    for (Group& g : groups) {
        std::sort(g.vids.begin(), g.vids.end());
        g.vids.erase(std::unique(g.vids.begin(), g.vids.end()), g.vids.end());
        HullFacet hf;
        hf.normal = g.normal;
        hf.offset = g.offset;
        hf.measure = g.measure;
        for (int v : g.vids) hf.vertex_indices.push_back(orig[v]);
        out.facets.push_back(std::move(hf));
    }
    for (int v : extreme) out.vertex_indices.push_back(orig[v]);
    std::sort(out.vertex_indices.begin(), out.vertex_indices.end());
    return out;
}

} // namespace minkval
