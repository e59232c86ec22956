#include "minkval/polytope.hpp"
#include "minkval/errors.hpp"
#include "minkval/hull.hpp"

#include <algorithm>
#include <cmath>

namespace minkval {

Polytope::Polytope(std::vector<Vec> verts, int dim)
    : vertices(std::move(verts)), dim_ambient(dim) {
    for (const Vec& v : vertices)
        if (static_cast<int>(v.size()) != dim)
            throw DimensionError("Polytope: vertex dimension mismatch");
}

double support(const Polytope& K, const Vec& xi) {
    if (K.empty()) throw EmptyBody("support: empty body");
    if (xi.size() != K.vertices[0].size())
        throw DimensionError("support: direction dimension mismatch");
    double best = dot(xi, K.vertices[0]);
    for (size_t i = 1; i < K.vertices.size(); ++i)
        best = std::max(best, dot(xi, K.vertices[i]));
    return best;
}

double diameter(const Polytope& K) {
    double d = 0.0;
    for (size_t i = 0; i < K.vertices.size(); ++i)
        for (size_t j = i + 1; j < K.vertices.size(); ++j)
            d = std::max(d, norm(sub(K.vertices[i], K.vertices[j])));
    return d;
}

double body_scale(const Polytope& K) { return std::max(1.0, diameter(K)); }

double pair_scale(const Polytope& K, const Polytope& L) {
    return std::max(body_scale(K), body_scale(L));
}

Polytope translate(const Polytope& K, const Vec& x) {
    if (!K.empty() && x.size() != K.vertices[0].size())
        throw DimensionError("translate: dimension mismatch");
    Polytope out;
    out.dim_ambient = K.dim_ambient;
    out.canonical = K.canonical;
    out.vertices.reserve(K.size());
    for (const Vec& v : K.vertices) out.vertices.push_back(add(v, x));
    if (out.canonical) std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

Polytope reflect(const Polytope& K) {
    Polytope out;
    out.dim_ambient = K.dim_ambient;
    out.canonical = K.canonical;
    out.vertices.reserve(K.size());
    for (const Vec& v : K.vertices) out.vertices.push_back(negate(v));
    if (out.canonical) std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

int affine_rank(const std::vector<Vec>& points) {
    if (points.size() <= 1) return 0;
    std::vector<Vec> diffs;
    for (size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));
    return static_cast<int>(orthonormal_basis(diffs, 1e-9).size());
}

namespace {

// Extreme points of a point set of arbitrary affine rank: projects to the
// affine span and runs the hull there; rank <= 1 handled directly.
std::vector<Vec> extreme_points(const std::vector<Vec>& points) {
    if (points.empty()) return {};
    const int n = static_cast<int>(points[0].size());

    double diam = 0.0;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            diam = std::max(diam, norm(sub(points[i], points[j])));
    const double eps = 1e-9 * std::max(diam, 1e-300);

    std::vector<Vec> pts;
    for (const Vec& p : points) {
        bool dup = false;
        for (const Vec& q : pts)
            if (norm(sub(p, q)) <= eps) { dup = true; break; }
        if (!dup) pts.push_back(p);
    }
    if (pts.size() == 1) return pts;

    std::vector<Vec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    std::vector<Vec> basis = orthonormal_basis(diffs, 1e-9);
    const int rank = static_cast<int>(basis.size());

    if (rank == 0) return {pts[0]};
    if (rank == 1) {
        // Segment: keep the two ends along the spanning direction.
        const Vec& dir = basis[0];
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < pts.size(); ++i) {
            double t = dot(dir, sub(pts[i], pts[0]));
            if (t < dot(dir, sub(pts[lo], pts[0]))) lo = i;
            if (t > dot(dir, sub(pts[hi], pts[0]))) hi = i;
        }
        return {pts[lo], pts[hi]};
    }

    std::vector<Vec> proj;
    proj.reserve(pts.size());
    for (const Vec& p : pts) {
        Vec q(static_cast<size_t>(rank));
        Vec d = sub(p, pts[0]);
        for (int k = 0; k < rank; ++k) q[k] = dot(basis[k], d);
        proj.push_back(std::move(q));
    }
    HullResult hr = (rank == n) ? convex_hull(pts) : convex_hull(proj);
    std::vector<Vec> out;
    out.reserve(hr.vertex_indices.size());
    for (int idx : hr.vertex_indices) out.push_back(pts[idx]);
    return out;
}

} // namespace

Polytope canonicalize(const Polytope& K) {
    if (K.empty()) throw EmptyBody("canonicalize: empty body");
    if (K.canonical) return K;
    Polytope out;
    out.dim_ambient = K.dim_ambient;
    out.vertices = extreme_points(K.vertices);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.canonical = true;
    return out;
}

bool polytope_equal(const Polytope& A, const Polytope& B) {
    Polytope a = canonicalize(A);
    Polytope b = canonicalize(B);
    if (a.size() != b.size() || a.dim_ambient != b.dim_ambient) return false;
    const double tol = 1e-9 * std::max(pair_scale(a, b), 1.0);
    for (size_t i = 0; i < a.size(); ++i) {
        double d = 0.0;
        for (size_t j = 0; j < a.vertices[i].size(); ++j)
            d = std::max(d, std::fabs(a.vertices[i][j] - b.vertices[i][j]));
        if (d > tol) return false;
    }
    return true;
}

Polytope minkowski_sum(const Polytope& K, const Polytope& L) {
    if (K.empty() || L.empty()) throw EmptyBody("minkowski_sum: empty body");
    if (K.dim_ambient != L.dim_ambient)
        throw DimensionError("minkowski_sum: ambient dimensions differ");
    std::vector<Vec> sums;
    sums.reserve(K.size() * L.size());
    for (const Vec& a : K.vertices)
        for (const Vec& b : L.vertices) sums.push_back(add(a, b));
    return canonicalize(Polytope(std::move(sums), K.dim_ambient));
}

Polytope apply_matrix(const Mat& M, const Polytope& K) {
    if (K.empty()) throw EmptyBody("apply_matrix: empty body");
    if (M.n != K.dim_ambient)
        throw DimensionError("apply_matrix: matrix/body dimension mismatch");
    std::vector<Vec> verts;
    verts.reserve(K.size());
    for (const Vec& v : K.vertices) verts.push_back(mat_vec(M, v));
    return canonicalize(Polytope(std::move(verts), K.dim_ambient));
}

Polytope make_point(const Vec& x) {
    Polytope p({x}, static_cast<int>(x.size()));
    p.canonical = true;
    return p;
}

Polytope make_segment(const Vec& a, const Vec& b) {
    return canonicalize(Polytope({a, b}, static_cast<int>(a.size())));
}

Polytope make_cube(int n) {
    std::vector<Vec> verts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec v(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) v[j] = (mask >> j) & 1 ? 1.0 : 0.0;
        verts.push_back(std::move(v));
    }
    Polytope p(std::move(verts), n);
    std::sort(p.vertices.begin(), p.vertices.end());
    p.canonical = true;
    return p;
}

Polytope make_simplex(int n) {
    std::vector<Vec> verts{Vec(static_cast<size_t>(n), 0.0)};
    for (int j = 0; j < n; ++j) {
        Vec v(static_cast<size_t>(n), 0.0);
        v[j] = 1.0;
        verts.push_back(std::move(v));
    }
    Polytope p(std::move(verts), n);
    std::sort(p.vertices.begin(), p.vertices.end());
    p.canonical = true;
    return p;
}

} // namespace minkval
