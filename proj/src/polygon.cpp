#include "minkval/polygon.hpp"
#include "minkval/errors.hpp"

#include <algorithm>
#include <cmath>

namespace minkval {

namespace {

double cross(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dist2(const P2& a, const P2& b) {
    double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

void rotate_to_canonical_start(std::vector<P2>& v) {
    size_t best = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[best]) best = i;
    std::rotate(v.begin(), v.begin() + static_cast<long>(best), v.end());
}

} // namespace

Polygon make_polygon(const std::vector<P2>& points) {
    if (points.empty()) throw EmptyBody("make_polygon: no points");

    double diam2 = 0.0;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            diam2 = std::max(diam2, dist2(points[i], points[j]));
    const double eps = 1e-9 * std::max(std::sqrt(diam2), 1e-300);

    std::vector<P2> pts;
    for (const P2& p : points) {
        bool dup = false;
        for (const P2& q : pts)
            if (dist2(p, q) <= eps * eps) { dup = true; break; }
        if (!dup) pts.push_back(p);
    }

    Polygon out;
    if (pts.size() == 1) {
        out.vertices = pts;
        out.degenerate = true;
        return out;
    }

    // Andrew monotone chain; strictly convex turns only.
    std::sort(pts.begin(), pts.end());
    const double area_eps = eps * std::sqrt(diam2);
    auto build = [&](std::vector<P2>& chain, const P2& p) {
        while (chain.size() >= 2 &&
               cross(chain[chain.size() - 2], chain.back(), p) <= area_eps)
            chain.pop_back();
        chain.push_back(p);
    };
    std::vector<P2> lower, upper;
    for (const P2& p : pts) build(lower, p);
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) build(upper, *it);

    std::vector<P2> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);

    if (hull.size() <= 2) {
        // Collinear: keep the two extreme sorted points.
        out.vertices = {pts.front(), pts.back()};
        out.degenerate = true;
        return out;
    }
    rotate_to_canonical_start(hull);
    out.vertices = std::move(hull);
    return out;
}

Polygon polygon_square() {
    return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Polygon polygon_triangle() {
    return make_polygon({{0, 0}, {1, 0}, {0, 1}});
}

Polygon polygon_disc(int k, double radius) {
    if (k < 3) throw DimensionError("polygon_disc: need k >= 3");
    std::vector<P2> pts;
    pts.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        double a = 2.0 * M_PI * j / k;
        pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return make_polygon(pts);
}

Polygon polygon_segment(const std::complex<double>& a, const std::complex<double>& b) {
    return make_polygon({{a.real(), a.imag()}, {b.real(), b.imag()}});
}

double polygon_area(const Polygon& P) {
    if (!P.full_dimensional()) return 0.0;
    double s = 0.0;
    const auto& v = P.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const P2& a = v[i];
        const P2& b = v[(i + 1) % v.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return 0.5 * s;
}

double polygon_perimeter(const Polygon& P) {
    const auto& v = P.vertices;
    if (v.size() < 2) return 0.0;
    if (P.is_segment()) return 2.0 * std::sqrt(dist2(v[0], v[1]));
    double s = 0.0;
    for (size_t i = 0; i < v.size(); ++i)
        s += std::sqrt(dist2(v[i], v[(i + 1) % v.size()]));
    return s;
}

double polygon_diameter(const Polygon& P) {
    double d2 = 0.0;
    for (size_t i = 0; i < P.vertices.size(); ++i)
        for (size_t j = i + 1; j < P.vertices.size(); ++j)
            d2 = std::max(d2, dist2(P.vertices[i], P.vertices[j]));
    return std::sqrt(d2);
}

double polygon_support(const Polygon& P, const P2& dir) {
    if (P.vertices.empty()) throw EmptyBody("polygon_support: empty polygon");
    double best = -1e300;
    for (const P2& v : P.vertices)
        best = std::max(best, v[0] * dir[0] + v[1] * dir[1]);
    return best;
}

Polygon polygon_translate(const Polygon& P, const P2& x) {
    Polygon out = P;
    for (P2& v : out.vertices) {
        v[0] += x[0];
        v[1] += x[1];
    }
    rotate_to_canonical_start(out.vertices);
    return out;
}

Polygon polygon_scale(const Polygon& P, double t) {
    std::vector<P2> pts;
    pts.reserve(P.vertices.size());
    for (const P2& v : P.vertices) pts.push_back({t * v[0], t * v[1]});
    return make_polygon(pts);
}

Polygon polygon_conjugate(const Polygon& P) {
    std::vector<P2> pts;
    pts.reserve(P.vertices.size());
    for (const P2& v : P.vertices) pts.push_back({v[0], -v[1]});
    return make_polygon(pts);
}

Polygon polygon_minkowski_sum(const Polygon& A, const Polygon& B) {
    std::vector<P2> pts;
    pts.reserve(A.vertices.size() * B.vertices.size());
    for (const P2& a : A.vertices)
        for (const P2& b : B.vertices) pts.push_back({a[0] + b[0], a[1] + b[1]});
    return make_polygon(pts);
}

namespace {

double point_segment_distance(const P2& p, const P2& a, const P2& b) {
    double vx = b[0] - a[0], vy = b[1] - a[1];
    double wx = p[0] - a[0], wy = p[1] - a[1];
    double vv = vx * vx + vy * vy;
    double t = vv > 0.0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
    double dx = wx - t * vx, dy = wy - t * vy;
    return std::sqrt(dx * dx + dy * dy);
}

} // namespace

double polygon_point_distance(const P2& p, const Polygon& P) {
    const auto& v = P.vertices;
    if (v.empty()) throw EmptyBody("polygon_point_distance: empty polygon");
    if (v.size() == 1) return std::sqrt(dist2(p, v[0]));
    if (P.full_dimensional()) {
        bool inside = true;
        for (size_t i = 0; i < v.size(); ++i)
            if (cross(v[i], v[(i + 1) % v.size()], p) < 0.0) { inside = false; break; }
        if (inside) return 0.0;
    }
    double d = 1e300;
    size_t edges = P.is_segment() ? 1 : v.size();
    for (size_t i = 0; i < edges; ++i)
        d = std::min(d, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
    return d;
}

double polygon_hausdorff(const Polygon& A, const Polygon& B) {
    double d = 0.0;
    for (const P2& v : A.vertices) d = std::max(d, polygon_point_distance(v, B));
    for (const P2& v : B.vertices) d = std::max(d, polygon_point_distance(v, A));
    return d;
}

bool polygon_equal(const Polygon& A, const Polygon& B, double tol) {
    return polygon_hausdorff(A, B) <= tol;
}

Polytope polygon_to_polytope(const Polygon& P) {
    std::vector<Vec> verts;
    verts.reserve(P.vertices.size());
    for (const P2& v : P.vertices) verts.push_back({v[0], v[1]});
    Polytope out(std::move(verts), 2);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.canonical = true;
    return out;
}

Polygon polytope_to_polygon(const Polytope& K) {
    if (K.dim_ambient != 2)
        throw DimensionError("polytope_to_polygon: body is not planar");
    std::vector<P2> pts;
    pts.reserve(K.size());
    for (const Vec& v : K.vertices) pts.push_back({v[0], v[1]});
    return make_polygon(pts);
}

} // namespace minkval
