#include "minkval/planar_ops.hpp"
#include "minkval/errors.hpp"

#include <cmath>

namespace minkval {

double mixed_area(const Polygon& K, const Polygon& L) {
    if (K.vertices.empty() || L.vertices.empty())
        throw EmptyBody("mixed_area: empty polygon");
    AreaMeasureS1 s = area_measure(K);
    double acc = 0.0;
    for (const MeasureAtom& a : s.atoms)
        acc += a.weight * polygon_support(L, {std::cos(a.angle), std::sin(a.angle)});
    return 0.5 * acc;
}

P2 steiner_point(const Polygon& K) {
    if (K.vertices.empty()) throw EmptyBody("steiner_point: empty polygon");
    if (K.is_point()) return K.vertices[0];
    if (K.is_segment())
        return {0.5 * (K.vertices[0][0] + K.vertices[1][0]),
                0.5 * (K.vertices[0][1] + K.vertices[1][1])};

    // Edge normal angles; vertex v_{i+1} supports directions in
    // [theta_i, theta_{i+1}] between the normals of its incident edges.
    const auto& v = K.vertices;
    const size_t nv = v.size();
    std::vector<double> theta(nv);
    for (size_t i = 0; i < nv; ++i) {
        const P2& a = v[i];
        const P2& b = v[(i + 1) % nv];
        theta[i] = std::atan2(-(b[0] - a[0]), b[1] - a[1]);
    }

    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < nv; ++i) {
        double a = theta[i];
        double b = theta[(i + 1) % nv];
        while (b < a) b += 2.0 * M_PI;
        const P2& p = v[(i + 1) % nv];
        double icc = 0.5 * (b - a) + 0.25 * (std::sin(2 * b) - std::sin(2 * a));
        double iss = 0.5 * (b - a) - 0.25 * (std::sin(2 * b) - std::sin(2 * a));
        double isc = 0.5 * (std::sin(b) * std::sin(b) - std::sin(a) * std::sin(a));
        sx += p[0] * icc + p[1] * isc;
        sy += p[0] * isc + p[1] * iss;
    }
    return {sx / M_PI, sy / M_PI};
}

double minkowski_inequality_gap(const Polygon& C1, const Polygon& C2) {
    double v12 = mixed_area(C1, C2);
    return v12 * v12 - mixed_area(C1, C1) * mixed_area(C2, C2);
}

Polygon steiner_centered(const Polygon& K) {
    P2 s = steiner_point(K);
    return polygon_translate(K, {-s[0], -s[1]});
}

} // namespace minkval
