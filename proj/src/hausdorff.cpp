#include "minkval/hausdorff.hpp"
#include "minkval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace minkval {

double point_body_distance(const Vec& p, const Polytope& K, int max_iter) {
    if (K.empty()) throw EmptyBody("point_body_distance: empty body");
    const size_t nv = K.size();
    const int n = static_cast<int>(p.size());

    double scl = 1.0;
    for (const Vec& v : K.vertices) scl = std::max(scl, norm(sub(v, p)));
    const double gap_tol = 1e-10 * scl;

    // Active-set representation x = sum_i w_i v_i.
    std::vector<double> w(nv, 0.0);
    size_t start = 0;
    double best0 = norm(sub(K.vertices[0], p));
    for (size_t i = 1; i < nv; ++i) {
        double d = norm(sub(K.vertices[i], p));
        if (d < best0) { best0 = d; start = i; }
    }
    w[start] = 1.0;
    Vec x = K.vertices[start];

    for (int it = 0; it < max_iter; ++it) {
        Vec g = sub(x, p); // gradient of 0.5*|x-p|^2

        // Toward vertex: minimize <g, v>.
        size_t s = 0;
        double smin = dot(g, K.vertices[0]);
        for (size_t i = 1; i < nv; ++i) {
            double d = dot(g, K.vertices[i]);
            if (d < smin) { smin = d; s = i; }
        }
        // Away vertex: maximize <g, v> over the active set.
        size_t a = 0;
        double amax = -1e300;
        for (size_t i = 0; i < nv; ++i) {
            if (w[i] <= 0.0) continue;
            double d = dot(g, K.vertices[i]);
            if (d > amax) { amax = d; a = i; }
        }

        double gap = dot(g, x) - smin;
        if (gap <= gap_tol) return norm(g);

        bool away = (amax - dot(g, x)) > (dot(g, x) - smin) && w[a] < 1.0;
        Vec dir;
        double gamma_max;
        if (away) {
            dir = sub(x, K.vertices[a]); // move away from the worst vertex
            gamma_max = w[a] / (1.0 - w[a]);
        } else {
            dir = sub(K.vertices[s], x);
            gamma_max = 1.0;
        }
        double denom = dot(dir, dir);
        if (denom <= 0.0) return norm(g);
        double gamma = std::clamp(-dot(g, dir) / denom, 0.0, gamma_max);
        if (gamma <= 0.0) return norm(g);

        if (away) {
            for (size_t i = 0; i < nv; ++i) w[i] *= (1.0 + gamma);
            w[a] -= gamma;
            if (w[a] < 1e-15) w[a] = 0.0;
        } else {
            for (size_t i = 0; i < nv; ++i) w[i] *= (1.0 - gamma);
            w[s] += gamma;
        }
        x.assign(static_cast<size_t>(n), 0.0);
        for (size_t i = 0; i < nv; ++i)
            if (w[i] > 0.0) x = add(x, scale(K.vertices[i], w[i]));
    }
    throw NumericalError("point_body_distance: Frank-Wolfe did not converge");
}

double hausdorff_distance(const Polytope& K, const Polytope& L, int max_iter) {
    if (K.empty() || L.empty()) throw EmptyBody("hausdorff_distance: empty body");
    if (K.dim_ambient != L.dim_ambient)
        throw DimensionError("hausdorff_distance: ambient dimensions differ");
    double d = 0.0;
    for (const Vec& v : K.vertices) d = std::max(d, point_body_distance(v, L, max_iter));
    for (const Vec& v : L.vertices) d = std::max(d, point_body_distance(v, K, max_iter));
    return d;
}

} // namespace minkval
