#include "minkval/area_measure.hpp"
#include "minkval/errors.hpp"

#include <algorithm>
#include <cmath>

namespace minkval {

double AreaMeasureS1::total_mass() const {
    double s = 0.0;
    for (const MeasureAtom& a : atoms) s += a.weight;
    return s;
}

namespace {

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI) a = 0.0;
    return a;
}

} // namespace

AreaMeasureS1 make_measure(std::vector<MeasureAtom> atoms) {
    const double merge_tol = 1e-10;
    std::vector<MeasureAtom> kept;
    for (MeasureAtom a : atoms) {
        if (a.weight <= 0.0) continue;
        a.angle = wrap_angle(a.angle);
        kept.push_back(a);
    }
    std::sort(kept.begin(), kept.end(),
              [](const MeasureAtom& a, const MeasureAtom& b) { return a.angle < b.angle; });
    AreaMeasureS1 mu;
    for (const MeasureAtom& a : kept) {
        if (!mu.atoms.empty() && a.angle - mu.atoms.back().angle < merge_tol) {
            // Mass-weighted merge of nearly identical angles.
            MeasureAtom& b = mu.atoms.back();
            b.angle = (b.angle * b.weight + a.angle * a.weight) / (b.weight + a.weight);
            b.weight += a.weight;
        } else {
            mu.atoms.push_back(a);
        }
    }
    // Wrap-around merge: last atom within tolerance of first + 2*pi.
    if (mu.atoms.size() >= 2) {
        MeasureAtom& first = mu.atoms.front();
        MeasureAtom& last = mu.atoms.back();
        if (first.angle + 2.0 * M_PI - last.angle < merge_tol) {
            double w = first.weight + last.weight;
            double ang = wrap_angle((first.angle + 2.0 * M_PI) * first.weight / w +
                                    last.angle * last.weight / w);
            first.angle = ang;
            first.weight = w;
            mu.atoms.pop_back();
        }
    }
    return mu;
}

AreaMeasureS1 area_measure(const Polygon& C) {
    std::vector<MeasureAtom> atoms;
    const auto& v = C.vertices;
    if (v.size() <= 1) return {};

    if (C.is_segment()) {
        double dx = v[1][0] - v[0][0];
        double dy = v[1][1] - v[0][1];
        double len = std::hypot(dx, dy);
        // Outward normals of the two sides: +-(direction rotated by -pi/2).
        double a = std::atan2(-dx, dy); // angle of (dy, -dx)
        atoms.push_back({a, len});
        atoms.push_back({a + M_PI, len});
        return make_measure(std::move(atoms));
    }

    for (size_t i = 0; i < v.size(); ++i) {
        const P2& a = v[i];
        const P2& b = v[(i + 1) % v.size()];
        double dx = b[0] - a[0];
        double dy = b[1] - a[1];
        double len = std::hypot(dx, dy);
        // CCW edge direction (dx,dy): outward normal is (dy,-dx)/len.
        atoms.push_back({std::atan2(-dx, dy), len});
    }
    return make_measure(std::move(atoms));
}

Polygon minkowski_reconstruct(const AreaMeasureS1& mu) {
    if (mu.empty()) {
        Polygon p;
        p.vertices = {{0.0, 0.0}};
        p.degenerate = true;
        return p;
    }

    double cx = 0.0, cy = 0.0;
    for (const MeasureAtom& a : mu.atoms) {
        cx += a.weight * std::cos(a.angle);
        cy += a.weight * std::sin(a.angle);
    }
    const double mass = mu.total_mass();
    if (std::hypot(cx, cy) > 1e-8 * mass)
        throw NotClosable("minkowski_reconstruct: measure centroid is not zero");

    if (mu.atoms.size() == 1)
        throw NotClosable("minkowski_reconstruct: single atom cannot close");

    if (mu.atoms.size() == 2) {
        // Two antipodal atoms: centered segment perpendicular to the normal.
        const MeasureAtom& a = mu.atoms[0];
        double ex = -std::sin(a.angle), ey = std::cos(a.angle);
        double h = 0.5 * a.weight;
        return make_polygon({{-h * ex, -h * ey}, {h * ex, h * ey}});
    }

    std::vector<P2> verts;
    double x = 0.0, y = 0.0;
    for (const MeasureAtom& a : mu.atoms) {
        verts.push_back({x, y});
        // Edge vector: normal rotated by +pi/2, scaled by the weight.
        x += a.weight * -std::sin(a.angle);
        y += a.weight * std::cos(a.angle);
    }
    return make_polygon(verts);
}

} // namespace minkval
