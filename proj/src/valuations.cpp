#include "minkval/valuations.hpp"
#include "minkval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <string>

namespace minkval {

double SupportEvaluator::operator()(const Vec& dir) const {
    double n = norm(dir);
    if (n == 0.0) return 0.0;
    return n * value_at_unit(scale(dir, 1.0 / n));
}

Vec SupportEvaluator::support_point(const Vec& dir) const {
    if (!point_at_unit) throw NumericalError("SupportEvaluator: no support points");
    double n = norm(dir);
    if (n == 0.0) throw NumericalError("SupportEvaluator: zero direction");
    return point_at_unit(scale(dir, 1.0 / n));
}

Polytope difference_body(const Polytope& K) {
    return minkowski_sum(K, reflect(K));
}

Polytope complex_difference_body(const Polygon& C, const Polytope& K,
                                 const ComplexStructure& J) {
    if (K.dim_ambient != J.J.n)
        throw DimensionError("complex_difference_body: body/structure mismatch");
    AreaMeasureS1 SC = area_measure(C);
    if (SC.empty()) return make_point(Vec(static_cast<size_t>(K.dim_ambient), 0.0));

    Polytope acc;
    bool first = true;
    for (const MeasureAtom& a : SC.atoms) {
        Mat rot = scalar_matrix(ComplexScalar(std::cos(a.angle), std::sin(a.angle)), J);
        Polytope term = apply_matrix(mat_scale(rot, a.weight), K);
        acc = first ? term : minkowski_sum(acc, term);
        first = false;
    }
    return acc;
}

double complex_difference_support(const AreaMeasureS1& SC, const Polytope& K,
                                  const ComplexStructure& J, const Vec& xi) {
    if (K.empty()) throw EmptyBody("complex_difference_support: empty body");
    double total = 0.0;
    for (const MeasureAtom& a : SC.atoms) {
        // h(w (alpha K), xi) = w * max_k <M_alpha^T xi, k>.
        Mat rot_t = mat_transpose(
            scalar_matrix(ComplexScalar(std::cos(a.angle), std::sin(a.angle)), J));
        Vec eta = mat_vec(rot_t, xi);
        total += a.weight * support(K, eta);
    }
    return total;
}

SupportEvaluator complex_difference_evaluator(const Polygon& C, const Polytope& K,
                                              const ComplexStructure& J) {
    AreaMeasureS1 SC = area_measure(C);
    const int n = K.dim_ambient;

    struct Term {
        Mat rot_t;   // transpose of the rotation
        Mat rot;
        double w;
    };
    auto terms = std::make_shared<std::vector<Term>>();
    for (const MeasureAtom& a : SC.atoms) {
        Mat rot = scalar_matrix(ComplexScalar(std::cos(a.angle), std::sin(a.angle)), J);
        terms->push_back({mat_transpose(rot), rot, a.weight});
    }
    auto body = std::make_shared<Polytope>(K);

    SupportEvaluator ev;
    ev.value_at_unit = [terms, body](const Vec& xi) {
        double total = 0.0;
        for (const Term& t : *terms)
            total += t.w * support(*body, mat_vec(t.rot_t, xi));
        return total;
    };
    ev.point_at_unit = [terms, body, n](const Vec& xi) {
        Vec pt(static_cast<size_t>(n), 0.0);
        for (const Term& t : *terms) {
            Vec eta = mat_vec(t.rot_t, xi);
            size_t best = 0;
            double bv = dot(eta, body->vertices[0]);
            for (size_t i = 1; i < body->vertices.size(); ++i) {
                double v = dot(eta, body->vertices[i]);
                if (v > bv) { bv = v; best = i; }
            }
            pt = add(pt, scale(mat_vec(t.rot, body->vertices[best]), t.w));
        }
        return pt;
    };
    return ev;
}

double mixed_volume_top(const HullResult& hk, const Polytope& L, int n) {
    double s = 0.0;
    for (const HullFacet& f : hk.facets)
        s += support(L, f.normal) * f.measure;
    return s / static_cast<double>(n);
}

double mixed_volume_top(const Polytope& K, const Polytope& L) {
    if (K.dim_ambient != L.dim_ambient)
        throw DimensionError("mixed_volume_top: ambient dimensions differ");
    HullResult hk = convex_hull(K.vertices);
    return mixed_volume_top(hk, L, K.dim_ambient);
}

double mixed_volume_top_fit(const Polytope& K, const Polytope& L) {
    if (K.dim_ambient != L.dim_ambient)
        throw DimensionError("mixed_volume_top_fit: ambient dimensions differ");
    const int n = K.dim_ambient;
    std::vector<double> t(static_cast<size_t>(n) + 1), vols(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        t[k] = static_cast<double>(k);
        if (k == 0) {
            vols[k] = convex_hull(K.vertices).volume;
            continue;
        }
        std::vector<Vec> pts;
        pts.reserve(K.size() * L.size());
        for (const Vec& a : K.vertices)
            for (const Vec& b : L.vertices) pts.push_back(add(a, scale(b, t[k])));
        vols[k] = convex_hull(pts).volume;
    }
    std::vector<double> coeff = polynomial_fit(t, vols);
    return coeff[1] / static_cast<double>(n);
}

Polytope polygon_times_vector(const Polygon& C, const Vec& w, const ComplexStructure& J) {
    Vec jw = mat_vec(J.J, w);
    std::vector<Vec> verts;
    verts.reserve(C.vertices.size());
    for (const P2& c : C.vertices)
        verts.push_back(add(scale(w, c[0]), scale(jw, c[1])));
    return canonicalize(Polytope(std::move(verts), J.J.n));
}

SupportEvaluator complex_projection_body(const Polygon& C, const Polytope& K,
                                         const ComplexStructure& J) {
    if (K.dim_ambient != J.J.n)
        throw DimensionError("complex_projection_body: body/structure mismatch");
    auto hk = std::make_shared<HullResult>(convex_hull(K.vertices)); // may raise DegenerateHull
    auto cverts = std::make_shared<std::vector<P2>>(C.vertices);
    auto Jm = std::make_shared<Mat>(J.J);
    const int n = J.J.n;

    SupportEvaluator ev;
    ev.value_at_unit = [hk, cverts, Jm, n](const Vec& w) {
        Vec jw = mat_vec(*Jm, w);
        double s = 0.0;
        for (const HullFacet& f : hk->facets) {
            double uw = dot(f.normal, w);
            double ujw = dot(f.normal, jw);
            double best = -1e300;
            for (const P2& c : *cverts) best = std::max(best, c[0] * uw + c[1] * ujw);
            s += best * f.measure;
        }
        return s / static_cast<double>(n);
    };
    ev.point_at_unit = [hk, cverts, Jm, n](const Vec& w) {
        Vec jw = mat_vec(*Jm, w);
        Vec pt(w.size(), 0.0);
        for (const HullFacet& f : hk->facets) {
            double uw = dot(f.normal, w);
            double ujw = dot(f.normal, jw);
            double best = -1e300;
            P2 arg{0, 0};
            for (const P2& c : *cverts) {
                double v = c[0] * uw + c[1] * ujw;
                if (v > best) { best = v; arg = c; }
            }
            Vec jn = mat_vec(*Jm, f.normal);
            // d/dw of (re c <w,u> + im c <Jw,u>) = re(c) u - im(c) J u.
            pt = add(pt, scale(sub(scale(f.normal, arg[0]), scale(jn, arg[1])),
                               f.measure / static_cast<double>(n)));
        }
        return pt;
    };
    return ev;
}

namespace {

cplx complex_coord(const Vec& v, int k) {
    return {v[2 * static_cast<size_t>(k)], v[2 * static_cast<size_t>(k) + 1]};
}

void require_m2(const ComplexStructure& J, const char* who) {
    if (J.m != 2)
        throw UnsupportedDimension(std::string(who) + ": requires m = 2");
}

// Matrix B with re det(u,v) = <B^T u, v> in the standard basis of C^2.
Mat det_pairing_matrix() {
    Mat B(4);
    B.at(0, 2) = 1.0;
    B.at(1, 3) = -1.0;
    B.at(2, 0) = -1.0;
    B.at(3, 1) = 1.0;
    return B;
}

} // namespace

Polygon det2_body(const Polytope& K, const Vec& w, const ComplexStructure& J) {
    require_m2(J, "det2_body");
    cplx w1 = complex_coord(w, 0), w2 = complex_coord(w, 1);
    std::vector<P2> pts;
    pts.reserve(K.size());
    for (const Vec& k : K.vertices) {
        cplx d = complex_coord(k, 0) * w2 - complex_coord(k, 1) * w1;
        pts.push_back({d.real(), d.imag()});
    }
    return make_polygon(pts);
}

SupportEvaluator det2_contravariant(const Polygon& C, const Polytope& K,
                                    const ComplexStructure& J) {
    require_m2(J, "det2_contravariant");
    auto SC = std::make_shared<AreaMeasureS1>(area_measure(C));
    auto body = std::make_shared<Polytope>(K);
    auto Jc = std::make_shared<ComplexStructure>(J);

    SupportEvaluator ev;
    ev.value_at_unit = [SC, body, Jc](const Vec& w) {
        Polygon dk = det2_body(*body, w, *Jc);
        double s = 0.0;
        for (const MeasureAtom& a : SC->atoms)
            s += a.weight * polygon_support(dk, {std::cos(a.angle), std::sin(a.angle)});
        return s;
    };
    return ev;
}

SupportEvaluator det2_covariant(const Polygon& C, const Polytope& K,
                                const ComplexStructure& J) {
    require_m2(J, "det2_covariant");
    auto hk = std::make_shared<HullResult>(convex_hull(K.vertices));
    auto cpoly = std::make_shared<Polygon>(C);
    auto Jc = std::make_shared<ComplexStructure>(J);
    Mat Bt_inv = mat_inverse(mat_transpose(det_pairing_matrix()));
    auto phi_inv = std::make_shared<Mat>(Bt_inv);

    SupportEvaluator ev;
    ev.value_at_unit = [hk, cpoly, Jc, phi_inv](const Vec& xi) {
        Vec w = mat_vec(*phi_inv, xi);
        Polytope cw = polygon_times_vector(*cpoly, w, *Jc);
        return mixed_volume_top(*hk, cw, 4);
    };
    return ev;
}

Polytope materialize(const SupportEvaluator& h, int dim, int dirs, unsigned seed) {
    if (!h.has_points())
        throw NumericalError("materialize: evaluator exposes no support points");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(dirs));
    for (int i = 0; i < dirs; ++i) {
        Vec u(static_cast<size_t>(dim));
        double nn = 0.0;
        while (nn == 0.0) {
            for (double& x : u) x = gauss(rng);
            nn = norm(u);
        }
        pts.push_back(h.support_point(scale(u, 1.0 / nn)));
    }
    return canonicalize(Polytope(std::move(pts), dim));
}

BodyValuation make_valuation(const ValuationOperator& op, const ComplexStructure& J) {
    switch (op.kind) {
        case OperatorKind::Difference: {
            Polygon c = polygon_segment({0.0, 0.0}, {0.0, -1.0});
            return [c, J](const Polytope& K) { return complex_difference_evaluator(c, K, J); };
        }
        case OperatorKind::ComplexDifference: {
            Polygon c = op.C;
            return [c, J](const Polytope& K) { return complex_difference_evaluator(c, K, J); };
        }
        case OperatorKind::ComplexProjection: {
            if (op.m < 2)
                throw UnsupportedDimension("ComplexProjection requires m >= 2");
            Polygon c = op.C;
            return [c, J](const Polytope& K) { return complex_projection_body(c, K, J); };
        }
        case OperatorKind::Det2Contra: {
            Polygon c = op.C;
            return [c, J](const Polytope& K) { return det2_contravariant(c, K, J); };
        }
        case OperatorKind::Det2Cova: {
            Polygon c = op.C;
            return [c, J](const Polytope& K) { return det2_covariant(c, K, J); };
        }
    }
    throw NumericalError("make_valuation: unknown operator kind");
}

bool operator_is_contravariant(OperatorKind kind) {
    return kind == OperatorKind::ComplexProjection || kind == OperatorKind::Det2Contra;
}

int operator_degree(const ValuationOperator& op) {
    switch (op.kind) {
        case OperatorKind::Difference:
        case OperatorKind::ComplexDifference:
        case OperatorKind::Det2Contra:
            return 1;
        case OperatorKind::ComplexProjection:
            return 2 * op.m - 1;
        case OperatorKind::Det2Cova:
            return 3;
    }
    return 0;
}

} // namespace minkval
