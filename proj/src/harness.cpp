#include "minkval/harness.hpp"
#include "minkval/errors.hpp"
#include "minkval/hausdorff.hpp"
#include "minkval/hull.hpp"
#include "minkval/planar_ops.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace minkval {

void CheckReport::add(CheckCase c) {
    max_violation = std::max(max_violation, c.violation);
    c.ok = c.violation <= tolerance;
    if (!c.ok) pass = false;
    cases.push_back(std::move(c));
}

Vec random_direction(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec u(static_cast<size_t>(n));
    double nn = 0.0;
    while (nn < 1e-12) {
        for (double& x : u) x = gauss(rng);
        nn = norm(u);
    }
    return scale(u, 1.0 / nn);
}

Polytope random_polytope(int n, int vertex_count, unsigned seed) {
    if (vertex_count < n + 1)
        throw DimensionError("random_polytope: need at least n+1 vertices");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<Vec> pts;
        pts.reserve(static_cast<size_t>(vertex_count));
        for (int i = 0; i < vertex_count; ++i) pts.push_back(random_direction(n, rng));
        try {
            return canonicalize(Polytope(std::move(pts), n));
        } catch (const DegenerateHull&) {
            continue;
        }
    }
    throw DegenerateHull("random_polytope: degenerate after 10 attempts", n - 1);
}

LinearMap random_sl(int m, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexStructure J = ComplexStructure::standard(m);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<cplx> A(static_cast<size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                cplx g(gauss(rng), gauss(rng));
                A[static_cast<size_t>(i) * m + j] = (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0))
                                                    + 0.35 * g;
            }
        cplx d = complex_det(A, m);
        if (std::abs(d) < 0.4) continue; // reject badly conditioned draws
        cplx root = std::pow(d, 1.0 / static_cast<double>(m));
        for (cplx& z : A) z /= root;
        LinearMap g = realify(A, m, J);
        if (is_sl_w_c(g, J)) return g;
    }
    throw NumericalError("random_sl: failed to draw a well-conditioned element");
}

ProbeSuite make_probe_suite(int m, int n_bodies, int n_directions, int n_group,
                            unsigned seed) {
    ProbeSuite s;
    s.seed = seed;
    std::mt19937_64 rng(seed);
    const int n = 2 * m;
    for (int i = 0; i < n_bodies; ++i)
        s.bodies.push_back(random_polytope(n, n + 4 + (i % 3),
                                           seed * 7919u + 13u * static_cast<unsigned>(i) + 1u));
    for (int i = 0; i < n_directions; ++i) s.directions.push_back(random_direction(n, rng));
    for (int i = 0; i < n_group; ++i)
        s.group_elements.push_back(random_sl(m, seed * 104729u + static_cast<unsigned>(i) + 1u));
    return s;
}

SplitResult split_polytope(const Polytope& P, const Vec& normal, double offset) {
    if (P.empty()) throw EmptyBody("split_polytope: empty body");
    const double eps = 1e-12 * body_scale(P) * std::max(norm(normal), 1e-300);

    std::vector<double> side(P.size());
    bool any_below = false, any_above = false;
    for (size_t i = 0; i < P.size(); ++i) {
        side[i] = dot(normal, P.vertices[i]) - offset;
        if (side[i] < -eps) any_below = true;
        if (side[i] > eps) any_above = true;
    }
    if (!any_below || !any_above)
        throw NoSplit("split_polytope: hyperplane misses the interior");

    SplitResult out;
    out.below.dim_ambient = out.above.dim_ambient = out.slice.dim_ambient = P.dim_ambient;
    for (size_t i = 0; i < P.size(); ++i) {
        if (side[i] <= eps) out.below.vertices.push_back(P.vertices[i]);
        if (side[i] >= -eps) out.above.vertices.push_back(P.vertices[i]);
        if (std::fabs(side[i]) <= eps) out.slice.vertices.push_back(P.vertices[i]);
    }
    for (size_t i = 0; i < P.size(); ++i) {
        for (size_t j = i + 1; j < P.size(); ++j) {
            if (side[i] * side[j] >= 0.0) continue;
            if (std::fabs(side[i]) <= eps || std::fabs(side[j]) <= eps) continue;
            double t = side[i] / (side[i] - side[j]);
            Vec x = add(P.vertices[i], scale(sub(P.vertices[j], P.vertices[i]), t));
            out.below.vertices.push_back(x);
            out.above.vertices.push_back(x);
            out.slice.vertices.push_back(x);
        }
    }
    return out;
}

CheckReport check_valuation_property(const BodyValuation& Z, const Polytope& P,
                                     const Vec& normal, double offset,
                                     const std::vector<Vec>& directions,
                                     double tol_scale) {
    CheckReport rep;
    rep.check = "valuation_additivity";
    rep.tolerance = tol_scale * body_scale(P);

    SplitResult sp = split_polytope(P, normal, offset);
    SupportEvaluator zP = Z(P);
    SupportEvaluator zB = Z(sp.below);
    SupportEvaluator zA = Z(sp.above);
    SupportEvaluator zS = Z(sp.slice);
    int idx = 0;
    for (const Vec& xi : directions) {
        double lhs = zP(xi) + zS(xi);
        double rhs = zB(xi) + zA(xi);
        CheckCase c;
        c.label = "direction " + std::to_string(idx++);
        c.violation = std::fabs(lhs - rhs);
        rep.add(std::move(c));
    }
    return rep;
}

CheckReport check_translation_invariance(const BodyValuation& Z, const Polytope& K,
                                         const std::vector<Vec>& translations,
                                         const std::vector<Vec>& directions,
                                         double tol_scale) {
    CheckReport rep;
    rep.check = "translation_invariance";
    rep.tolerance = tol_scale * body_scale(K);

    SupportEvaluator z0 = Z(K);
    int idx = 0;
    for (const Vec& x : translations) {
        SupportEvaluator zt = Z(translate(K, x));
        double worst = 0.0;
        for (const Vec& xi : directions)
            worst = std::max(worst, std::fabs(zt(xi) - z0(xi)));
        CheckCase c;
        c.label = "translation " + std::to_string(idx++);
        c.violation = worst;
        rep.add(std::move(c));
    }
    return rep;
}

CheckReport check_equivariance(const BodyValuation& Z, bool contravariant,
                               const Polytope& K, const std::vector<LinearMap>& group,
                               const std::vector<Vec>& directions,
                               const ComplexStructure& J, double tol_scale) {
    CheckReport rep;
    rep.check = contravariant ? "sl_contravariance" : "sl_covariance";
    rep.tolerance = tol_scale * body_scale(K);

    SupportEvaluator z0 = Z(K);
    int idx = 0;
    for (const LinearMap& g : group) {
        CheckCase c;
        c.label = "group element " + std::to_string(idx++);
        if (!is_sl_w_c(g, J)) {
            c.violation = std::abs(complex_determinant(g.M, J) - cplx(1.0, 0.0));
            c.note = "not an SL(W,C) element";
            rep.add(std::move(c));
            continue;
        }
        SupportEvaluator zg = Z(apply_linear(g, K));
        Mat cmp = contravariant ? mat_inverse(g.M) : mat_transpose(g.M);
        double worst = 0.0;
        for (const Vec& xi : directions)
            worst = std::max(worst, std::fabs(zg(xi) - z0(mat_vec(cmp, xi))));
        c.violation = worst;
        rep.add(std::move(c));
    }
    return rep;
}

CheckReport check_lipschitz(const BodyValuation& Z, const Polytope& K,
                            const Polytope& K_perturbed, double lipschitz_const,
                            const std::vector<Vec>& directions, double tol_scale) {
    CheckReport rep;
    rep.check = "lipschitz_continuity";
    rep.tolerance = tol_scale * pair_scale(K, K_perturbed);

    double dh = hausdorff_distance(K, K_perturbed);
    SupportEvaluator za = Z(K);
    SupportEvaluator zb = Z(K_perturbed);
    int idx = 0;
    for (const Vec& xi : directions) {
        CheckCase c;
        c.label = "direction " + std::to_string(idx++);
        double excess = std::fabs(za(xi) - zb(xi)) - lipschitz_const * dh;
        c.violation = std::max(0.0, excess);
        rep.add(std::move(c));
    }
    return rep;
}

std::vector<double> default_t_grid(int m) {
    const int points = 2 * m + 1;
    std::vector<double> t(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i)
        t[i] = 0.5 + 1.5 * static_cast<double>(i) / (points - 1);
    return t;
}

HomogeneityProfile estimate_homogeneity(const BodyValuation& Z, const Polytope& K,
                                        const Vec& xi, const std::vector<double>& t_grid,
                                        double threshold_scale) {
    for (double t : t_grid)
        if (t <= 0.0) throw NumericalError("estimate_homogeneity: grid must be positive");
    double tmax = 0.0;
    std::vector<double> y;
    y.reserve(t_grid.size());
    for (double t : t_grid) {
        tmax = std::max(tmax, t);
        Polytope tk = K;
        for (Vec& v : tk.vertices) v = scale(v, t);
        y.push_back(Z(tk)(xi));
    }
    std::vector<double> coeff = polynomial_fit(t_grid, y); // throws on bad grids
    double scl = std::max(1.0, tmax * diameter(K));

    HomogeneityProfile prof;
    prof.coefficients.resize(coeff.size());
    for (size_t k = 0; k < coeff.size(); ++k) {
        prof.coefficients[k] = std::fabs(coeff[k]);
        if (std::fabs(coeff[k]) > threshold_scale * scl)
            prof.degrees.insert(static_cast<int>(k));
    }
    return prof;
}

CheckReport uniqueness_identity_check(const Polygon& C1, const Polygon& C2,
                                      const ComplexStructure& J, unsigned seed) {
    CheckReport rep;
    rep.check = "uniqueness_identity";
    const double scl = std::max({1.0, polygon_diameter(C1), polygon_diameter(C2)});
    rep.tolerance = 1e-7 * scl;

    const int n = J.J.n;
    Vec u(static_cast<size_t>(n), 0.0);
    u[0] = 1.0;
    Vec ju = mat_vec(J.J, u);

    // Probe bodies in the complex line of u: rotated segments and triangles,
    // plus conj(C_j) u as in the mixed-area device.
    std::vector<Polytope> probes;
    auto line_point = [&](cplx z) { return add(scale(u, z.real()), scale(ju, z.imag())); };
    for (int k = 0; k < 12; ++k) {
        double phi = 2.0 * M_PI * k / 12.0;
        cplx e = std::polar(1.0, phi);
        probes.push_back(make_segment(Vec(static_cast<size_t>(n), 0.0), line_point(e)));
        probes.push_back(canonicalize(Polytope(
            {Vec(static_cast<size_t>(n), 0.0), line_point(e), line_point(e * cplx(0.3, 0.6))},
            n)));
    }
    for (const Polygon* c : {&C1, &C2}) {
        Polygon cc = polygon_conjugate(*c);
        std::vector<Vec> verts;
        for (const P2& p : cc.vertices) verts.push_back(line_point(cplx(p[0], p[1])));
        probes.push_back(canonicalize(Polytope(std::move(verts), n)));
    }

    std::vector<Vec> dirs;
    for (int k = 0; k < 16; ++k) {
        double psi = 2.0 * M_PI * k / 16.0;
        dirs.push_back(add(scale(u, std::cos(psi)), scale(ju, std::sin(psi))));
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 8; ++k) dirs.push_back(random_direction(n, rng));

    double sup_diff = 0.0;
    for (const Polytope& B : probes) {
        SupportEvaluator z1 = complex_difference_evaluator(C1, B, J);
        SupportEvaluator z2 = complex_difference_evaluator(C2, B, J);
        for (const Vec& xi : dirs) sup_diff = std::max(sup_diff, std::fabs(z1(xi) - z2(xi)));
    }

    const bool agree = sup_diff <= 1e-8 * scl;
    {
        CheckCase c;
        c.label = "operator sup-difference on probe suite";
        c.violation = 0.0;
        std::ostringstream os;
        os << "sup itself: " << sup_diff << (agree ? " (agree)" : " (differ)");
        c.note = os.str();
        rep.add(std::move(c));
    }

    if (agree) {
        Polygon z1 = steiner_centered(C1);
        Polygon z2 = steiner_centered(C2);
        CheckCase c;
        c.label = "centered bodies coincide";
        c.violation = polygon_hausdorff(z1, z2);
        rep.add(std::move(c));

        double v11 = mixed_area(C1, C1), v22 = mixed_area(C2, C2), v12 = mixed_area(C1, C2);
        CheckCase c2;
        c2.label = "mixed-area identity V2(C1,C1)=V2(C1,C2)=V2(C2,C2)";
        double dv = std::max(std::fabs(v11 - v12), std::fabs(v22 - v12));
        c2.violation = std::max(0.0, dv - 1e-8 * scl * scl); // own tolerance, in scale^2
        rep.add(std::move(c2));
    } else {
        // Contrapositive: operators that differ must come from distinct
        // centered bodies.
        CheckCase c;
        c.label = "distinct operators imply distinct centered bodies";
        double dh = polygon_hausdorff(steiner_centered(C1), steiner_centered(C2));
        c.violation = (dh <= 1e-7 * scl) ? sup_diff : 0.0;
        rep.add(std::move(c));
    }
    return rep;
}

BodyValuation impostor_identity() {
    return [](const Polytope& K) {
        auto body = std::make_shared<Polytope>(K);
        SupportEvaluator ev;
        ev.value_at_unit = [body](const Vec& xi) { return support(*body, xi); };
        return ev;
    };
}

BodyValuation impostor_volume_scaled_dc(const Polygon& C, const ComplexStructure& J) {
    return [C, J](const Polytope& K) {
        double vol = 0.0;
        try {
            vol = convex_hull(K.vertices).volume;
        } catch (const DegenerateHull&) {
            vol = 0.0;
        }
        double f = std::pow(vol, 1.0 / static_cast<double>(K.dim_ambient));
        SupportEvaluator base = complex_difference_evaluator(C, K, J);
        SupportEvaluator ev;
        ev.value_at_unit = [base, f](const Vec& xi) { return f * base.value_at_unit(xi); };
        return ev;
    };
}

} // namespace minkval
