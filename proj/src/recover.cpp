#include "minkval/recover.hpp"
#include "minkval/errors.hpp"
#include "minkval/planar_ops.hpp"
#include "minkval/valuations.hpp"

#include <algorithm>
#include <cmath>

namespace minkval {

namespace {

using Matrix = std::vector<std::vector<double>>;

std::vector<double> mat_apply(const Matrix& A, const std::vector<double>& x) {
    std::vector<double> y(A.size(), 0.0);
    for (size_t r = 0; r < A.size(); ++r) {
        double s = 0.0;
        for (size_t c = 0; c < x.size(); ++c) s += A[r][c] * x[c];
        y[r] = s;
    }
    return y;
}

std::vector<double> mat_apply_t(const Matrix& A, const std::vector<double>& y) {
    if (A.empty()) return {};
    std::vector<double> x(A[0].size(), 0.0);
    for (size_t r = 0; r < A.size(); ++r)
        for (size_t c = 0; c < x.size(); ++c) x[c] += A[r][c] * y[r];
    return x;
}

double vec_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace

std::vector<double> nnls(const Matrix& A, const std::vector<double>& b,
                         const NnlsOptions& opt) {
    const size_t ncol = A.empty() ? 0 : A[0].size();
    if (ncol == 0) return {};

    // Lipschitz constant of the gradient by power iteration on A^T A. The
    // start vector mixes signs so no invariant subspace traps the iteration;
    // a 1.25 safety factor absorbs the remaining estimation error.
    std::vector<double> v(ncol);
    for (size_t i = 0; i < ncol; ++i) v[i] = 1.0 + 0.37 * std::sin(2.1 * static_cast<double>(i + 1));
    double lip = 1.0;
    for (int it = 0; it < 80; ++it) {
        std::vector<double> w = mat_apply_t(A, mat_apply(A, v));
        double nn = vec_norm(w);
        if (nn == 0.0) break;
        lip = nn;
        for (size_t i = 0; i < ncol; ++i) v[i] = w[i] / nn;
    }
    lip = 1.25 * lip + opt.lambda;
    const double step = 1.0 / lip;

    // Stop when the projected gradient is small relative to its magnitude at
    // x = 0 (|A^T b|), the problem's own gradient scale.
    const double tol = opt.grad_tol * std::max(1.0, vec_norm(mat_apply_t(A, b)));

    std::vector<double> x(ncol, 0.0), y(ncol, 0.0), x_prev(ncol, 0.0);
    double theta = 1.0;
    double f_prev = 1e300;
    for (int it = 0; it < opt.max_iter; ++it) {
        std::vector<double> r = mat_apply(A, y);
        for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
        std::vector<double> g = mat_apply_t(A, r);
        for (size_t i = 0; i < ncol; ++i) g[i] += opt.lambda * y[i];

        x_prev = x;
        for (size_t i = 0; i < ncol; ++i) x[i] = std::max(0.0, y[i] - step * g[i]);

        // Projected-gradient stationarity at x.
        std::vector<double> rx = mat_apply(A, x);
        double f = 0.0;
        for (size_t i = 0; i < rx.size(); ++i) {
            rx[i] -= b[i];
            f += rx[i] * rx[i];
        }
        std::vector<double> gx = mat_apply_t(A, rx);
        double stat = 0.0;
        for (size_t i = 0; i < ncol; ++i) {
            gx[i] += opt.lambda * x[i];
            f += opt.lambda * x[i] * x[i];
            double pg = (x[i] > 0.0) ? gx[i] : std::min(0.0, gx[i]);
            stat += pg * pg;
        }
        if (std::sqrt(stat) <= tol) return x;

        if (f > f_prev) { // restart the momentum
            theta = 1.0;
            y = x;
        } else {
            double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
            double beta = (theta - 1.0) / theta_next;
            for (size_t i = 0; i < ncol; ++i) y[i] = x[i] + beta * (x[i] - x_prev[i]);
            theta = theta_next;
        }
        f_prev = f;
    }
    throw NumericalError("nnls: projected gradient did not converge");
}

RecoverResult recover_C(const BlackBoxValuation& Z, int m, const Vec& u, const Vec& xi,
                        const ComplexStructure& J, const RecoverOptions& opt) {
    const int n = 2 * m;
    if (static_cast<int>(u.size()) != n || static_cast<int>(xi.size()) != n)
        throw DimensionError("recover_C: u/xi dimension mismatch");
    Vec ju = mat_vec(J.J, u);
    if (std::fabs(dot(xi, u) - 1.0) > 1e-9 || std::fabs(dot(xi, ju)) > 1e-9)
        throw DimensionError("recover_C: need xi(u) = 1 in the complex pairing");

    auto line_point = [&](cplx z) { return add(scale(u, z.real()), scale(ju, z.imag())); };
    const Vec origin(static_cast<size_t>(n), 0.0);

    // Probe families: rotated segments and rotated asymmetric triangles.
    const int P = opt.probes_per_family;
    std::vector<Polytope> probes;
    probes.reserve(2 * static_cast<size_t>(P));
    for (int p = 0; p < P; ++p) {
        cplx e = std::polar(1.0, 2.0 * M_PI * p / P);
        probes.push_back(make_segment(origin, line_point(e)));
    }
    for (int p = 0; p < P; ++p) {
        cplx e = std::polar(1.0, 2.0 * M_PI * p / P + M_PI / (3.0 * P));
        probes.push_back(canonicalize(
            Polytope({origin, line_point(e), line_point(e * cplx(0.3, 0.6))}, n)));
    }

    // Z must be translation invariant and homogeneous of degree 1; probed on
    // a full-dimensional body so evaluators that need facet data still work.
    {
        Polytope B = make_cube(n);
        double base = Z(B, xi);
        double scl = std::max(1.0, std::fabs(base));
        Vec shift = add(scale(u, 0.37), scale(ju, -0.22));
        double tdev = std::fabs(Z(translate(B, shift), xi) - base);
        if (tdev > 1e-6 * scl)
            throw RecoveryFailed("recover_C: operator is not translation invariant", tdev);
        Polytope B2 = B;
        for (Vec& vv : B2.vertices) vv = scale(vv, 2.0);
        double hdev = std::fabs(Z(B2, xi) - 2.0 * base);
        if (hdev > 1e-6 * scl)
            throw RecoveryFailed("recover_C: operator is not homogeneous of degree 1", hdev);
    }

    // Design matrix: column g is the support of the rotated probe, i.e. the
    // exact forward model of one unit atom at angle psi_g.
    const int G = opt.grid_size;
    const size_t rows = probes.size();
    Matrix A(rows + 2, std::vector<double>(static_cast<size_t>(G), 0.0));
    std::vector<double> b(rows + 2, 0.0);
    double bmax = 1.0;
    for (size_t r = 0; r < rows; ++r) {
        b[r] = Z(probes[r], xi);
        bmax = std::max(bmax, std::fabs(b[r]));
    }
    for (int g = 0; g < G; ++g) {
        double psi = 2.0 * M_PI * g / G;
        Mat rot_t = mat_transpose(scalar_matrix(ComplexScalar(std::cos(psi), std::sin(psi)), J));
        for (size_t r = 0; r < rows; ++r)
            A[r][static_cast<size_t>(g)] = support(probes[r], mat_vec(rot_t, xi));
    }
    // Zero-centroid constraint as lightly weighted rows (the first harmonic
    // is already observable through the probes); an exact projection follows
    // after the solve.
    const double mu = bmax;
    for (int g = 0; g < G; ++g) {
        double psi = 2.0 * M_PI * g / G;
        A[rows][static_cast<size_t>(g)] = mu * std::cos(psi);
        A[rows + 1][static_cast<size_t>(g)] = mu * std::sin(psi);
    }

    NnlsOptions nopt;
    nopt.lambda = opt.lambda;
    std::vector<double> w = nnls(A, b, nopt);

    // Exact centroid correction, then clip tiny negatives.
    for (int pass = 0; pass < 3; ++pass) {
        double cx = 0.0, cy = 0.0, cc = 0.0, ss = 0.0, cs = 0.0;
        for (int g = 0; g < G; ++g) {
            double psi = 2.0 * M_PI * g / G;
            double c = std::cos(psi), s = std::sin(psi);
            cx += w[static_cast<size_t>(g)] * c;
            cy += w[static_cast<size_t>(g)] * s;
            cc += c * c;
            ss += s * s;
            cs += c * s;
        }
        double det = cc * ss - cs * cs;
        if (std::fabs(det) < 1e-12) break;
        double ax = (ss * cx - cs * cy) / det;
        double ay = (cc * cy - cs * cx) / det;
        for (int g = 0; g < G; ++g) {
            double psi = 2.0 * M_PI * g / G;
            w[static_cast<size_t>(g)] -= ax * std::cos(psi) + ay * std::sin(psi);
            w[static_cast<size_t>(g)] = std::max(0.0, w[static_cast<size_t>(g)]);
        }
    }

    // Relative residual over the probe rows only.
    double num = 0.0, den = 0.0;
    for (size_t r = 0; r < rows; ++r) {
        double pred = 0.0;
        for (int g = 0; g < G; ++g) pred += A[r][static_cast<size_t>(g)] * w[static_cast<size_t>(g)];
        num += (pred - b[r]) * (pred - b[r]);
        den += b[r] * b[r];
    }
    double residual = std::sqrt(num) / std::max(1e-12, std::sqrt(den));
    double total = 0.0;
    for (double x : w) total += x;
    if (total <= 1e-10 * bmax) {
        // The zero operator: C is a point.
        RecoverResult out;
        out.C.vertices = {{0.0, 0.0}};
        out.C.degenerate = true;
        out.residual = std::sqrt(num);
        return out;
    }
    if (residual > opt.residual_threshold)
        throw RecoveryFailed("recover_C: fit residual above threshold (not of D_C form)",
                             residual);

    // Cluster adjacent bins (cyclically) within 1.5 * bin width to their
    // mass-weighted mean angle.
    struct Raw {
        double angle;
        double weight;
    };
    std::vector<Raw> raw;
    for (int g = 0; g < G; ++g)
        if (w[static_cast<size_t>(g)] > 1e-5 * total)
            raw.push_back({2.0 * M_PI * g / G, w[static_cast<size_t>(g)]});

    const double gap_thr = 1.5 * (2.0 * M_PI / G);
    std::vector<MeasureAtom> atoms;
    if (!raw.empty()) {
        // Start after the largest circular gap so clusters do not wrap badly.
        size_t start = 0;
        double biggest = -1.0;
        for (size_t i = 0; i < raw.size(); ++i) {
            size_t j = (i + 1) % raw.size();
            double gap = raw[j].angle - raw[i].angle;
            if (gap < 0.0) gap += 2.0 * M_PI;
            if (gap > biggest) { biggest = gap; start = j; }
        }
        double cl_sum_w = 0.0, cl_sum_aw = 0.0, prev_angle = 0.0;
        bool open = false;
        auto flush = [&]() {
            if (open && cl_sum_w > 0.0) atoms.push_back({cl_sum_aw / cl_sum_w, cl_sum_w});
            open = false;
            cl_sum_w = cl_sum_aw = 0.0;
        };
        double unwrap = 0.0;
        for (size_t k = 0; k < raw.size(); ++k) {
            const Raw& a = raw[(start + k) % raw.size()];
            double ang = a.angle + unwrap;
            if (k > 0 && ang < prev_angle) {
                unwrap += 2.0 * M_PI;
                ang += 2.0 * M_PI;
            }
            if (open && ang - prev_angle > gap_thr) flush();
            cl_sum_w += a.weight;
            cl_sum_aw += a.weight * ang;
            prev_angle = ang;
            open = true;
        }
        flush();
    }

    // Merged angles moved off the grid, so restore the exact zero centroid:
    // two atoms snap to an antipodal pair, more get a least-squares weight
    // correction at fixed angles.
    if (atoms.size() == 2) {
        double w1 = atoms[0].weight, w2 = atoms[1].weight;
        double a1 = atoms[0].angle, a2 = atoms[1].angle - M_PI;
        while (a2 - a1 > M_PI) a2 -= 2.0 * M_PI;
        while (a1 - a2 > M_PI) a2 += 2.0 * M_PI;
        double axis = (w1 * a1 + w2 * a2) / (w1 + w2);
        double half = 0.5 * (w1 + w2);
        atoms = {{axis, half}, {axis + M_PI, half}};
    } else if (atoms.size() >= 3) {
        for (int pass = 0; pass < 3; ++pass) {
            double cx = 0.0, cy = 0.0, cc = 0.0, ss = 0.0, cs = 0.0;
            for (const MeasureAtom& a : atoms) {
                double c = std::cos(a.angle), s = std::sin(a.angle);
                cx += a.weight * c;
                cy += a.weight * s;
                cc += c * c;
                ss += s * s;
                cs += c * s;
            }
            double det = cc * ss - cs * cs;
            if (std::fabs(det) < 1e-12) break;
            double ax = (ss * cx - cs * cy) / det;
            double ay = (cc * cy - cs * cx) / det;
            for (MeasureAtom& a : atoms) {
                a.weight -= ax * std::cos(a.angle) + ay * std::sin(a.angle);
                a.weight = std::max(0.0, a.weight);
            }
        }
    }

    AreaMeasureS1 mu_fit = make_measure(std::move(atoms));
    Polygon C = minkowski_reconstruct(mu_fit); // NotClosable propagates

    RecoverResult out;
    out.C = steiner_centered(C);
    out.measure = mu_fit;
    out.residual = residual;
    return out;
}

} // namespace minkval
