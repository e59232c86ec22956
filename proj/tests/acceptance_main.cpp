// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Pass the CLI binary path as argv[1] to exercise the exit-code contract.

#include "minkval/errors.hpp"
#include "minkval/harness.hpp"
#include "minkval/hausdorff.hpp"
#include "minkval/hull.hpp"
#include "minkval/io.hpp"
#include "minkval/planar_ops.hpp"
#include "minkval/recover.hpp"
#include "minkval/valuations.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace minkval;

namespace {

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s: %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::vector<Vec> sample_directions(int n, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vec> dirs;
    for (int i = 0; i < count; ++i) dirs.push_back(random_direction(n, rng));
    return dirs;
}

Polygon named_shape(int idx) {
    switch (idx % 4) {
        case 0: return polygon_square();
        case 1: return polygon_triangle();
        case 2: return polygon_segment({0.0, 0.0}, {0.0, -1.0});
        default: return polygon_disc(64);
    }
}

Polygon random_polygon(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> npts(3, 12);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> radius(0.4, 1.6);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    double ox = off(rng), oy = off(rng);
    int k = npts(rng);
    std::vector<P2> pts;
    for (int i = 0; i < k; ++i) {
        double a = angle(rng), r = radius(rng);
        pts.push_back({ox + r * std::cos(a), oy + r * std::sin(a)});
    }
    Polygon P = make_polygon(pts);
    return P.full_dimensional() ? P : polygon_triangle();
}

// 1. D_C theorem-property suite: valuation additivity, translation
//    invariance, SL(W,C)-covariance at 1e-6 * scale for 20 seeded triples.
void criterion_1() {
    double worst = 0.0;
    std::string worst_what = "none";
    int triples = 0;
    for (int m : {2, 3}) {
        ComplexStructure J = ComplexStructure::standard(m);
        const int n = 2 * m;
        for (int i = 0; i < 10; ++i) {
            unsigned seed = 1000u + 100u * static_cast<unsigned>(m) + static_cast<unsigned>(i);
            Polygon C = named_shape(i);
            Polytope K = random_polytope(n, n + 4, seed);
            LinearMap g = random_sl(m, seed + 31);
            ValuationOperator dc{OperatorKind::ComplexDifference, C, m};
            BodyValuation Z = make_valuation(dc, J);
            auto dirs = sample_directions(n, 40, seed + 7);
            double scl = body_scale(K);

            std::mt19937_64 rng(seed + 3);
            Vec nrm = random_direction(n, rng);
            Vec cent(static_cast<size_t>(n), 0.0);
            for (const Vec& v : K.vertices) cent = add(cent, v);
            cent = scale(cent, 1.0 / static_cast<double>(K.size()));
            CheckReport add_rep =
                check_valuation_property(Z, K, nrm, dot(nrm, cent), dirs, 1e-6);

            std::vector<Vec> shifts;
            for (int s = 0; s < 4; ++s) shifts.push_back(scale(random_direction(n, rng), 0.8));
            CheckReport tr_rep = check_translation_invariance(Z, K, shifts, dirs, 1e-6);

            CheckReport eq_rep = check_equivariance(Z, false, K, {g}, dirs, J, 1e-6);

            ++triples;
            for (const CheckReport* rep : {&add_rep, &tr_rep, &eq_rep}) {
                double rel = rep->max_violation / std::max(1.0, scl);
                if (rel > worst) {
                    worst = rel;
                    worst_what = rep->check;
                }
                if (!rep->pass) {
                    verdict(1, false, rep->check + " violated: " +
                                          std::to_string(rep->max_violation));
                    return;
                }
            }
        }
    }
    std::ostringstream os;
    os << triples << " triples, worst relative violation " << worst << " (" << worst_what
       << ") <= 1e-6";
    verdict(1, worst <= 1e-6, os.str());
}

// 2. Homogeneity degrees: exactly {1} for D_C and {2m-1} for Pi_C, m in {2,3}.
void criterion_2() {
    for (int m : {2, 3}) {
        ComplexStructure J = ComplexStructure::standard(m);
        const int n = 2 * m;
        Polytope K = random_polytope(n, n + 3, 2000u + static_cast<unsigned>(m));
        std::mt19937_64 rng(77);
        Vec xi = random_direction(n, rng);
        auto grid = default_t_grid(m);

        ValuationOperator dc{OperatorKind::ComplexDifference, polygon_triangle(), m};
        HomogeneityProfile pd = estimate_homogeneity(make_valuation(dc, J), K, xi, grid);
        ValuationOperator pic{OperatorKind::ComplexProjection, polygon_triangle(), m};
        HomogeneityProfile pp = estimate_homogeneity(make_valuation(pic, J), K, xi, grid);

        if (pd.degrees != std::set<int>{1}) {
            verdict(2, false, "D_C degrees wrong at m=" + std::to_string(m));
            return;
        }
        if (pp.degrees != std::set<int>{2 * m - 1}) {
            verdict(2, false, "Pi_C degrees wrong at m=" + std::to_string(m));
            return;
        }
    }
    verdict(2, true, "D_C reports {1} and Pi_C reports {2m-1} for m in {2,3}");
}

// 3. Mixed-volume dual-method agreement within 1e-6 relative: 20 pairs in
//    R^4 and 5 pairs in R^6.
void criterion_3() {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        Polytope K = random_polytope(4, 10, 3000u + static_cast<unsigned>(i));
        Polytope L = random_polytope(4, 8, 3100u + static_cast<unsigned>(i));
        double a = mixed_volume_top(K, L);
        double b = mixed_volume_top_fit(K, L);
        worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(a), 1e-300));
    }
    for (int i = 0; i < 5; ++i) {
        Polytope K = random_polytope(6, 11, 3200u + static_cast<unsigned>(i));
        Polytope L = random_polytope(6, 9, 3300u + static_cast<unsigned>(i));
        double a = mixed_volume_top(K, L);
        double b = mixed_volume_top_fit(K, L);
        worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(a), 1e-300));
    }
    std::ostringstream os;
    os << "facet formula vs polynomial fit, worst relative gap " << worst;
    verdict(3, worst <= 1e-6, os.str());
}

// 4. Classical reductions: D_{[0,-i]} = difference body (exact canonical
//    equality); Pi_{[0,1]} on the cube = 1/(2m); projection-body relation on
//    a random simplex within 1e-6 relative.
void criterion_4() {
    Polygon Cd = polygon_segment({0.0, 0.0}, {0.0, -1.0});
    for (int m : {2, 3}) {
        ComplexStructure J = ComplexStructure::standard(m);
        const int n = 2 * m;
        for (int i = 0; i < 3; ++i) {
            Polytope K = random_polytope(n, n + 4, 4000u + static_cast<unsigned>(10 * m + i));
            if (!polytope_equal(complex_difference_body(Cd, K, J), difference_body(K))) {
                verdict(4, false, "D_{[0,-i]} differs from K + (-K)");
                return;
            }
        }
        Polygon C01 = polygon_segment({0.0, 0.0}, {1.0, 0.0});
        Polytope cube = make_cube(n);
        SupportEvaluator h = complex_projection_body(C01, cube, J);
        Vec e1(static_cast<size_t>(n), 0.0);
        e1[0] = 1.0;
        if (std::fabs(h(e1) - 1.0 / n) > 1e-9) {
            verdict(4, false, "Pi_{[0,1]} cube value differs from 1/(2m)");
            return;
        }
    }

    // Projection relation on a random simplex in R^4.
    ComplexStructure J = ComplexStructure::standard(2);
    Polygon C01 = polygon_segment({0.0, 0.0}, {1.0, 0.0});
    Polytope K = random_polytope(4, 5, 4242);
    SupportEvaluator h = complex_projection_body(C01, K, J);
    std::mt19937_64 rng(4321);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        Vec w = random_direction(4, rng);
        std::vector<Vec> cand{w};
        for (int k = 0; k < 4; ++k) {
            Vec e(4, 0.0);
            e[static_cast<size_t>(k)] = 1.0;
            cand.push_back(e);
        }
        std::vector<Vec> basis = orthonormal_basis(cand);
        std::vector<Vec> proj;
        for (const Vec& v : K.vertices)
            proj.push_back(Vec{dot(basis[1], v), dot(basis[2], v), dot(basis[3], v)});
        double shadow = convex_hull(proj).volume;
        worst = std::max(worst, std::fabs(h(w) - shadow / 4.0) / (shadow / 4.0));
    }
    std::ostringstream os;
    os << "exact difference-body reduction; cube 1/(2m); projection relation worst rel "
       << worst;
    verdict(4, worst <= 1e-6, os.str());
}

// 5. Planar Minkowski round trip on 50 random polygons at 1e-8 * scale,
//    and rejection of centroid-violating measures.
void criterion_5() {
    double worst = 0.0;
    for (unsigned seed = 0; seed < 50; ++seed) {
        Polygon P = random_polygon(5000u + seed);
        Polygon Q = minkowski_reconstruct(area_measure(P));
        P2 sp = steiner_point(P), sq = steiner_point(Q);
        Polygon Qm = polygon_translate(Q, {sp[0] - sq[0], sp[1] - sq[1]});
        double scl = std::max(1.0, polygon_diameter(P));
        worst = std::max(worst, polygon_hausdorff(Qm, P) / scl);
    }
    bool rejected = false;
    try {
        minkowski_reconstruct(make_measure({{0.0, 1.0}, {M_PI_2, 1.0}}));
    } catch (const NotClosable&) {
        rejected = true;
    }
    std::ostringstream os;
    os << "50 round trips, worst hausdorff/scale " << worst
       << (rejected ? "; NotClosable raised" : "; NotClosable NOT raised");
    verdict(5, worst <= 1e-8 && rejected, os.str());
}

// 6. Uniqueness/recovery: recover_C round trip within 0.05 * diam at
//    G = 72, P = 48; mixed-area identity whenever two operators agree.
void criterion_6() {
    ComplexStructure J = ComplexStructure::standard(2);
    Vec u{1, 0, 0, 0};
    std::vector<std::pair<std::string, Polygon>> shapes{
        {"square", polygon_square()},
        {"triangle", polygon_triangle()},
        {"segment", polygon_segment({0.0, 0.0}, {0.0, -1.0})},
        {"8-gon", polygon_disc(8)},
    };
    double worst_ratio = 0.0;
    for (const auto& [name, C] : shapes) {
        BlackBoxValuation Z = [&C, &J](const Polytope& probe, const Vec& dir) {
            return complex_difference_evaluator(C, probe, J)(dir);
        };
        RecoverOptions opt;
        opt.grid_size = 72;
        opt.probes_per_family = 48;
        try {
            RecoverResult r = recover_C(Z, 2, u, u, J, opt);
            double ratio = polygon_hausdorff(r.C, steiner_centered(C)) / polygon_diameter(C);
            worst_ratio = std::max(worst_ratio, ratio);
        } catch (const std::exception& e) {
            verdict(6, false, name + std::string(" recovery failed: ") + e.what());
            return;
        }
    }

    // Agreement on the probe suite forces the mixed-area identity.
    bool identity_ok = true;
    for (unsigned seed : {60u, 61u, 62u}) {
        Polygon C1 = random_polygon(6000u + seed);
        Polygon C2 = polygon_translate(C1, {0.9, -1.3}); // same operator
        CheckReport rep = uniqueness_identity_check(C1, C2, J, seed);
        if (!rep.pass) identity_ok = false;
        double v11 = mixed_area(C1, C1), v22 = mixed_area(C2, C2), v12 = mixed_area(C1, C2);
        double scl = std::max(1.0, polygon_diameter(C1));
        if (std::fabs(v11 - v12) > 1e-8 * scl * scl || std::fabs(v22 - v12) > 1e-8 * scl * scl)
            identity_ok = false;
    }
    std::ostringstream os;
    os << "worst recovery hausdorff/diam " << worst_ratio << " (bound 0.05); mixed-area identity "
       << (identity_ok ? "holds" : "violated");
    verdict(6, worst_ratio <= 0.05 && identity_ok, os.str());
}

// 7. The published segment closed form, asserted exactly as stated:
//    h(D_{[-z1,z1]} [-zu,zu], xi) = 2 |Re(i conj(z1) z)| at 1e-9 * scale.
//    That form halves the segment's surface area measure relative to the
//    doubly-covered-length convention criteria 4 and 5 pin down, and its
//    conjugation reflects a different dual pairing; under this library's
//    conventions the defining sum evaluates to 4 |Re(i z1 z)|. Both the
//    stated and the measured values are reported. See README, "Known red
//    acceptance check".
void criterion_7() {
    ComplexStructure J = ComplexStructure::standard(2);
    std::mt19937_64 rng(7777);
    std::normal_distribution<double> g(0.0, 1.0);
    double worst_stated = 0.0, worst_derived = 0.0;
    int samples = 0;
    while (samples < 50) {
        cplx z1(g(rng), g(rng)), z(g(rng), g(rng));
        if (std::abs(z1) < 0.05 || std::abs(z) < 0.05) continue;
        ++samples;
        Vec u = random_direction(4, rng);
        Polygon C = polygon_segment(-z1, z1);
        Vec zu = mat_vec(scalar_matrix(ComplexScalar(z), J), u);
        Polytope K = make_segment(negate(zu), zu);
        double measured = support(complex_difference_body(C, K, J), u);
        double stated = 2.0 * std::abs((cplx(0, 1) * std::conj(z1) * z).real());
        double derived = 4.0 * std::abs((cplx(0, 1) * z1 * z).real());
        double scl = std::max(1.0, 4.0 * std::abs(z1) * std::abs(z));
        worst_stated = std::max(worst_stated, std::fabs(measured - stated) / scl);
        worst_derived = std::max(worst_derived, std::fabs(measured - derived) / scl);
    }
    std::ostringstream os;
    os << "50 samples; deviation from stated 2|Re(i conj(z1) z)|: " << worst_stated
       << "; deviation from the convention-consistent 4|Re(i z1 z)|: " << worst_derived;
    verdict(7, worst_stated <= 1e-9, os.str());
}

// 8. Negative controls, each detected by its suite and by CLI exit code 1.
void criterion_8(const char* cli) {
    ComplexStructure J = ComplexStructure::standard(2);
    auto dirs = sample_directions(4, 30, 88);

    // identity fails translation invariance
    Polytope K = random_polytope(4, 9, 8000);
    std::mt19937_64 rng(8001);
    std::vector<Vec> shifts{scale(random_direction(4, rng), 0.9)};
    bool id_detected =
        !check_translation_invariance(impostor_identity(), K, shifts, dirs).pass;

    // non-SL scaling fails equivariance
    LinearMap twice(mat_scale(Mat::identity(4), 2.0));
    twice.is_complex_linear = true;
    ValuationOperator dc{OperatorKind::ComplexDifference, polygon_square(), 2};
    bool nonsl_detected =
        !check_equivariance(make_valuation(dc, J), false, K, {twice}, dirs, J).pass;

    // constructed non-valuation fails additivity
    Vec nrm = random_direction(4, rng);
    Vec cent(4, 0.0);
    for (const Vec& v : K.vertices) cent = add(cent, v);
    cent = scale(cent, 1.0 / static_cast<double>(K.size()));
    bool nonval_detected =
        !check_valuation_property(impostor_volume_scaled_dc(polygon_square(), J), K, nrm,
                                  dot(nrm, cent), dirs)
             .pass;

    bool exit_codes_ok = true;
    std::string cli_note = "CLI not provided, exit codes skipped";
    if (cli && *cli) {
        cli_note.clear();
        for (const char* op : {"identity", "nonsl", "nonval"}) {
            std::string cmd = std::string(cli) + " check --op " + op +
                              " --m 2 --seed 3 --out /dev/null 2>/dev/null";
            int rc = std::system(cmd.c_str());
            int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
            if (code != 1) exit_codes_ok = false;
            cli_note += std::string(op) + "->exit " + std::to_string(code) + " ";
        }
    }

    std::ostringstream os;
    os << "identity " << (id_detected ? "detected" : "MISSED") << ", non-SL "
       << (nonsl_detected ? "detected" : "MISSED") << ", non-valuation "
       << (nonval_detected ? "detected" : "MISSED") << "; " << cli_note;
    verdict(8, id_detected && nonsl_detected && nonval_detected && exit_codes_ok, os.str());
}

} // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(cli);
    auto t1 = std::chrono::steady_clock::now();
    std::printf("acceptance: %d of 8 criteria passed in %.1f s\n", 8 - g_failures,
                std::chrono::duration<double>(t1 - t0).count());
    return g_failures == 0 ? 0 : 1;
}
