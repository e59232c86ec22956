#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkval/complex_structure.hpp"
#include "minkval/errors.hpp"
#include "minkval/harness.hpp"
#include "minkval/hausdorff.hpp"
#include "minkval/hull.hpp"
#include "minkval/polytope.hpp"

#include <cmath>
#include <random>

using namespace minkval;

TEST_CASE("support basics") {
    Polytope origin = make_point(Vec{0, 0, 0, 0});
    CHECK(support(origin, Vec{1, 2, -1, 3}) == 0.0);

    Vec u{0.3, -0.7, 0.2, 0.5};
    Polytope seg = make_segment(negate(u), u);
    Vec xi{1.0, 0.5, -2.0, 0.25};
    CHECK(support(seg, xi) == doctest::Approx(std::fabs(dot(xi, u))).epsilon(1e-12));

    Polytope cube = make_cube(4);
    CHECK(support(cube, Vec{1, 1, 1, 1}) == doctest::Approx(4.0));

    Polytope empty;
    CHECK_THROWS_AS(support(empty, xi), EmptyBody);
}

TEST_CASE("support subadditivity and homogeneity on random bodies") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Polytope K = random_polytope(4, 10, 100 + trial);
        double scl = body_scale(K);
        for (int i = 0; i < 25; ++i) {
            Vec a = random_direction(4, rng);
            Vec b = random_direction(4, rng);
            CHECK(support(K, add(a, b)) <= support(K, a) + support(K, b) + 1e-9 * scl);
            CHECK(support(K, scale(a, 2.5)) ==
                  doctest::Approx(2.5 * support(K, a)).epsilon(1e-12));
        }
    }
}

TEST_CASE("minkowski sum: singleton translates, segments, support linearity") {
    Polytope K = random_polytope(4, 8, 42);
    Vec x{0.5, -1.0, 0.25, 2.0};
    Polytope sum = minkowski_sum(K, make_point(x));
    CHECK(polytope_equal(sum, translate(K, x)));

    Polytope sq = minkowski_sum(make_segment(Vec{0, 0}, Vec{1, 0}),
                                make_segment(Vec{0, 0}, Vec{0, 1}));
    CHECK(sq.size() == 4);
    CHECK(polytope_equal(sq, make_cube(2)));

    std::mt19937_64 rng(11);
    Polytope L = random_polytope(4, 9, 43);
    Polytope KL = minkowski_sum(K, L);
    double scl = pair_scale(K, L);
    for (int i = 0; i < 100; ++i) {
        Vec xi = random_direction(4, rng);
        CHECK(std::fabs(support(KL, xi) - support(K, xi) - support(L, xi)) < 1e-9 * scl);
    }
}

TEST_CASE("apply matrix: identity, scaling, adjoint identity") {
    Polytope K = random_polytope(4, 9, 5);
    CHECK(polytope_equal(apply_matrix(Mat::identity(4), K), K));

    Vec u{1, 2, 0, -1};
    Polytope seg = make_segment(Vec{0, 0, 0, 0}, u);
    Polytope seg2 = apply_matrix(mat_scale(Mat::identity(4), 2.0), seg);
    CHECK(polytope_equal(seg2, make_segment(Vec{0, 0, 0, 0}, scale(u, 2.0))));

    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat M(4);
    for (double& a : M.a) a = gauss(rng);
    Polytope MK = apply_matrix(M, K);
    Mat Mt = mat_transpose(M);
    for (int i = 0; i < 100; ++i) {
        Vec xi = random_direction(4, rng);
        CHECK(std::fabs(support(MK, xi) - support(K, mat_vec(Mt, xi))) <
              1e-9 * body_scale(MK));
    }
}

TEST_CASE("convex hull: cube in R^4") {
    Polytope cube = make_cube(4);
    HullResult h = convex_hull(cube.vertices);
    CHECK(h.facets.size() == 8);
    CHECK(h.volume == doctest::Approx(1.0).epsilon(1e-9));
    for (const HullFacet& f : h.facets)
        CHECK(f.measure == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(h.vertex_indices.size() == 16);
}

TEST_CASE("convex hull: simplex volume 1/n!") {
    for (int n : {2, 3, 4, 5, 6}) {
        Polytope s = make_simplex(n);
        HullResult h = convex_hull(s.vertices);
        double nfac = 1.0;
        for (int i = 2; i <= n; ++i) nfac *= i;
        CHECK(h.volume == doctest::Approx(1.0 / nfac).epsilon(1e-9));
        CHECK(h.facets.size() == static_cast<size_t>(n) + 1);
    }
}

TEST_CASE("convex hull: soundness, permutation and interior-point invariance") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + 2 * (trial % 2); // 4 or 6
        std::vector<Vec> pts;
        for (int i = 0; i < 50; ++i) pts.push_back(random_direction(n, rng));
        HullResult h = convex_hull(pts);

        double diam = 2.0;
        for (const Vec& p : pts)
            for (const HullFacet& f : h.facets)
                CHECK(dot(f.normal, p) <= f.offset + 1e-9 * diam);

        // volume = (1/n) * sum b * measure (divergence identity)
        double vol2 = 0.0;
        for (const HullFacet& f : h.facets) vol2 += f.offset * f.measure;
        vol2 /= n;
        CHECK(vol2 == doctest::Approx(h.volume).epsilon(1e-7));

        std::vector<Vec> shuffled = pts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(scale(add(pts[0], pts[1]), 0.25)); // interior point
        HullResult h2 = convex_hull(shuffled);
        CHECK(h2.volume == doctest::Approx(h.volume).epsilon(1e-9));
        CHECK(h2.facets.size() == h.facets.size());
    }
}

TEST_CASE("convex hull: degenerate input reports affine rank") {
    std::vector<Vec> flat;
    std::mt19937_64 rng(23);
    for (int i = 0; i < 8; ++i) {
        Vec v = random_direction(2, rng);
        flat.push_back(Vec{v[0], v[1], 0.0, 0.0});
    }
    try {
        convex_hull(flat);
        FAIL("expected DegenerateHull");
    } catch (const DegenerateHull& e) {
        CHECK(e.affine_rank == 2);
    }
}

TEST_CASE("canonicalize removes non-extreme points, segment and point cases") {
    Polytope cube = make_cube(4);
    std::vector<Vec> verts = cube.vertices;
    verts.push_back(Vec{0.5, 0.5, 0.5, 0.5});
    verts.push_back(Vec{0.5, 0.0, 0.0, 0.0}); // edge midpoint
    Polytope K = canonicalize(Polytope(verts, 4));
    CHECK(K.size() == 16);
    CHECK(polytope_equal(K, cube));

    Polytope seg = canonicalize(Polytope({Vec{0, 0, 0, 0}, Vec{1, 1, 0, 0},
                                          Vec{2, 2, 0, 0}, Vec{0.5, 0.5, 0, 0}},
                                         4));
    CHECK(seg.size() == 2);
    CHECK(polytope_equal(seg, make_segment(Vec{0, 0, 0, 0}, Vec{2, 2, 0, 0})));

    Polytope pt = canonicalize(Polytope({Vec{1, 2, 3, 4}, Vec{1, 2, 3, 4}}, 4));
    CHECK(pt.size() == 1);
}

TEST_CASE("reflect and translate algebra") {
    Polytope K = random_polytope(4, 8, 77);
    CHECK(polytope_equal(reflect(reflect(K)), K));

    Polytope sym = minkowski_sum(K, reflect(K)); // centrally symmetric
    CHECK(polytope_equal(reflect(sym), sym));

    Vec x{0.4, -0.1, 0.9, 0.0};
    CHECK(polytope_equal(reflect(translate(K, x)),
                         translate(reflect(K), negate(x))));
}

TEST_CASE("complex structure: J^2 = -I, complex scale action") {
    for (int m : {1, 2, 3}) {
        ComplexStructure J = ComplexStructure::standard(m);
        CHECK(is_valid_complex_structure(J));
    }

    ComplexStructure J = ComplexStructure::standard(2);
    Vec u{1, 0, 0, 0};
    Polytope seg = make_segment(Vec{0, 0, 0, 0}, u);

    Polytope same = complex_scale(ComplexScalar(1, 0), seg, J);
    CHECK(polytope_equal(same, seg));

    Polytope rot = complex_scale(ComplexScalar(0, 1), seg, J);
    CHECK(polytope_equal(rot, make_segment(Vec{0, 0, 0, 0}, mat_vec(J.J, u))));

    // J-coherence: scale by alpha*beta equals composition.
    ComplexScalar a(0.6, 0.8), b(-0.28, 0.96);
    Polytope K = random_polytope(4, 9, 31);
    Polytope lhs = complex_scale(ComplexScalar(a.value() * b.value()), K, J);
    Polytope rhs = complex_scale(a, complex_scale(b, K, J), J);
    CHECK(polytope_equal(lhs, rhs));

    // unit-modulus scaling preserves volume
    double v0 = convex_hull(K.vertices).volume;
    double v1 = convex_hull(complex_scale(a, K, J).vertices).volume;
    CHECK(v1 == doctest::Approx(v0).epsilon(1e-9));
}

TEST_CASE("complex scale rotates a square inside its complex line") {
    ComplexStructure J = ComplexStructure::standard(2);
    Vec u{1, 0, 0, 0};
    Vec ju = mat_vec(J.J, u);
    // unit square spanned by u and Ju
    Polytope sq = canonicalize(
        Polytope({Vec(4, 0.0), u, ju, add(u, ju)}, 4));
    double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
    Polytope rot = complex_scale(ComplexScalar(c, s), sq, J);

    Mat R(4); // rotation by pi/4 in the (u, Ju) plane
    R.at(0, 0) = c; R.at(0, 1) = -s;
    R.at(1, 0) = s; R.at(1, 1) = c;
    R.at(2, 2) = 1; R.at(3, 3) = 1;
    Polytope want = apply_matrix(R, sq);
    REQUIRE(rot.size() == want.size());
    for (size_t i = 0; i < rot.size(); ++i)
        for (int k = 0; k < 4; ++k)
            CHECK(rot.vertices[i][k] ==
                  doctest::Approx(want.vertices[i][k]).epsilon(1e-12));
}

TEST_CASE("canonicalize projects lower-dimensional bodies to their span") {
    // hexagon embedded in R^6 with redundant interior points
    std::mt19937_64 rng(12);
    Vec a = random_direction(6, rng);
    Vec b = random_direction(6, rng);
    std::vector<Vec> pts;
    for (int k = 0; k < 6; ++k) {
        double th = 2.0 * M_PI * k / 6;
        pts.push_back(add(scale(a, std::cos(th)), scale(b, std::sin(th))));
    }
    pts.push_back(scale(add(pts[0], pts[3]), 0.5)); // interior
    Polytope hexa = canonicalize(Polytope(pts, 6));
    CHECK(hexa.size() == 6);
}

TEST_CASE("complex pairing is C-linear in the vector argument") {
    ComplexStructure J = ComplexStructure::standard(3);
    std::mt19937_64 rng(5);
    Vec xi = random_direction(6, rng);
    Vec x = random_direction(6, rng);
    cplx z(0.44, -1.3);
    Vec zx = mat_vec(scalar_matrix(ComplexScalar(z), J), x);
    cplx lhs = complex_pairing(xi, zx, J);
    cplx rhs = z * complex_pairing(xi, x, J);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("hausdorff distance: metric basics") {
    Polytope K = random_polytope(4, 10, 51);
    CHECK(hausdorff_distance(K, K) == doctest::Approx(0.0).epsilon(1e-12));

    Vec x{0.3, 0.1, -0.2, 0.05};
    CHECK(hausdorff_distance(K, translate(K, x)) <= norm(x) + 1e-12);

    Polytope p = make_point(Vec{0, 0, 0, 0});
    CHECK(hausdorff_distance(p, translate(p, x)) == doctest::Approx(norm(x)));

    Polytope s1 = make_segment(Vec{0, 0}, Vec{1, 0});
    Polytope s2 = make_segment(Vec{0, 0}, Vec{2, 0});
    CHECK(hausdorff_distance(s1, s2) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("hausdorff distance: symmetry and triangle inequality on random triples") {
    for (int trial = 0; trial < 10; ++trial) {
        Polytope A = random_polytope(4, 8, 300 + 3 * trial);
        Polytope B = random_polytope(4, 9, 301 + 3 * trial);
        Polytope C = random_polytope(4, 7, 302 + 3 * trial);
        double ab = hausdorff_distance(A, B);
        double ba = hausdorff_distance(B, A);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        double ac = hausdorff_distance(A, C);
        double cb = hausdorff_distance(C, B);
        double scl = std::max({body_scale(A), body_scale(B), body_scale(C)});
        CHECK(ab <= ac + cb + 1e-9 * scl);
    }
}
