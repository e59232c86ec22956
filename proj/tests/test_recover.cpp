#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkval/errors.hpp"
#include "minkval/harness.hpp"
#include "minkval/planar_ops.hpp"
#include "minkval/recover.hpp"
#include "minkval/valuations.hpp"

#include <cmath>

using namespace minkval;

namespace {

BlackBoxValuation dc_black_box(const Polygon& C, const ComplexStructure& J) {
    return [C, J](const Polytope& probe, const Vec& dir) {
        return complex_difference_evaluator(C, probe, J)(dir);
    };
}

} // namespace

TEST_CASE("nnls: small systems with known solutions") {
    // Unconstrained optimum is feasible: A = I.
    std::vector<std::vector<double>> I2{{1, 0}, {0, 1}};
    std::vector<double> x = nnls(I2, {2.0, 3.0}, {});
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-7));

    // Negative component clamps to the boundary.
    std::vector<double> y = nnls(I2, {-1.0, 5.0}, {});
    CHECK(y[0] == doctest::Approx(0.0));
    CHECK(y[1] == doctest::Approx(5.0).epsilon(1e-7));

    // Correlated columns.
    std::vector<std::vector<double>> A{{1, 1}, {1, 1.01}, {0.5, 0.4}};
    std::vector<double> b{2.0, 2.01, 0.9};
    std::vector<double> z = nnls(A, b, {});
    double r0 = z[0] + z[1] - 2.0;
    double r1 = z[0] + 1.01 * z[1] - 2.01;
    double r2 = 0.5 * z[0] + 0.4 * z[1] - 0.9;
    CHECK(std::sqrt(r0 * r0 + r1 * r1 + r2 * r2) < 1e-5);
    CHECK(z[0] >= 0.0);
    CHECK(z[1] >= 0.0);
}

TEST_CASE("recover_C round trip on the named shapes, m = 2") {
    ComplexStructure J = ComplexStructure::standard(2);
    Vec u{1, 0, 0, 0};
    std::vector<Polygon> shapes{
        polygon_square(),
        polygon_triangle(),
        polygon_segment({0.0, 0.0}, {0.0, -1.0}),
        polygon_disc(8),
        polygon_translate(make_polygon({{0.3, 0.0}, {1.0, 0.6}, {0.4, 1.3}, {-0.3, 0.7}}),
                          {0.2, -0.5}),
    };
    for (const Polygon& C : shapes) {
        RecoverResult r = recover_C(dc_black_box(C, J), 2, u, u, J, {});
        double dh = polygon_hausdorff(r.C, steiner_centered(C));
        CHECK(dh <= 0.05 * polygon_diameter(C));
    }
}

TEST_CASE("recover_C round trip in m = 3") {
    ComplexStructure J = ComplexStructure::standard(3);
    Vec u(6, 0.0);
    u[2] = 1.0; // second complex coordinate line
    Polygon C = polygon_triangle();
    RecoverResult r = recover_C(dc_black_box(C, J), 3, u, u, J, {});
    CHECK(polygon_hausdorff(r.C, steiner_centered(C)) <= 0.05 * polygon_diameter(C));
}

TEST_CASE("recover_C from the plain difference body gives the centered unit segment") {
    ComplexStructure J = ComplexStructure::standard(2);
    Vec u{1, 0, 0, 0};
    BlackBoxValuation Z = [&J](const Polytope& probe, const Vec& dir) {
        Polygon c = polygon_segment({0.0, 0.0}, {0.0, -1.0});
        return complex_difference_evaluator(c, probe, J)(dir);
    };
    RecoverResult r = recover_C(Z, 2, u, u, J, {});
    REQUIRE(r.C.is_segment());
    Polygon target = polygon_segment({0.0, -0.5}, {0.0, 0.5});
    CHECK(polygon_hausdorff(r.C, target) <= 0.05);
}

TEST_CASE("recover_C of the zero operator returns a point") {
    ComplexStructure J = ComplexStructure::standard(2);
    Vec u{1, 0, 0, 0};
    BlackBoxValuation Z = [](const Polytope&, const Vec&) { return 0.0; };
    RecoverResult r = recover_C(Z, 2, u, u, J, {});
    CHECK(r.C.is_point());
}

TEST_CASE("recover_C rejects operators of the wrong type") {
    ComplexStructure J = ComplexStructure::standard(2);
    Vec u{1, 0, 0, 0};

    // Pi_C has degree 2m-1 != 1.
    BlackBoxValuation pic = [&J](const Polytope& probe, const Vec& dir) {
        return complex_projection_body(polygon_square(), probe, J)(dir);
    };
    CHECK_THROWS_AS(recover_C(pic, 2, u, u, J, {}), RecoveryFailed);

    // The identity map is not translation invariant.
    BlackBoxValuation ident = [](const Polytope& probe, const Vec& dir) {
        return support(probe, dir);
    };
    CHECK_THROWS_AS(recover_C(ident, 2, u, u, J, {}), RecoveryFailed);

    // Bad pairing normalization is rejected up front.
    CHECK_THROWS_AS(recover_C(ident, 2, u, scale(u, 2.0), J, {}), DimensionError);
}
