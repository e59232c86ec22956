#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkval/errors.hpp"
#include "minkval/harness.hpp"
#include "minkval/io.hpp"
#include "minkval/svg.hpp"

#include <cmath>

using namespace minkval;

TEST_CASE("body json round trip is bit-exact") {
    Polytope K = random_polytope(4, 9, 314);
    std::string j = body_to_json(K);
    Polytope K2 = body_from_json(j);
    REQUIRE(K2.size() == K.size());
    for (size_t i = 0; i < K.size(); ++i)
        for (size_t c = 0; c < 4; ++c)
            CHECK(K.vertices[i][c] == K2.vertices[i][c]); // exact
    CHECK(body_to_json(K2) == j);

    CHECK_THROWS_AS(body_from_json("{\"dim\": 3}"), IOError);
    CHECK_THROWS_AS(body_from_json("{\"dim\": 3, \"vertices\": [[1.0, 2.0]]}"), IOError);
}

TEST_CASE("polygon and measure json round trips") {
    Polygon C = polygon_disc(8, 1.25);
    Polygon C2 = polygon_from_json(polygon_to_json(C));
    CHECK(polygon_hausdorff(C, C2) == 0.0);

    AreaMeasureS1 mu = area_measure(C);
    AreaMeasureS1 nu = measure_from_json(measure_to_json(mu));
    REQUIRE(mu.atoms.size() == nu.atoms.size());
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
        CHECK(mu.atoms[i].angle == nu.atoms[i].angle);
        CHECK(mu.atoms[i].weight == nu.atoms[i].weight);
    }
}

TEST_CASE("operator json round trip") {
    ValuationOperator op;
    op.kind = OperatorKind::ComplexDifference;
    op.C = polygon_triangle();
    op.m = 3;
    ValuationOperator op2 = operator_from_json(operator_to_json(op));
    CHECK(op2.kind == OperatorKind::ComplexDifference);
    CHECK(op2.m == 3);
    CHECK(polygon_hausdorff(op.C, op2.C) == 0.0);

    ValuationOperator d;
    d.kind = OperatorKind::Difference;
    d.m = 2;
    ValuationOperator d2 = operator_from_json(operator_to_json(d));
    CHECK(d2.kind == OperatorKind::Difference);

    // C given as a measure is materialized through Minkowski existence.
    std::string with_measure =
        "{\"kind\": \"ComplexDifference\", \"m\": 2, \"C\": " +
        measure_to_json(area_measure(polygon_square())) + "}";
    ValuationOperator om = operator_from_json(with_measure);
    CHECK(polygon_area(om.C) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(operator_from_json("{\"kind\": \"Frobnicate\", \"m\": 2}"), IOError);
}

TEST_CASE("report json carries pass flag and violations") {
    CheckReport rep;
    rep.check = "demo";
    rep.tolerance = 1e-6;
    CheckCase a;
    a.label = "case 0";
    a.violation = 1e-9;
    rep.add(std::move(a));
    CheckCase b;
    b.label = "case 1";
    b.violation = 0.5;
    rep.add(std::move(b));
    std::string j = report_to_json(rep);
    CHECK(j.find("\"pass\": false") != std::string::npos);
    CHECK(j.find("case 1") != std::string::npos);
}

TEST_CASE("svg output is deterministic and well formed") {
    Polygon sq = polygon_square();
    std::string svg1 = polygon_to_svg(sq);
    std::string svg2 = polygon_to_svg(sq);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") != std::string::npos);
    CHECK(svg1.find("<polygon") != std::string::npos);

    std::string rose = measure_to_svg(area_measure(sq));
    CHECK(rose.find("<line") != std::string::npos);
    // four spokes
    size_t count = 0, pos = 0;
    while ((pos = rose.find("<line", pos)) != std::string::npos) {
        ++count;
        pos += 5;
    }
    CHECK(count == 4);
}
