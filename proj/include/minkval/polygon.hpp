#pragma once

// Convex polygons in C ~ R^2, counterclockwise, canonical start at the
// lexicographically smallest vertex. Segments and points carry a degenerate
// flag instead of a fake interior.

#include "minkval/linalg.hpp"
#include "minkval/polytope.hpp"

#include <array>
#include <complex>
#include <vector>

namespace minkval {

using P2 = std::array<double, 2>;

struct Polygon {
    std::vector<P2> vertices; // CCW, strictly convex unless degenerate
    bool degenerate = false;  // segment (2 vertices) or point (1)

    bool is_point() const { return vertices.size() == 1; }
    bool is_segment() const { return vertices.size() == 2; }
    bool full_dimensional() const { return !degenerate && vertices.size() >= 3; }
};

// Convex hull of arbitrary planar points; collinear inputs give a segment,
// coincident inputs a point.
Polygon make_polygon(const std::vector<P2>& points);

Polygon polygon_square();                          // [0,1]^2
Polygon polygon_triangle();                        // (0,0),(1,0),(0,1)
Polygon polygon_disc(int k = 64, double radius = 1.0); // regular k-gon
Polygon polygon_segment(const std::complex<double>& a, const std::complex<double>& b);

double polygon_area(const Polygon& P);
double polygon_perimeter(const Polygon& P);
double polygon_diameter(const Polygon& P);
double polygon_support(const Polygon& P, const P2& dir);

Polygon polygon_translate(const Polygon& P, const P2& x);
Polygon polygon_scale(const Polygon& P, double t);
Polygon polygon_conjugate(const Polygon& P); // reflection across the real axis
Polygon polygon_minkowski_sum(const Polygon& A, const Polygon& B);

double polygon_point_distance(const P2& p, const Polygon& P);
double polygon_hausdorff(const Polygon& A, const Polygon& B);

bool polygon_equal(const Polygon& A, const Polygon& B, double tol);

// Bridges to the geom-core body type (dim_ambient = 2).
Polytope polygon_to_polytope(const Polygon& P);
Polygon polytope_to_polygon(const Polytope& K);

} // namespace minkval
