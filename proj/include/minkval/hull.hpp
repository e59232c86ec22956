#pragma once

// Incremental beneath-beyond convex hull in R^n (n <= 8 at desk scale).
// Floating point throughout; points within 1e-9 * diameter of the current
// boundary are treated as non-exterior. Not full-dimensional input raises
// DegenerateHull with the observed affine rank.

#include "minkval/linalg.hpp"

#include <vector>

namespace minkval {

struct HullFacet {
    Vec normal;                       // unit outward
    double offset = 0.0;              // <normal, x> <= offset on the hull
    double measure = 0.0;             // (n-1)-dimensional facet volume
    std::vector<int> vertex_indices;  // indices into the input point list
};

struct HullResult {
    std::vector<HullFacet> facets;    // coplanar simplicial pieces merged
    double volume = 0.0;
    std::vector<int> vertex_indices;  // extreme points among the input
};

HullResult convex_hull(const std::vector<Vec>& points);

} // namespace minkval
