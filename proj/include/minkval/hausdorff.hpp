#pragma once

#include "minkval/polytope.hpp"

namespace minkval {

// Distance from p to conv(vertices of K) by Frank-Wolfe iteration with away
// steps (linear minimization oracle = support in the negative gradient
// direction). Stops at duality gap 1e-10 * scale or max_iter iterations;
// non-convergence raises NumericalError.
double point_body_distance(const Vec& p, const Polytope& K, int max_iter = 10000);

// max over vertices of K of the distance to L, and symmetrically.
double hausdorff_distance(const Polytope& K, const Polytope& L, int max_iter = 10000);

} // namespace minkval
