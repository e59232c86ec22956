#pragma once

#include "minkval/area_measure.hpp"
#include "minkval/polygon.hpp"

namespace minkval {

// V_2(K,L) = 1/2 * sum over atoms of S(K,.) of weight * h(L, normal).
// Symmetric; V_2(K,K) = area(K).
double mixed_area(const Polygon& K, const Polygon& L);

// s(K) = (1/pi) * integral over S^1 of h(K,theta) (cos,sin) dtheta,
// evaluated in closed form over the normal-fan arcs.
P2 steiner_point(const Polygon& K);

// V_2(C1,C2)^2 - V_2(C1,C1) V_2(C2,C2), nonnegative up to round-off with
// equality exactly for homothets.
double minkowski_inequality_gap(const Polygon& C1, const Polygon& C2);

Polygon steiner_centered(const Polygon& K);

} // namespace minkval
