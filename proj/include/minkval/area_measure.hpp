#pragma once

// Discrete surface area measures on S^1: one atom per edge at the outward
// normal angle with weight = edge length. A segment contributes both sides;
// a point has empty measure.

#include "minkval/polygon.hpp"

#include <vector>

namespace minkval {

struct MeasureAtom {
    double angle = 0.0;  // in [0, 2*pi)
    double weight = 0.0; // > 0
};

struct AreaMeasureS1 {
    std::vector<MeasureAtom> atoms; // angles strictly increasing

    double total_mass() const;
    bool empty() const { return atoms.empty(); }
};

// Normalizes angles to [0,2*pi), sorts, and merges atoms within 1e-10 rad
// (including the wrap-around at 2*pi).
AreaMeasureS1 make_measure(std::vector<MeasureAtom> atoms);

AreaMeasureS1 area_measure(const Polygon& C);

// Constructive 2D Minkowski existence: sorts atoms by angle and concatenates
// the edge vectors w_i * rot(+pi/2) normal_i into a closed CCW polygon.
// Exactly two antipodal atoms give the degenerate segment; the empty measure
// gives the point {0}. Violated centroid condition raises NotClosable.
Polygon minkowski_reconstruct(const AreaMeasureS1& mu);

} // namespace minkval
