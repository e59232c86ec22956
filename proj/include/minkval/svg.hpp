#pragma once

#include "minkval/area_measure.hpp"
#include "minkval/polygon.hpp"

#include <string>

namespace minkval {

// Fixed 512x512 viewBox with computed padding; deterministic output.
std::string polygon_to_svg(const Polygon& P);
std::string measure_to_svg(const AreaMeasureS1& mu); // rose diagram

} // namespace minkval
