#pragma once

// File formats. Bodies: {"dim": n, "vertices": [[...],...]}; measures:
// {"atoms": [{"angle": a, "weight": w},...]}; operators:
// {"kind": "...", "C": <body json>, "m": int}. All numbers are written as
// decimals with 17 significant digits so outputs diff stably.

#include "minkval/area_measure.hpp"
#include "minkval/harness.hpp"
#include "minkval/polygon.hpp"
#include "minkval/polytope.hpp"
#include "minkval/valuations.hpp"

#include <string>

namespace minkval {

std::string format_number(double x); // %.17g

std::string body_to_json(const Polytope& K);
Polytope body_from_json(const std::string& text);

std::string polygon_to_json(const Polygon& P);
Polygon polygon_from_json(const std::string& text);

std::string measure_to_json(const AreaMeasureS1& mu);
AreaMeasureS1 measure_from_json(const std::string& text);

std::string operator_to_json(const ValuationOperator& op);
ValuationOperator operator_from_json(const std::string& text);

std::string report_to_json(const CheckReport& rep);
std::string reports_to_json(const std::vector<CheckReport>& reps);

std::string operator_kind_name(OperatorKind kind);
OperatorKind operator_kind_from_name(const std::string& name);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace minkval
