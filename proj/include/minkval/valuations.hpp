#pragma once

// The classified operators: difference body, complex difference body D_C,
// complex projection body Pi_C, and the two m = 2 operators, together with
// top-order mixed volumes by facet formula and by polynomial fit.

#include "minkval/area_measure.hpp"
#include "minkval/complex_structure.hpp"
#include "minkval/hull.hpp"
#include "minkval/polygon.hpp"
#include "minkval/polytope.hpp"

#include <functional>

namespace minkval {

enum class OperatorKind {
    Difference,
    ComplexDifference,
    ComplexProjection,
    Det2Contra,
    Det2Cova,
};

struct ValuationOperator {
    OperatorKind kind = OperatorKind::Difference;
    Polygon C;  // classifying body; ignored for Difference
    int m = 2;  // complex dimension of the ambient space
};

// A body known only through its support function. Exactly 1-homogeneous:
// evaluation normalizes the direction first.
struct SupportEvaluator {
    std::function<double(const Vec&)> value_at_unit;
    std::function<Vec(const Vec&)> point_at_unit; // supporting point, optional

    double operator()(const Vec& dir) const;
    bool has_points() const { return static_cast<bool>(point_at_unit); }
    Vec support_point(const Vec& dir) const;
};

Polytope difference_body(const Polytope& K);

// D_C K as an exact polytope: the Minkowski sum over the atoms of S(C,.) of
// w_i * (alpha_i K) with alpha_i = e^{i theta_i}. A point C gives {0}.
Polytope complex_difference_body(const Polygon& C, const Polytope& K,
                                 const ComplexStructure& J);

// h(D_C K, xi) straight from the defining sum; no materialization.
double complex_difference_support(const AreaMeasureS1& SC, const Polytope& K,
                                  const ComplexStructure& J, const Vec& xi);

SupportEvaluator complex_difference_evaluator(const Polygon& C, const Polytope& K,
                                              const ComplexStructure& J);

// V(K[n-1], L) by the facet formula (1/n) sum h(L,u_F) * measure(F).
double mixed_volume_top(const Polytope& K, const Polytope& L);
double mixed_volume_top(const HullResult& hull_of_K, const Polytope& L, int n);

// Cross-check: fit vol(K + tL) at t = 0..n and return (coefficient of t)/n.
double mixed_volume_top_fit(const Polytope& K, const Polytope& L);

// The polygon C w = {c w : c in C} embedded in span{w, Jw}.
Polytope polygon_times_vector(const Polygon& C, const Vec& w, const ComplexStructure& J);

// h(Pi_C K, w) = V(K[2m-1], Cw). K must be full-dimensional.
SupportEvaluator complex_projection_body(const Polygon& C, const Polytope& K,
                                         const ComplexStructure& J);

// m = 2 operators (Fix the standard basis of W; det is the complex 2x2
// determinant and Phi the induced identification of W with W*).
SupportEvaluator det2_contravariant(const Polygon& C, const Polytope& K,
                                    const ComplexStructure& J);
SupportEvaluator det2_covariant(const Polygon& C, const Polytope& K,
                                const ComplexStructure& J);

// det(K,w) = {det(k,w) : k in K} as a planar polygon, m = 2.
Polygon det2_body(const Polytope& K, const Vec& w, const ComplexStructure& J);

// Inner approximation: hull of supporting points sampled over `dirs`
// deterministic unit directions (default 500).
Polytope materialize(const SupportEvaluator& h, int dim, int dirs = 500,
                     unsigned seed = 20240901u);

// Evaluator factory for any operator kind.
using BodyValuation = std::function<SupportEvaluator(const Polytope&)>;
BodyValuation make_valuation(const ValuationOperator& op, const ComplexStructure& J);

bool operator_is_contravariant(OperatorKind kind);

// Homogeneity degree in K of the exact operators (1, 1, 2m-1, 1, 3).
int operator_degree(const ValuationOperator& op);

} // namespace minkval
