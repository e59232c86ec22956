#pragma once

// Property verification of the theorem statements at desk scale: valuation
// additivity, translation invariance, SL(W,C)-equivariance, Lipschitz
// continuity, homogeneity-degree probing, and the uniqueness identity.

#include "minkval/complex_structure.hpp"
#include "minkval/polytope.hpp"
#include "minkval/valuations.hpp"

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace minkval {

struct CheckCase {
    std::string label;
    double violation = 0.0;
    bool ok = true;
    std::string note;
};

struct CheckReport {
    std::string check;
    double tolerance = 0.0;
    double max_violation = 0.0;
    bool pass = true;
    std::vector<CheckCase> cases;

    void add(CheckCase c);
};

struct ProbeSuite {
    std::vector<Polytope> bodies;
    std::vector<Vec> directions;
    std::vector<LinearMap> group_elements;
    unsigned seed = 0;
};

ProbeSuite make_probe_suite(int m, int n_bodies, int n_directions, int n_group,
                            unsigned seed);

// Vertices sampled on the unit sphere, hulled; deterministic per seed.
// Degenerate samples are retried up to 10 times before DegenerateHull.
Polytope random_polytope(int n, int vertex_count, unsigned seed);

Vec random_direction(int n, std::mt19937_64& rng);

// Random complex m x m matrix, conditioned, divided by det^{1/m}
// (principal branch); |det_C - 1| <= 1e-10 by construction.
LinearMap random_sl(int m, unsigned seed);

struct SplitResult {
    Polytope below;  // P intersect {<u,x> <= b}
    Polytope above;  // P intersect {<u,x> >= b}
    Polytope slice;  // P intersect the hyperplane
};

// Vertex clipping with edge-chord intersection points. The hyperplane must
// strictly separate at least one vertex on each side (else NoSplit).
SplitResult split_polytope(const Polytope& P, const Vec& normal, double offset);

// h(Z(K u L), xi) + h(Z(K n L), xi) = h(ZK, xi) + h(ZL, xi) per direction.
CheckReport check_valuation_property(const BodyValuation& Z, const Polytope& P,
                                     const Vec& normal, double offset,
                                     const std::vector<Vec>& directions,
                                     double tol_scale = 1e-7);

CheckReport check_translation_invariance(const BodyValuation& Z, const Polytope& K,
                                         const std::vector<Vec>& translations,
                                         const std::vector<Vec>& directions,
                                         double tol_scale = 1e-7);

// Covariant kinds compare h(Z(gK), xi) with h(Z(K), g^T xi); contravariant
// kinds compare h(Z(gK), w) with h(Z(K), g^{-1} w). A non-SL(W,C) element is
// recorded as a failing case carrying |det_C(g) - 1|.
CheckReport check_equivariance(const BodyValuation& Z, bool contravariant,
                               const Polytope& K, const std::vector<LinearMap>& group,
                               const std::vector<Vec>& directions,
                               const ComplexStructure& J, double tol_scale = 1e-6);

// |h(ZK,xi) - h(ZK',xi)| <= L_const * hausdorff(K,K') per direction.
CheckReport check_lipschitz(const BodyValuation& Z, const Polytope& K,
                            const Polytope& K_perturbed, double lipschitz_const,
                            const std::vector<Vec>& directions,
                            double tol_scale = 1e-7);

struct HomogeneityProfile {
    std::set<int> degrees;
    std::vector<double> coefficients; // magnitude per degree 0..max
};

// Fits h(Z(tK), xi) as a polynomial of degree <= 2m over t_grid and reports
// the degrees whose coefficient exceeds 1e-6 * scale.
HomogeneityProfile estimate_homogeneity(const BodyValuation& Z, const Polytope& K,
                                        const Vec& xi, const std::vector<double>& t_grid,
                                        double threshold_scale = 1e-6);

std::vector<double> default_t_grid(int m);

// If D_{C1} and D_{C2} agree on the probe suite (sup difference within
// 1e-8 * scale), the Steiner-centered bodies must coincide; distinct centered
// bodies must separate on some probe.
CheckReport uniqueness_identity_check(const Polygon& C1, const Polygon& C2,
                                      const ComplexStructure& J, unsigned seed);

// Negative controls for the regression set.
BodyValuation impostor_identity();
BodyValuation impostor_volume_scaled_dc(const Polygon& C, const ComplexStructure& J);

} // namespace minkval
