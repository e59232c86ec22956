#pragma once

// Inverse problem: recover the classifying body C from a black-box valuation
// observed through support values of Z(probe). Probes live in one complex
// line; atom weights on an angular grid are fitted by nonnegative least
// squares with Tikhonov regularization and a zero-centroid constraint.

#include "minkval/area_measure.hpp"
#include "minkval/complex_structure.hpp"
#include "minkval/polygon.hpp"
#include "minkval/polytope.hpp"

#include <functional>
#include <vector>

namespace minkval {

// Support of Z(probe) in a direction: how a body-valued black box is queried.
using BlackBoxValuation = std::function<double(const Polytope&, const Vec&)>;

struct NnlsOptions {
    double lambda = 1e-8;      // Tikhonov weight
    double grad_tol = 1e-10;   // stop at projected-gradient norm <= tol*scale
    int max_iter = 50000;
};

// min 0.5|Ax-b|^2 + 0.5 lambda |x|^2 over x >= 0, by accelerated projected
// gradient with function-value restarts. Throws NumericalError when the
// gradient tolerance is not reached within max_iter.
std::vector<double> nnls(const std::vector<std::vector<double>>& A,
                         const std::vector<double>& b, const NnlsOptions& opt);

struct RecoverOptions {
    int grid_size = 72;        // G angular bins
    int probes_per_family = 48;
    double lambda = 1e-8;
    double residual_threshold = 0.02; // relative; above it -> RecoveryFailed
};

struct RecoverResult {
    Polygon C;                 // Steiner-centered
    AreaMeasureS1 measure;     // fitted atoms after merging
    double residual = 0.0;     // relative fit residual
};

// u must satisfy <xi,u> = 1 and <xi,Ju> = 0 (the complex pairing xi(u) = 1).
// Verifies translation invariance and degree 1 first; RecoveryFailed if Z is
// not of D_C form.
RecoverResult recover_C(const BlackBoxValuation& Z, int m, const Vec& u, const Vec& xi,
                        const ComplexStructure& J, const RecoverOptions& opt = {});

} // namespace minkval
