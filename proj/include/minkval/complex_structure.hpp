#pragma once

// Complex structure J on R^{2m} (J^2 = -I, orthogonal) and the action of
// complex scalars and GL(W,C) elements on bodies. Coordinates interleave as
// (x_1, y_1, ..., x_m, y_m) so complex lines are coordinate planes.

#include "minkval/linalg.hpp"
#include "minkval/polytope.hpp"

#include <complex>

namespace minkval {

using cplx = std::complex<double>;

struct ComplexStructure {
    Mat J;
    int m = 0; // complex dimension; ambient is 2m

    static ComplexStructure standard(int m);
};

// Checks J*J = -I (entrywise 1e-12) and orthogonality.
bool is_valid_complex_structure(const ComplexStructure& J);

struct ComplexScalar {
    double re = 0.0;
    double im = 0.0;

    ComplexScalar() = default;
    ComplexScalar(double r, double i) : re(r), im(i) {}
    explicit ComplexScalar(cplx z) : re(z.real()), im(z.imag()) {}
    cplx value() const { return {re, im}; }
};

// re(a)*I + im(a)*J, the matrix of multiplication by a.
Mat scalar_matrix(const ComplexScalar& a, const ComplexStructure& J);

// apply_matrix(re(a)I + im(a)J, K); an isometry for |a| = 1.
Polytope complex_scale(const ComplexScalar& a, const Polytope& K, const ComplexStructure& J);

// Complex pairing <xi, x>_C = <xi,x> - i <xi,Jx>; C-linear in x. The real
// pairing is its real part and g^* is the matrix transpose.
cplx complex_pairing(const Vec& xi, const Vec& x, const ComplexStructure& J);

struct LinearMap {
    Mat M;
    bool is_complex_linear = false; // commutes with J within 1e-10

    LinearMap() = default;
    explicit LinearMap(Mat mat) : M(std::move(mat)) {}
};

// Builds the real 2m x 2m matrix of a complex m x m matrix (row-major).
LinearMap realify(const std::vector<cplx>& complex_entries, int m,
                  const ComplexStructure& J);

// Commutator check against J at the given tolerance.
bool commutes_with_j(const Mat& M, const ComplexStructure& J, double tol = 1e-10);

// Complex determinant of a J-linear map, recovered from the real matrix by
// reading off the complex entries in the standard interleaved basis.
cplx complex_determinant(const Mat& M, const ComplexStructure& J);

// |det_C(g) - 1| <= tol and g commutes with J.
bool is_sl_w_c(const LinearMap& g, const ComplexStructure& J, double tol = 1e-10);

Polytope apply_linear(const LinearMap& g, const Polytope& K);

} // namespace minkval
