#pragma once

// Small dense linear algebra for ambient dimensions n <= 8. Row-major square
// matrices as flat vectors; no external dependencies.

#include <complex>
#include <vector>

namespace minkval {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double t);
Vec negate(const Vec& a);
Vec normalized(const Vec& a);

// Square matrix, row-major.
struct Mat {
    int n = 0;
    std::vector<double> a; // n*n entries

    Mat() = default;
    explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static Mat identity(int n);
};

Mat mat_mul(const Mat& A, const Mat& B);
Vec mat_vec(const Mat& A, const Vec& x);
Mat mat_transpose(const Mat& A);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_scale(const Mat& A, double t);
double mat_det(Mat A);      // by partial-pivot LU
Mat mat_inverse(Mat A);     // throws NumericalError if singular
double mat_max_abs(const Mat& A);

// Solves A x = b by Gaussian elimination with partial pivoting.
// Throws NumericalError if the pivot falls below tol * max|A|.
Vec solve_linear(Mat A, Vec b, double tol = 1e-13);

// Unit vector orthogonal to the rows of the (n-1) x n matrix `rows`.
// Throws NumericalError if the rows do not have full rank n-1.
Vec nullspace_unit(const std::vector<Vec>& rows, int n);

// Gram determinant volume: k-dimensional measure of the parallelepiped
// spanned by `edges` (k vectors in R^n), i.e. sqrt(det(G^T G)).
double gram_volume(const std::vector<Vec>& edges);

// Orthonormal basis of span(vectors) by modified Gram-Schmidt with the given
// relative drop tolerance. Returns basis vectors; size = numerical rank.
std::vector<Vec> orthonormal_basis(const std::vector<Vec>& vectors, double tol = 1e-9);

// Complex m x m determinant by LU, used for SL(W,C) checks (m <= 3 typical).
std::complex<double> complex_det(const std::vector<std::complex<double>>& entries, int m);

// Fits y(t) = sum_k c_k t^k through the given nodes (degree = t.size()-1).
// Throws NumericalError if the Vandermonde system is ill-conditioned.
std::vector<double> polynomial_fit(const std::vector<double>& t, const std::vector<double>& y);

} // namespace minkval
