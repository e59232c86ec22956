#include "minkval/complex_structure.hpp"
#include "minkval/errors.hpp"

#include <cmath>

namespace minkval {

ComplexStructure ComplexStructure::standard(int m) {
    ComplexStructure cs;
    cs.m = m;
    cs.J = Mat(2 * m);
    for (int k = 0; k < m; ++k) {
        cs.J.at(2 * k, 2 * k + 1) = -1.0;
        cs.J.at(2 * k + 1, 2 * k) = 1.0;
    }
    return cs;
}

bool is_valid_complex_structure(const ComplexStructure& J) {
    const int n = J.J.n;
    if (n != 2 * J.m || n == 0) return false;
    Mat JJ = mat_mul(J.J, J.J);
    Mat JtJ = mat_mul(mat_transpose(J.J), J.J);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double want = (i == j) ? -1.0 : 0.0;
            if (std::fabs(JJ.at(i, j) - want) > 1e-12) return false;
            double ortho = (i == j) ? 1.0 : 0.0;
            if (std::fabs(JtJ.at(i, j) - ortho) > 1e-12) return false;
        }
    return true;
}

Mat scalar_matrix(const ComplexScalar& a, const ComplexStructure& J) {
    return mat_add(mat_scale(Mat::identity(J.J.n), a.re), mat_scale(J.J, a.im));
}

Polytope complex_scale(const ComplexScalar& a, const Polytope& K, const ComplexStructure& J) {
    if (K.dim_ambient != J.J.n)
        throw DimensionError("complex_scale: body/structure dimension mismatch");
    return apply_matrix(scalar_matrix(a, J), K);
}

cplx complex_pairing(const Vec& xi, const Vec& x, const ComplexStructure& J) {
    return {dot(xi, x), -dot(xi, mat_vec(J.J, x))};
}

LinearMap realify(const std::vector<cplx>& entries, int m, const ComplexStructure& J) {
    Mat M(2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const cplx& z = entries[static_cast<size_t>(i) * m + j];
            M.at(2 * i, 2 * j) = z.real();
            M.at(2 * i, 2 * j + 1) = -z.imag();
            M.at(2 * i + 1, 2 * j) = z.imag();
            M.at(2 * i + 1, 2 * j + 1) = z.real();
        }
    LinearMap g(std::move(M));
    g.is_complex_linear = commutes_with_j(g.M, J);
    return g;
}

bool commutes_with_j(const Mat& M, const ComplexStructure& J, double tol) {
    Mat a = mat_mul(M, J.J);
    Mat b = mat_mul(J.J, M);
    double dev = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i)
        dev = std::max(dev, std::fabs(a.a[i] - b.a[i]));
    return dev <= tol * std::max(1.0, mat_max_abs(M));
}

cplx complex_determinant(const Mat& M, const ComplexStructure& J) {
    const int m = J.m;
    if (M.n != 2 * m) throw DimensionError("complex_determinant: size mismatch");
    std::vector<cplx> entries(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            entries[static_cast<size_t>(i) * m + j] =
                cplx(M.at(2 * i, 2 * j), M.at(2 * i + 1, 2 * j));
    return complex_det(entries, m);
}

bool is_sl_w_c(const LinearMap& g, const ComplexStructure& J, double tol) {
    if (!commutes_with_j(g.M, J, tol)) return false;
    return std::abs(complex_determinant(g.M, J) - cplx(1.0, 0.0)) <= tol;
}

Polytope apply_linear(const LinearMap& g, const Polytope& K) {
    return apply_matrix(g.M, K);
}

} // namespace minkval
