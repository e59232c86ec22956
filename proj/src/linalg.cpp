#include "minkval/linalg.hpp"
#include "minkval/errors.hpp"

#include <algorithm>
#include <cmath>

namespace minkval {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Vec& a, double t) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

Vec negate(const Vec& a) { return scale(a, -1.0); }

Vec normalized(const Vec& a) {
    double n = norm(a);
    if (n == 0.0) throw NumericalError("cannot normalize zero vector");
    return scale(a, 1.0 / n);
}

Mat Mat::identity(int n) {
    Mat I(n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1.0;
    return I;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    Mat C(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            double aik = A.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < A.n; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

Vec mat_vec(const Mat& A, const Vec& x) {
    Vec y(static_cast<size_t>(A.n), 0.0);
    for (int i = 0; i < A.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < A.n; ++j) s += A.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Mat mat_transpose(const Mat& A) {
    Mat T(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Mat mat_add(const Mat& A, const Mat& B) {
    Mat C(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
    return C;
}

Mat mat_scale(const Mat& A, double t) {
    Mat C(A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] * t;
    return C;
}

double mat_max_abs(const Mat& A) {
    double m = 0.0;
    for (double v : A.a) m = std::max(m, std::fabs(v));
    return m;
}

double mat_det(Mat A) {
    const int n = A.n;
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(A.at(r, c)) > std::fabs(A.at(p, c))) p = r;
        if (A.at(p, c) == 0.0) return 0.0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(A.at(p, j), A.at(c, j));
            det = -det;
        }
        det *= A.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            double f = A.at(r, c) / A.at(c, c);
            for (int j = c; j < n; ++j) A.at(r, j) -= f * A.at(c, j);
        }
    }
    return det;
}

Mat mat_inverse(Mat A) {
    const int n = A.n;
    Mat inv = Mat::identity(n);
    const double scale = std::max(mat_max_abs(A), 1e-300);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(A.at(r, c)) > std::fabs(A.at(p, c))) p = r;
        if (std::fabs(A.at(p, c)) < 1e-13 * scale)
            throw NumericalError("matrix inverse: singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(A.at(p, j), A.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        double piv = A.at(c, c);
        for (int j = 0; j < n; ++j) {
            A.at(c, j) /= piv;
            inv.at(c, j) /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            double f = A.at(r, c);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                A.at(r, j) -= f * A.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

Vec solve_linear(Mat A, Vec b, double tol) {
    const int n = A.n;
    const double scale = std::max(mat_max_abs(A), 1e-300);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(A.at(r, c)) > std::fabs(A.at(p, c))) p = r;
        if (std::fabs(A.at(p, c)) < tol * scale)
            throw NumericalError("solve_linear: singular system");
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(A.at(p, j), A.at(c, j));
            std::swap(b[p], b[c]);
        }
        for (int r = c + 1; r < n; ++r) {
            double f = A.at(r, c) / A.at(c, c);
            if (f == 0.0) continue;
            for (int j = c; j < n; ++j) A.at(r, j) -= f * A.at(c, j);
            b[r] -= f * b[c];
        }
    }
    Vec x(static_cast<size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A.at(i, j) * x[j];
        x[i] = s / A.at(i, i);
    }
    return x;
}

Vec nullspace_unit(const std::vector<Vec>& rows, int n) {
    // Eliminate to row-echelon form with column pivoting; the free column
    // determines the normal direction.
    std::vector<Vec> R = rows;
    std::vector<int> pivot_col;
    double scale = 1e-300;
    for (const Vec& r : R)
        for (double v : r) scale = std::max(scale, std::fabs(v));

    size_t row = 0;
    std::vector<bool> col_used(static_cast<size_t>(n), false);
    for (int c = 0; c < n && row < R.size(); ++c) {
        size_t p = row;
        for (size_t r = row; r < R.size(); ++r)
            if (std::fabs(R[r][c]) > std::fabs(R[p][c])) p = r;
        if (std::fabs(R[p][c]) < 1e-12 * scale) continue;
        std::swap(R[p], R[row]);
        for (size_t r = 0; r < R.size(); ++r) {
            if (r == row) continue;
            double f = R[r][c] / R[row][c];
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) R[r][j] -= f * R[row][j];
        }
        pivot_col.push_back(c);
        col_used[c] = true;
        ++row;
    }
    if (static_cast<int>(pivot_col.size()) != n - 1)
        throw NumericalError("nullspace_unit: rows do not have rank n-1");

    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!col_used[c]) { free_col = c; break; }

    Vec u(static_cast<size_t>(n), 0.0);
    u[free_col] = 1.0;
    for (size_t r = 0; r < pivot_col.size(); ++r)
        u[pivot_col[r]] = -R[r][free_col] / R[r][pivot_col[r]];
    return normalized(u);
}

double gram_volume(const std::vector<Vec>& edges) {
    const int k = static_cast<int>(edges.size());
    Mat G(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) G.at(i, j) = dot(edges[i], edges[j]);
    double d = mat_det(G);
    return d <= 0.0 ? 0.0 : std::sqrt(d);
}

std::vector<Vec> orthonormal_basis(const std::vector<Vec>& vectors, double tol) {
    std::vector<Vec> basis;
    double mag = 0.0;
    for (const Vec& v : vectors) mag = std::max(mag, norm(v));
    if (mag == 0.0) return basis;
    for (const Vec& v : vectors) {
        Vec w = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& b : basis) w = sub(w, scale(b, dot(w, b)));
        if (norm(w) > tol * mag) basis.push_back(normalized(w));
    }
    return basis;
}

std::complex<double> complex_det(const std::vector<std::complex<double>>& entries, int m) {
    std::vector<std::complex<double>> A = entries;
    auto at = [&](int i, int j) -> std::complex<double>& {
        return A[static_cast<size_t>(i) * m + j];
    };
    std::complex<double> det = 1.0;
    for (int c = 0; c < m; ++c) {
        int p = c;
        for (int r = c + 1; r < m; ++r)
            if (std::abs(at(r, c)) > std::abs(at(p, c))) p = r;
        if (std::abs(at(p, c)) == 0.0) return 0.0;
        if (p != c) {
            for (int j = 0; j < m; ++j) std::swap(at(p, j), at(c, j));
            det = -det;
        }
        det *= at(c, c);
        for (int r = c + 1; r < m; ++r) {
            std::complex<double> f = at(r, c) / at(c, c);
            for (int j = c; j < m; ++j) at(r, j) -= f * at(c, j);
        }
    }
    return det;
}

std::vector<double> polynomial_fit(const std::vector<double>& t, const std::vector<double>& y) {
    const int n = static_cast<int>(t.size());
    if (static_cast<int>(y.size()) != n || n == 0)
        throw NumericalError("polynomial_fit: node/value size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(t[i] - t[j]) < 1e-12 * (1.0 + std::fabs(t[i])))
                throw NumericalError("polynomial_fit: duplicate nodes");
    Mat V(n);
    for (int i = 0; i < n; ++i) {
        double p = 1.0;
        for (int j = 0; j < n; ++j) {
            V.at(i, j) = p;
            p *= t[i];
        }
    }
    return solve_linear(V, y);
}

} // namespace minkval
