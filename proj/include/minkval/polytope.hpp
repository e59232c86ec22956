#pragma once

// Convex bodies in R^n as vertex-represented polytopes. All values are
// immutable after construction; operations return new bodies.

#include "minkval/linalg.hpp"

#include <vector>

namespace minkval {

struct Polytope {
    std::vector<Vec> vertices;
    int dim_ambient = 0;
    bool canonical = false;

    Polytope() = default;
    Polytope(std::vector<Vec> verts, int dim);

    bool empty() const { return vertices.empty(); }
    size_t size() const { return vertices.size(); }
};

// max over vertices of <xi, v>. Throws EmptyBody on an empty vertex list.
double support(const Polytope& K, const Vec& xi);

// Euclidean diameter of the vertex set (0 for singletons).
double diameter(const Polytope& K);

// max(1, diameter): the "scale" entering every relative tolerance.
double body_scale(const Polytope& K);
double pair_scale(const Polytope& K, const Polytope& L);

Polytope translate(const Polytope& K, const Vec& x);
Polytope reflect(const Polytope& K);

// Hull of pairwise vertex sums, canonicalized. h_{K+L} = h_K + h_L.
Polytope minkowski_sum(const Polytope& K, const Polytope& L);

// Vertex-wise image under an n x n matrix, canonicalized.
Polytope apply_matrix(const Mat& M, const Polytope& K);

// Reduces the vertex list to extreme points (handles lower-dimensional
// bodies by projecting to their affine span) and sorts lexicographically.
Polytope canonicalize(const Polytope& K);

// Canonical-form comparison: vertex lists match within 1e-9 * scale.
bool polytope_equal(const Polytope& A, const Polytope& B);

// Affine rank of the vertex set at relative tolerance 1e-9.
int affine_rank(const std::vector<Vec>& points);

Polytope make_point(const Vec& x);
Polytope make_segment(const Vec& a, const Vec& b);
Polytope make_cube(int n);                       // [0,1]^n
Polytope make_simplex(int n);                    // conv{0, e_1, ..., e_n}

} // namespace minkval
