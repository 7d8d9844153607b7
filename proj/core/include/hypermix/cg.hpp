#pragma once

#include "hypermix/laplacian.hpp"
#include "hypermix/types.hpp"

namespace hypermix {

struct CgResult {
    Vector x;
    int iterations = 0;
    double residual_norm = 0.0;
};

/// Jacobi-preconditioned conjugate gradient for a sparse SPD system.
/// Stops when |b - Ax| <= tol * |b|; throws NoConvergence otherwise.
CgResult pcg_solve(const Eigen::SparseMatrix<double>& a, const Vector& b, double tol,
                   int max_iters);

/// Fine-tunes a raw guidance map by solving (L + alpha I) h = alpha h0.
/// A small alpha lets the Laplacian smooth aggressively; a large alpha pins
/// the solution to the initial map. Defaults: cg_tol = 1e-8,
/// cg_max_iters = 10 * N (passed as 0).
DgMap fine_tune(const SparseLaplacian& laplacian, const DgMap& initial, double alpha,
                double cg_tol = 1e-8, int cg_max_iters = 0);

}  // namespace hypermix
