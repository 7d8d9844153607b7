#pragma once

#include <Eigen/SparseCore>

#include "hypermix/types.hpp"

namespace hypermix {

/// Symmetric positive-semidefinite graph Laplacian assembled from
/// overlapping local windows. Rows sum to zero and the constant vector lies
/// in the null space.
struct SparseLaplacian {
    Eigen::SparseMatrix<double> matrix;  // n x n

    Index n() const { return matrix.rows(); }
};

/// Builds the matting Laplacian L = sum_i S_i' G_i G_i S_i over every fully
/// contained window placement (centers at least window/2 away from each
/// border), where
///   G_i = P - Yc_i' (Yc_i Yc_i' + eps I)^-1 Yc_i,
///   P   = I - 11'/m   (m = window^2),
///   Yc_i = Y_i P      (window pixels, centered).
///
/// The L x L inverse is evaluated through the push-through identity as an
/// m x m solve, (B + eps I)^-1 B with B = Yc'Yc, whenever the channel count
/// exceeds the window size; for L <= m the direct L x L solve is both
/// cheaper and better conditioned.
///
/// Throws ImageTooSmall if no full window fits.
SparseLaplacian build_matting_laplacian(const HyperCube& cube, double epsilon, int window = 3);

}  // namespace hypermix
