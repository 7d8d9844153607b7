#pragma once

#include <vector>

#include "hypermix/types.hpp"

namespace hypermix {

/// Endmember-level and abundance-level errors against a ground truth, after
/// optimal matching. `matching[i]` is the truth column assigned to estimated
/// column i.
struct EvalReport {
    std::vector<int> matching;
    std::vector<double> sad_per_endmember;   // radians
    std::vector<double> rmse_per_abundance;
    double mean_sad = 0.0;
    double mean_rmse = 0.0;
};

/// Spectral angle distance arccos(m'm^ / (|m| |m^|)) in [0, pi]; the cosine
/// is clamped to [-1, 1] first. Scale-invariant. Throws ZeroNorm.
double sad(const Vector& m, const Vector& m_hat);

/// Root mean square error ((1/N) |z - z^|^2)^(1/2) over an abundance row.
double rmse(const Vector& z, const Vector& z_hat);

/// Minimum-total-SAD bijection between estimated and true endmember
/// columns, exact for K up to 20 (subset dynamic program); ties break
/// toward the lowest truth index.
std::vector<int> match_endmembers(const Matrix& m_hat, const Matrix& m_true);

/// Per-pixel Hoyer sparsity (sqrt(K) - |a|_1/|a|_2) / (sqrt(K) - 1): 0 for a
/// uniform abundance vector, 1 for a one-hot one. Requires K >= 2; throws
/// ZeroColumn on an all-zero pixel.
Vector hoyer_sparsity_map(const Matrix& abundances);

/// Matches endmembers, then reports per-pair SAD, per-matched-row RMSE and
/// their means.
EvalReport evaluate(const FactorPair& estimated, const FactorPair& truth);

/// Pearson correlation between two equally sized samples.
double pearson_correlation(const Vector& x, const Vector& y);

}  // namespace hypermix
