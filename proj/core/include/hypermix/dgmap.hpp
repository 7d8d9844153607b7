#pragma once

#include "hypermix/types.hpp"

namespace hypermix {

enum class SimilarityMeasure { Dot, Heat };

/// Normalized dot product yi'yj / (|yi| |yj|); in [0, 1] for nonnegative
/// spectra. Throws ZeroNorm if either vector has zero norm.
double dot_similarity(const Vector& yi, const Vector& yj);

/// Heat kernel exp(-|yj - yi|^2 / sigma); in (0, 1]. Throws InvalidBandwidth
/// if sigma <= 0.
double heat_similarity(const Vector& yi, const Vector& yj, double sigma);

/// Initial guidance map: raw[i] is the summed similarity between pixel i and
/// its existing 4-connected neighbors (2 at corners, 3 at edges, 4 inside).
/// The heat kernel is the default measure; the dot product is kept for
/// comparison, its values bunch up near 1 on smooth scenes.
DgMap initial_dgmap(const HyperCube& cube, double sigma,
                    SimilarityMeasure measure = SimilarityMeasure::Heat);

/// Affine rescale of the raw map into [0, 1):
///   h_n <- (h_n - min h) / (max h - min h + beta).
/// The minimum maps to exactly 0; a constant input maps to all zeros.
DgMap rescale(const DgMap& map, double beta = 1e-8);

/// Constant scaled map of n copies of `value`; value 0 selects l1 behavior
/// downstream, value 1/2 selects l1/2. Throws OutOfRange unless
/// 0 <= value < 1.
DgMap constant_dgmap(Index n, double value);

}  // namespace hypermix
