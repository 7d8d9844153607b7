#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "hypermix/errors.hpp"

namespace hypermix {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// A hyperspectral image cube: L channels by N pixels, spectra stored as
/// columns so per-pixel access is contiguous. Pixel n sits at grid
/// coordinate (row = n / width, col = n % width).
struct HyperCube {
    Matrix data;  // L x N, nonnegative reflectance
    int width = 0;
    int height = 0;

    Index channels() const { return data.rows(); }
    Index pixels() const { return data.cols(); }
};

inline Index grid_to_index(int row, int col, int width) {
    return static_cast<Index>(row) * width + col;
}

inline std::pair<int, int> index_to_grid(Index n, int width) {
    return {static_cast<int>(n / width), static_cast<int>(n % width)};
}

/// Throws ShapeMismatch / NonFiniteValue / NegativeValue unless every
/// HyperCube invariant holds.
void validate_cube(const HyperCube& cube);

/// Endmember spectra (columns of M, L x K) and per-pixel abundances
/// (columns of A, K x N).
struct FactorPair {
    Matrix endmembers;  // L x K
    Matrix abundances;  // K x N
};

/// Hard-validates nonnegativity and finiteness; returns human-readable
/// warnings for soft violations (K exceeding min(L, N)).
std::vector<std::string> validate_factors(const FactorPair& factors);

/// Per-pixel guidance map. `raw` holds nonnegative neighbor-similarity sums
/// (or the fine-tuned solve output); `scaled` holds values in [0, 1) ready
/// to drive the adaptive sparsity exponent. Either vector may be empty if
/// that stage has not been computed.
struct DgMap {
    Vector raw;
    Vector scaled;
};

enum class RegKind { None, L1, LHalf, DataGuided };
enum class InitScheme { Random, DataPixels };

/// All tunables of the unmixing pipeline in one place.
///
/// Documented operating ranges: sigma in [0.005, 0.08], alpha in
/// [1e-6, 1e-4], epsilon in [1e-7, 1e-4], lambda in [0.005, 0.9],
/// beta = 1e-8.
struct SolverConfig {
    double lambda = 0.1;   // sparsity weight
    double xi = 1e-8;      // Lipschitz guard added inside fractional powers
    double sigma = 0.02;   // heat-kernel bandwidth for the initial map
    double alpha = 1e-5;   // fine-tuning strength (smaller = stronger refinement)
    double epsilon = 1e-6; // window regularizer in the matting Laplacian
    double beta = 1e-8;    // rescale guard keeping scaled values below 1
    int window = 3;        // odd side length of the local window
    int max_iters = 1000;
    double rel_tol = 1e-6; // stop when (O_t - O_{t+1})/O_t drops below; <= 0 disables
    std::uint64_t seed = 0;
    RegKind regularizer = RegKind::DataGuided;
    InitScheme init = InitScheme::Random;
    Vector guide;          // scaled DgMap, consulted iff regularizer == DataGuided
    double cg_tol = 1e-8;
    int cg_max_iters = 0;  // 0 means 10 * N
};

}  // namespace hypermix
