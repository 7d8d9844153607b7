#pragma once

#include <utility>
#include <vector>

#include "hypermix/types.hpp"

namespace hypermix {

/// Sparsity regularizer applied to the abundance matrix. DataGuided holds a
/// scaled per-pixel map h; pixel n is penalized with the l_(1-h_n)
/// quasi-norm, so the constant maps 0 and 1/2 reproduce L1 and LHalf.
struct Regularizer {
    RegKind kind = RegKind::None;
    Vector map;  // scaled guidance values, used iff kind == DataGuided
    double lambda = 0.0;
    double xi = 1e-8;

    static Regularizer none();
    static Regularizer l1(double lambda);
    static Regularizer l_half(double lambda, double xi = 1e-8);
    static Regularizer data_guided(Vector scaled_map, double lambda, double xi = 1e-8);

    /// Throws unless the regularizer is usable for a problem with n pixels.
    void validate(Index n) const;
};

enum class StopReason { MaxIters, RelTol };

/// Objective values and relative decrements recorded by run(), one entry
/// per completed iteration.
struct RunTrace {
    std::vector<double> objective;             // length iterations_run + 1
    std::vector<double> relative_decrements;   // (O_t - O_{t+1}) / O_t
    int iterations_run = 0;
    StopReason stop_reason = StopReason::MaxIters;
};

/// Evaluates 1/2 |Y - MA|_F^2 plus the regularizer penalty:
///   None        0
///   L1          lambda * sum |A_kn|
///   LHalf       lambda * sum (A_kn + xi)^(1/2)
///   DataGuided  lambda * sum_n sum_k (A_kn + xi)^(1 - h_n)
double objective(const Matrix& y, const FactorPair& factors, const Regularizer& reg);

/// Multiplicative update M_lk <- M_lk (YA')_lk / (MAA')_lk. A small guard in
/// the denominator prevents division by zero; Y = MA is a fixed point.
Matrix update_endmembers(const Matrix& y, const FactorPair& factors);

/// Multiplicative update
///   A_kn <- A_kn (M'Y)_kn / (M'MA + lambda (1 - H) o (A + xi)^(-H))_kn
/// with H_kn = h_n. The penalty term specializes to lambda for L1 and to
/// (lambda/2)(A + xi)^(-1/2) for LHalf.
Matrix update_abundances(const Matrix& y, const FactorPair& factors, const Regularizer& reg);

/// Removes the diagonal scale ambiguity: each row of A is normalized to
/// unit l1 norm and the matching column of M absorbs the sum, leaving the
/// product MA unchanged. Throws DegenerateRow if a row sum is zero.
FactorPair rescale_factors(FactorPair factors);

/// Strictly positive starting factors (multiplicative updates cannot leave
/// an exact zero). Random draws uniform(0.1, 1); DataPixels copies k
/// distinct pixel spectra (plus a 1e-3 floor) into the endmember columns.
/// Deterministic for a fixed seed.
FactorPair initialize_factors(const HyperCube& cube, Index k, std::uint64_t seed,
                              InitScheme scheme = InitScheme::Random);

/// Full solver loop: update A, update M, rescale, until the relative
/// decrement of the objective falls below config.rel_tol or
/// config.max_iters is reached.
std::pair<FactorPair, RunTrace> run(const HyperCube& cube, Index k, const SolverConfig& config);

}  // namespace hypermix
