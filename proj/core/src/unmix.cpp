#include "hypermix/unmix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypermix/rng.hpp"

namespace hypermix {

namespace {
// guard added to every multiplicative-update denominator
constexpr double kDenomGuard = 1e-12;

void check_problem_shapes(const Matrix& y, const FactorPair& factors) {
    if (factors.endmembers.rows() != y.rows() || factors.abundances.cols() != y.cols() ||
        factors.endmembers.cols() != factors.abundances.rows()) {
        throw ShapeMismatch("factor shapes (" + std::to_string(factors.endmembers.rows()) +
                            "x" + std::to_string(factors.endmembers.cols()) + ") * (" +
                            std::to_string(factors.abundances.rows()) + "x" +
                            std::to_string(factors.abundances.cols()) +
                            ") incompatible with data " + std::to_string(y.rows()) + "x" +
                            std::to_string(y.cols()));
    }
}
}  // namespace

Regularizer Regularizer::none() { return {}; }

Regularizer Regularizer::l1(double lambda) {
    Regularizer reg;
    reg.kind = RegKind::L1;
    reg.lambda = lambda;
    return reg;
}

Regularizer Regularizer::l_half(double lambda, double xi) {
    Regularizer reg;
    reg.kind = RegKind::LHalf;
    reg.lambda = lambda;
    reg.xi = xi;
    return reg;
}

Regularizer Regularizer::data_guided(Vector scaled_map, double lambda, double xi) {
    Regularizer reg;
    reg.kind = RegKind::DataGuided;
    reg.map = std::move(scaled_map);
    reg.lambda = lambda;
    reg.xi = xi;
    return reg;
}

void Regularizer::validate(Index n) const {
    if (lambda < 0.0) throw OutOfRange("lambda must be nonnegative");
    if (xi < 0.0) throw OutOfRange("xi must be nonnegative");
    if (kind == RegKind::DataGuided) {
        if (map.size() != n) {
            throw ShapeMismatch("guidance map length " + std::to_string(map.size()) +
                                " does not match pixel count " + std::to_string(n));
        }
        for (Index i = 0; i < n; ++i) {
            if (!(map[i] >= 0.0 && map[i] < 1.0)) {
                throw OutOfRange("guidance value " + std::to_string(map[i]) + " at pixel " +
                                 std::to_string(i) + " is outside [0, 1)");
            }
        }
    }
}

double objective(const Matrix& y, const FactorPair& factors, const Regularizer& reg) {
    check_problem_shapes(y, factors);
    const Matrix& a = factors.abundances;
    double value = 0.5 * (y - factors.endmembers * a).squaredNorm();
    if (reg.lambda == 0.0) return value;
    switch (reg.kind) {
        case RegKind::None:
            break;
        case RegKind::L1:
            value += reg.lambda * a.array().abs().sum();
            break;
        case RegKind::LHalf:
            value += reg.lambda * (a.array() + reg.xi).sqrt().sum();
            break;
        case RegKind::DataGuided: {
            reg.validate(y.cols());
            double penalty = 0.0;
            for (Index n = 0; n < a.cols(); ++n) {
                penalty += (a.col(n).array() + reg.xi).pow(1.0 - reg.map[n]).sum();
            }
            value += reg.lambda * penalty;
            break;
        }
    }
    return value;
}

Matrix update_endmembers(const Matrix& y, const FactorPair& factors) {
    check_problem_shapes(y, factors);
    const Matrix& a = factors.abundances;
    const Matrix numer = y * a.transpose();                                   // L x K
    const Matrix denom = factors.endmembers * (a * a.transpose());            // L x K
    return factors.endmembers.array() * numer.array() / (denom.array() + kDenomGuard);
}

Matrix update_abundances(const Matrix& y, const FactorPair& factors, const Regularizer& reg) {
    check_problem_shapes(y, factors);
    reg.validate(y.cols());
    const Matrix& m = factors.endmembers;
    const Matrix& a = factors.abundances;
    const Matrix numer = m.transpose() * y;                   // K x N
    Matrix denom = (m.transpose() * m) * a;                   // K x N
    if (reg.lambda > 0.0) {
        switch (reg.kind) {
            case RegKind::None:
                break;
            case RegKind::L1:
                denom.array() += reg.lambda;
                break;
            case RegKind::LHalf:
                denom.array() += (reg.lambda / 2.0) * (a.array() + reg.xi).pow(-0.5);
                break;
            case RegKind::DataGuided:
                for (Index n = 0; n < a.cols(); ++n) {
                    const double h = reg.map[n];
                    denom.col(n).array() +=
                        reg.lambda * (1.0 - h) * (a.col(n).array() + reg.xi).pow(-h);
                }
                break;
        }
    }
    return a.array() * numer.array() / (denom.array() + kDenomGuard);
}

FactorPair rescale_factors(FactorPair factors) {
    const Vector sums = factors.abundances.rowwise().sum();
    for (Index k = 0; k < sums.size(); ++k) {
        if (sums[k] <= 0.0) throw DegenerateRow(static_cast<int>(k));
    }
    for (Index k = 0; k < sums.size(); ++k) {
        factors.endmembers.col(k) *= sums[k];
        factors.abundances.row(k) /= sums[k];
    }
    return factors;
}

FactorPair initialize_factors(const HyperCube& cube, Index k, std::uint64_t seed,
                              InitScheme scheme) {
    const Index l = cube.channels();
    const Index n = cube.pixels();
    if (k < 1 || k > std::min(l, n)) {
        throw BadK("k = " + std::to_string(k) + " outside [1, min(L, N)] = [1, " +
                   std::to_string(std::min(l, n)) + "]");
    }
    Rng rng(seed);
    FactorPair factors;
    factors.endmembers.resize(l, k);
    factors.abundances.resize(k, n);

    if (scheme == InitScheme::Random) {
        for (Index j = 0; j < k; ++j)
            for (Index i = 0; i < l; ++i) factors.endmembers(i, j) = rng.uniform(0.1, 1.0);
    } else {
        // sample k distinct pixel indices (partial Fisher-Yates)
        std::vector<Index> pool(n);
        std::iota(pool.begin(), pool.end(), Index{0});
        for (Index j = 0; j < k; ++j) {
            const Index pick = j + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - j)));
            std::swap(pool[j], pool[pick]);
            factors.endmembers.col(j) = cube.data.col(pool[j]).array() + 1e-3;
        }
    }
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < k; ++i) factors.abundances(i, j) = rng.uniform(0.1, 1.0);
    return factors;
}

std::pair<FactorPair, RunTrace> run(const HyperCube& cube, Index k, const SolverConfig& config) {
    validate_cube(cube);

    Regularizer reg;
    switch (config.regularizer) {
        case RegKind::None:
            reg = Regularizer::none();
            break;
        case RegKind::L1:
            reg = Regularizer::l1(config.lambda);
            break;
        case RegKind::LHalf:
            reg = Regularizer::l_half(config.lambda, config.xi);
            break;
        case RegKind::DataGuided:
            reg = Regularizer::data_guided(config.guide, config.lambda, config.xi);
            break;
    }
    reg.validate(cube.pixels());

    FactorPair factors = initialize_factors(cube, k, config.seed, config.init);

    RunTrace trace;
    trace.objective.reserve(config.max_iters + 1);
    trace.relative_decrements.reserve(config.max_iters);
    trace.objective.push_back(objective(cube.data, factors, reg));

    for (int t = 0; t < config.max_iters; ++t) {
        factors.abundances = update_abundances(cube.data, factors, reg);
        factors.endmembers = update_endmembers(cube.data, factors);
        factors = rescale_factors(std::move(factors));

        const double prev = trace.objective.back();
        const double cur = objective(cube.data, factors, reg);
        trace.objective.push_back(cur);
        trace.relative_decrements.push_back(prev > 0.0 ? (prev - cur) / prev : 0.0);
        trace.iterations_run = t + 1;

        if (config.rel_tol > 0.0 && trace.relative_decrements.back() < config.rel_tol) {
            trace.stop_reason = StopReason::RelTol;
            return {std::move(factors), std::move(trace)};
        }
    }
    trace.stop_reason = StopReason::MaxIters;
    return {std::move(factors), std::move(trace)};
}

}  // namespace hypermix
