#include "hypermix/types.hpp"

#include <cmath>

namespace hypermix {

void validate_cube(const HyperCube& cube) {
    if (cube.channels() < 1 || cube.pixels() < 1) {
        throw ShapeMismatch("cube must have at least one channel and one pixel");
    }
    if (cube.width <= 0 || cube.height <= 0 ||
        static_cast<Index>(cube.width) * cube.height != cube.pixels()) {
        throw ShapeMismatch("width*height (" + std::to_string(cube.width) + "x" +
                            std::to_string(cube.height) + ") does not match pixel count " +
                            std::to_string(cube.pixels()));
    }
    const double* p = cube.data.data();
    const Index size = cube.data.size();
    for (Index i = 0; i < size; ++i) {
        if (!std::isfinite(p[i])) throw NonFiniteValue(i);
        if (p[i] < 0.0) throw NegativeValue(i);
    }
}

namespace {

void check_entries(const Matrix& m, const char* what) {
    const double* p = m.data();
    for (Index i = 0; i < m.size(); ++i) {
        if (!std::isfinite(p[i])) throw NonFiniteValue(i);
        if (p[i] < 0.0) throw NegativeValue(i);
    }
    (void)what;
}

}  // namespace

std::vector<std::string> validate_factors(const FactorPair& factors) {
    check_entries(factors.endmembers, "endmembers");
    check_entries(factors.abundances, "abundances");
    if (factors.endmembers.cols() != factors.abundances.rows()) {
        throw ShapeMismatch("endmember count K differs between M (" +
                            std::to_string(factors.endmembers.cols()) + ") and A (" +
                            std::to_string(factors.abundances.rows()) + ")");
    }
    std::vector<std::string> warnings;
    const Index k = factors.endmembers.cols();
    const Index l = factors.endmembers.rows();
    const Index n = factors.abundances.cols();
    if (k > std::min(l, n)) {
        warnings.push_back("K = " + std::to_string(k) + " exceeds min(L, N) = " +
                           std::to_string(std::min(l, n)) +
                           "; the factorization is over-complete");
    }
    return warnings;
}

}  // namespace hypermix
