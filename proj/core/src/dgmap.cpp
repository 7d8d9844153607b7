#include "hypermix/dgmap.hpp"

#include <cmath>

namespace hypermix {

double dot_similarity(const Vector& yi, const Vector& yj) {
    if (yi.size() != yj.size()) {
        throw ShapeMismatch("spectra of length " + std::to_string(yi.size()) + " and " +
                            std::to_string(yj.size()));
    }
    const double ni = yi.norm();
    const double nj = yj.norm();
    if (ni == 0.0 || nj == 0.0) throw ZeroNorm("dot similarity of a zero spectrum");
    return yi.dot(yj) / (ni * nj);
}

double heat_similarity(const Vector& yi, const Vector& yj, double sigma) {
    if (sigma <= 0.0) {
        throw InvalidBandwidth("heat-kernel bandwidth must be positive, got " +
                               std::to_string(sigma));
    }
    if (yi.size() != yj.size()) {
        throw ShapeMismatch("spectra of length " + std::to_string(yi.size()) + " and " +
                            std::to_string(yj.size()));
    }
    return std::exp(-(yj - yi).squaredNorm() / sigma);
}

DgMap initial_dgmap(const HyperCube& cube, double sigma, SimilarityMeasure measure) {
    validate_cube(cube);
    if (measure == SimilarityMeasure::Heat && sigma <= 0.0) {
        throw InvalidBandwidth("heat-kernel bandwidth must be positive, got " +
                               std::to_string(sigma));
    }
    const int w = cube.width;
    const int h = cube.height;
    DgMap map;
    map.raw = Vector::Zero(cube.pixels());

    static constexpr int kOffsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const Index n = grid_to_index(r, c, w);
            double sum = 0.0;
            for (const auto& off : kOffsets) {
                const int rr = r + off[0];
                const int cc = c + off[1];
                if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                const Index m = grid_to_index(rr, cc, w);
                sum += measure == SimilarityMeasure::Heat
                           ? heat_similarity(cube.data.col(n), cube.data.col(m), sigma)
                           : dot_similarity(cube.data.col(n), cube.data.col(m));
            }
            map.raw[n] = sum;
        }
    }
    return map;
}

DgMap rescale(const DgMap& map, double beta) {
    if (beta <= 0.0) {
        throw OutOfRange("rescale guard beta must be positive, got " + std::to_string(beta));
    }
    if (map.raw.size() == 0) throw EmptyInput("rescale of an empty raw map");
    const double lo = map.raw.minCoeff();
    const double hi = map.raw.maxCoeff();
    DgMap out;
    out.raw = map.raw;
    out.scaled = (map.raw.array() - lo) / (hi - lo + beta);
    return out;
}

DgMap constant_dgmap(Index n, double value) {
    if (value < 0.0 || value >= 1.0) {
        throw OutOfRange("constant guidance value must lie in [0, 1), got " +
                         std::to_string(value));
    }
    if (n < 1) throw EmptyInput("constant map of length " + std::to_string(n));
    DgMap out;
    out.raw = Vector::Constant(n, value);
    out.scaled = Vector::Constant(n, value);
    return out;
}

}  // namespace hypermix
