#include "hypermix/laplacian.hpp"

#include <Eigen/Dense>
#include <vector>

namespace hypermix {

SparseLaplacian build_matting_laplacian(const HyperCube& cube, double epsilon, int window) {
    validate_cube(cube);
    if (window < 3 || window % 2 == 0) {
        throw OutOfRange("window side length must be odd and >= 3, got " +
                         std::to_string(window));
    }
    if (epsilon <= 0.0) {
        throw OutOfRange("window regularizer epsilon must be positive, got " +
                         std::to_string(epsilon));
    }
    if (cube.width < window || cube.height < window) {
        throw ImageTooSmall("no full " + std::to_string(window) + "x" +
                            std::to_string(window) + " window fits in a " +
                            std::to_string(cube.width) + "x" + std::to_string(cube.height) +
                            " image");
    }

    const int half = window / 2;
    const int m = window * window;
    const Index channels = cube.channels();

    const Matrix centering =
        Matrix::Identity(m, m) - Matrix::Constant(m, m, 1.0 / static_cast<double>(m));

    std::vector<Eigen::Triplet<double>> triplets;
    const Index windows =
        static_cast<Index>(cube.height - 2 * half) * (cube.width - 2 * half);
    triplets.reserve(windows * m * m);

    std::vector<Index> idx(m);
    Matrix window_pixels(channels, m);
    Matrix projector(m, m);   // Yc'(Yc Yc' + eps I)^-1 Yc
    Matrix block(m, m);       // G'G for one window

    for (int cr = half; cr < cube.height - half; ++cr) {
        for (int cc = half; cc < cube.width - half; ++cc) {
            int j = 0;
            for (int dr = -half; dr <= half; ++dr) {
                for (int dc = -half; dc <= half; ++dc) {
                    idx[j] = grid_to_index(cr + dr, cc + dc, cube.width);
                    window_pixels.col(j) = cube.data.col(idx[j]);
                    ++j;
                }
            }
            const Matrix centered = window_pixels * centering;  // L x m

            if (channels <= m) {
                // direct route: (Yc Yc' + eps I) is L x L
                Matrix cov = centered * centered.transpose();
                cov.diagonal().array() += epsilon;
                projector.noalias() =
                    centered.transpose() * cov.ldlt().solve(centered);
            } else {
                // push-through route: Yc'(Yc Yc' + eps I)^-1 Yc == (B + eps I)^-1 B
                const Matrix gram = centered.transpose() * centered;  // m x m
                Matrix shifted = gram;
                shifted.diagonal().array() += epsilon;
                projector = shifted.ldlt().solve(gram);
            }

            const Matrix g = centering - projector;
            // G is symmetric up to roundoff; G'G is assembled from its lower
            // triangle so the accumulated matrix is symmetric exactly.
            block.setZero();
            block.selfadjointView<Eigen::Lower>().rankUpdate(g.transpose());
            block.triangularView<Eigen::StrictlyUpper>() = block.transpose();

            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    triplets.emplace_back(static_cast<int>(idx[a]), static_cast<int>(idx[b]),
                                          block(a, b));
                }
            }
        }
    }

    SparseLaplacian lap;
    lap.matrix.resize(cube.pixels(), cube.pixels());
    lap.matrix.setFromTriplets(triplets.begin(), triplets.end());
    lap.matrix.makeCompressed();
    return lap;
}

}  // namespace hypermix
