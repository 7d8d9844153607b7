#include "hypermix/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace hypermix {

double sad(const Vector& m, const Vector& m_hat) {
    if (m.size() != m_hat.size()) {
        throw ShapeMismatch("spectra of length " + std::to_string(m.size()) + " and " +
                            std::to_string(m_hat.size()));
    }
    const double nm = m.norm();
    const double nh = m_hat.norm();
    if (nm == 0.0 || nh == 0.0) throw ZeroNorm("spectral angle of a zero spectrum");
    const double cosine = std::clamp(m.dot(m_hat) / (nm * nh), -1.0, 1.0);
    return std::acos(cosine);
}

double rmse(const Vector& z, const Vector& z_hat) {
    if (z.size() != z_hat.size()) {
        throw ShapeMismatch("abundance rows of length " + std::to_string(z.size()) + " and " +
                            std::to_string(z_hat.size()));
    }
    if (z.size() == 0) throw EmptyInput("rmse of empty rows");
    return std::sqrt((z - z_hat).squaredNorm() / static_cast<double>(z.size()));
}

std::vector<int> match_endmembers(const Matrix& m_hat, const Matrix& m_true) {
    if (m_hat.rows() != m_true.rows() || m_hat.cols() != m_true.cols()) {
        throw ShapeMismatch("endmember matrices of shape " + std::to_string(m_hat.rows()) +
                            "x" + std::to_string(m_hat.cols()) + " and " +
                            std::to_string(m_true.rows()) + "x" +
                            std::to_string(m_true.cols()));
    }
    const int k = static_cast<int>(m_hat.cols());
    if (k > 20) {
        throw OutOfRange("exact assignment supports up to 20 endmembers, got " +
                         std::to_string(k));
    }

    Matrix cost(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cost(i, j) = sad(m_hat.col(i), m_true.col(j));

    // best[mask] = least total cost of assigning estimated columns
    // popcount(mask)..k-1 to the truth columns outside mask
    const std::size_t full = std::size_t{1} << k;
    std::vector<double> best(full, 0.0);
    for (std::size_t mask = full - 1; mask + 1 > 0; --mask) {
        const int i = k - std::popcount(mask);
        if (i >= k) continue;  // mask == full set
        double least = std::numeric_limits<double>::infinity();
        for (int j = 0; j < k; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            least = std::min(least, cost(i, j) + best[mask | (std::size_t{1} << j)]);
        }
        best[mask] = least;
        if (mask == 0) break;
    }

    std::vector<int> matching(k);
    std::size_t mask = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            if (cost(i, j) + best[mask | (std::size_t{1} << j)] == best[mask]) {
                matching[i] = j;
                mask |= std::size_t{1} << j;
                break;
            }
        }
    }
    return matching;
}

Vector hoyer_sparsity_map(const Matrix& abundances) {
    const Index k = abundances.rows();
    if (k < 2) {
        throw BadK("Hoyer sparsity needs at least 2 endmembers, got " + std::to_string(k));
    }
    const double root_k = std::sqrt(static_cast<double>(k));
    Vector map(abundances.cols());
    for (Index n = 0; n < abundances.cols(); ++n) {
        const double l2 = abundances.col(n).norm();
        if (l2 == 0.0) throw ZeroColumn(n);
        const double l1 = abundances.col(n).cwiseAbs().sum();
        map[n] = (root_k - l1 / l2) / (root_k - 1.0);
    }
    return map;
}

EvalReport evaluate(const FactorPair& estimated, const FactorPair& truth) {
    if (estimated.endmembers.rows() != truth.endmembers.rows() ||
        estimated.endmembers.cols() != truth.endmembers.cols() ||
        estimated.abundances.rows() != truth.abundances.rows() ||
        estimated.abundances.cols() != truth.abundances.cols()) {
        throw ShapeMismatch("estimated and true factor shapes differ");
    }
    EvalReport report;
    report.matching = match_endmembers(estimated.endmembers, truth.endmembers);
    const int k = static_cast<int>(report.matching.size());
    report.sad_per_endmember.resize(k);
    report.rmse_per_abundance.resize(k);
    for (int i = 0; i < k; ++i) {
        const int j = report.matching[i];
        report.sad_per_endmember[i] = sad(estimated.endmembers.col(i), truth.endmembers.col(j));
        report.rmse_per_abundance[i] =
            rmse(estimated.abundances.row(i).transpose(), truth.abundances.row(j).transpose());
    }
    const auto mean = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
    };
    report.mean_sad = mean(report.sad_per_endmember);
    report.mean_rmse = mean(report.rmse_per_abundance);
    return report;
}

double pearson_correlation(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) {
        throw ShapeMismatch("samples of length " + std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
    }
    if (x.size() < 2) throw EmptyInput("correlation needs at least two samples");
    const Vector xc = x.array() - x.mean();
    const Vector yc = y.array() - y.mean();
    const double denom = std::sqrt(xc.squaredNorm() * yc.squaredNorm());
    if (denom == 0.0) throw ZeroNorm("correlation of a constant sample");
    return xc.dot(yc) / denom;
}

}  // namespace hypermix
