#include "hypermix/cg.hpp"

#include <cmath>

namespace hypermix {

CgResult pcg_solve(const Eigen::SparseMatrix<double>& a, const Vector& b, double tol,
                   int max_iters) {
    if (a.rows() != a.cols() || a.rows() != b.size()) {
        throw ShapeMismatch("system is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " but rhs has length " +
                            std::to_string(b.size()));
    }
    const double b_norm = b.norm();
    CgResult result;
    result.x = Vector::Zero(b.size());
    if (b_norm == 0.0) return result;

    const Vector inv_diag = a.diagonal().cwiseInverse();

    Vector r = b;
    Vector z = inv_diag.cwiseProduct(r);
    Vector p = z;
    Vector ap(b.size());
    double rz = r.dot(z);
    const double target = tol * b_norm;

    for (int it = 0; it < max_iters; ++it) {
        ap.noalias() = a * p;
        const double alpha = rz / p.dot(ap);
        result.x += alpha * p;
        r -= alpha * ap;
        result.iterations = it + 1;
        if (r.norm() <= target) break;
        z = inv_diag.cwiseProduct(r);
        const double rz_next = r.dot(z);
        p = z + (rz_next / rz) * p;
        rz = rz_next;
    }

    // the recurrence residual drifts; report and check the true one
    result.residual_norm = (b - a * result.x).norm();
    if (result.residual_norm > target) {
        throw NoConvergence(result.iterations, result.residual_norm);
    }
    return result;
}

DgMap fine_tune(const SparseLaplacian& laplacian, const DgMap& initial, double alpha,
                double cg_tol, int cg_max_iters) {
    if (alpha <= 0.0) {
        throw OutOfRange("fine-tune strength alpha must be positive, got " +
                         std::to_string(alpha));
    }
    if (initial.raw.size() != laplacian.n()) {
        throw ShapeMismatch("laplacian dimension " + std::to_string(laplacian.n()) +
                            " does not match map length " +
                            std::to_string(initial.raw.size()));
    }
    const Index n = laplacian.n();
    Eigen::SparseMatrix<double> identity(n, n);
    identity.setIdentity();
    Eigen::SparseMatrix<double> system = laplacian.matrix + alpha * identity;

    if (cg_max_iters <= 0) cg_max_iters = static_cast<int>(10 * n);
    const CgResult solved = pcg_solve(system, alpha * initial.raw, cg_tol, cg_max_iters);

    DgMap out;
    out.raw = solved.x;
    return out;
}

}  // namespace hypermix
