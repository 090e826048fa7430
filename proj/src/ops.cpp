#include "renyi/ops.hpp"

#include <cmath>

namespace renyi::ops {

namespace {

// Upper-triangle entry work for one row of the Gaussian Gram matrix.
inline void gaussian_row(const Matrix& x, const Vector& sq_norms, double inv_two_sigma2,
                         Eigen::Index i, Matrix& k) {
    k(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < x.rows(); ++j) {
        double d2 = sq_norms[i] + sq_norms[j] - 2.0 * x.row(i).dot(x.row(j));
        if (d2 < 0.0) d2 = 0.0;
        const double v = std::exp(-d2 * inv_two_sigma2);
        k(i, j) = v;
        k(j, i) = v;
    }
}

inline void polynomial_row(const Matrix& x, int degree, double offset, Eigen::Index i, Matrix& k) {
    for (Eigen::Index j = i; j < x.rows(); ++j) {
        const double v = std::pow(x.row(i).dot(x.row(j)) + offset, degree);
        k(i, j) = v;
        k(j, i) = v;
    }
}

constexpr Eigen::Index kPanelBlock = 8;

inline void panel_block(const Matrix& a, const Matrix& x, Eigen::Index j0, Eigen::Index j1,
                        Matrix& y) {
    y.middleCols(j0, j1 - j0).noalias() = a * x.middleCols(j0, j1 - j0);
}

} // namespace

Matrix gaussian_gram(const Matrix& samples, double sigma) {
    const Eigen::Index n = samples.rows();
    const Vector sq_norms = samples.rowwise().squaredNorm();
    const double inv_two_sigma2 = 1.0 / (2.0 * sigma * sigma);
    Matrix k(n, n);
#pragma omp parallel for schedule(dynamic, 8)
    for (Eigen::Index i = 0; i < n; ++i) gaussian_row(samples, sq_norms, inv_two_sigma2, i, k);
    return k;
}

Matrix gaussian_gram_serial(const Matrix& samples, double sigma) {
    const Eigen::Index n = samples.rows();
    const Vector sq_norms = samples.rowwise().squaredNorm();
    const double inv_two_sigma2 = 1.0 / (2.0 * sigma * sigma);
    Matrix k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) gaussian_row(samples, sq_norms, inv_two_sigma2, i, k);
    return k;
}

Matrix polynomial_gram(const Matrix& samples, int degree, double offset) {
    const Eigen::Index n = samples.rows();
    Matrix k(n, n);
#pragma omp parallel for schedule(dynamic, 8)
    for (Eigen::Index i = 0; i < n; ++i) polynomial_row(samples, degree, offset, i, k);
    return k;
}

Matrix polynomial_gram_serial(const Matrix& samples, int degree, double offset) {
    const Eigen::Index n = samples.rows();
    Matrix k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) polynomial_row(samples, degree, offset, i, k);
    return k;
}

Vector matvec(const Matrix& a, const Vector& x) {
    const Eigen::Index n = a.rows();
    Vector y(n);
    constexpr Eigen::Index block = 64;
    const Eigen::Index nblocks = (n + block - 1) / block;
#pragma omp parallel for schedule(static)
    for (Eigen::Index b = 0; b < nblocks; ++b) {
        const Eigen::Index i0 = b * block;
        const Eigen::Index len = std::min(block, n - i0);
        y.segment(i0, len).noalias() = a.middleRows(i0, len) * x;
    }
    return y;
}

Vector matvec_serial(const Matrix& a, const Vector& x) {
    const Eigen::Index n = a.rows();
    Vector y(n);
    constexpr Eigen::Index block = 64;
    for (Eigen::Index i0 = 0; i0 < n; i0 += block) {
        const Eigen::Index len = std::min(block, n - i0);
        y.segment(i0, len).noalias() = a.middleRows(i0, len) * x;
    }
    return y;
}

Matrix matmul_panel(const Matrix& a, const Matrix& x) {
    Matrix y(a.rows(), x.cols());
    const Eigen::Index nblocks = (x.cols() + kPanelBlock - 1) / kPanelBlock;
#pragma omp parallel for schedule(dynamic)
    for (Eigen::Index b = 0; b < nblocks; ++b) {
        const Eigen::Index j0 = b * kPanelBlock;
        panel_block(a, x, j0, std::min(j0 + kPanelBlock, x.cols()), y);
    }
    return y;
}

Matrix matmul_panel_serial(const Matrix& a, const Matrix& x) {
    Matrix y(a.rows(), x.cols());
    for (Eigen::Index j0 = 0; j0 < x.cols(); j0 += kPanelBlock)
        panel_block(a, x, j0, std::min(j0 + kPanelBlock, x.cols()), y);
    return y;
}

Matrix hadamard_scaled(const Matrix& a, const Matrix& b, double scale) {
    Matrix c(a.rows(), a.cols());
#pragma omp parallel for schedule(static)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        c.col(j) = scale * a.col(j).cwiseProduct(b.col(j));
    return c;
}

Matrix hadamard_scaled_serial(const Matrix& a, const Matrix& b, double scale) {
    Matrix c(a.rows(), a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        c.col(j) = scale * a.col(j).cwiseProduct(b.col(j));
    return c;
}

} // namespace renyi::ops
