#pragma once

#include "renyi/common.hpp"

namespace renyi::ops {

// Dense data-parallel kernels behind the estimators. Every kernel has a
// serial reference twin that performs the same per-element arithmetic in the
// same order, so parallel and serial results agree bitwise; the benchmark
// tool compares their throughput.

/// Gaussian Gram matrix K_ij = exp(-||x_i - x_j||^2 / (2 sigma^2)).
/// Distances use the expanded form with cached row norms; tiny negative
/// squared distances are clamped to zero before exponentiation.
Matrix gaussian_gram(const Matrix& samples, double sigma);
Matrix gaussian_gram_serial(const Matrix& samples, double sigma);

/// Polynomial Gram matrix K_ij = (x_i . x_j + offset)^degree.
Matrix polynomial_gram(const Matrix& samples, int degree, double offset);
Matrix polynomial_gram_serial(const Matrix& samples, int degree, double offset);

/// y = A x for square dense A.
Vector matvec(const Matrix& a, const Vector& x);
Vector matvec_serial(const Matrix& a, const Vector& x);

/// Y = A X, column-blocked so the arithmetic per column matches the serial
/// twin exactly regardless of thread count.
Matrix matmul_panel(const Matrix& a, const Matrix& x);
Matrix matmul_panel_serial(const Matrix& a, const Matrix& x);

/// C = scale * (A o B) elementwise.
Matrix hadamard_scaled(const Matrix& a, const Matrix& b, double scale);
Matrix hadamard_scaled_serial(const Matrix& a, const Matrix& b, double scale);

} // namespace renyi::ops
