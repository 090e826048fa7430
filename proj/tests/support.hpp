#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <vector>

#include "renyi/common.hpp"
#include "renyi/kernel.hpp"
#include "renyi/rng.hpp"
#include "renyi/simulate.hpp"

namespace testsup {

using renyi::Matrix;
using renyi::Vector;

/// Haar-ish random orthogonal matrix via QR of a Gaussian.
inline Matrix random_rotation(Eigen::Index n, renyi::RandomStream& stream) {
    Matrix g(n, n);
    stream.fill_gaussian(g);
    Eigen::HouseholderQR<Matrix> qr(g);
    return qr.householderQ() * Matrix::Identity(n, n);
}

/// Symmetric matrix with the given spectrum in a random basis.
inline Matrix spd_from_spectrum(const Vector& eigs, renyi::RandomStream& stream) {
    const Matrix q = random_rotation(eigs.size(), stream);
    return q * eigs.asDiagonal() * q.transpose();
}

/// Unit-trace spectrum with min/max ratio bounded below by `floor`
/// (kappa <= 1/floor), drawn uniformly then normalized.
inline Vector unit_trace_spectrum(Eigen::Index n, renyi::RandomStream& stream,
                                  double floor = 0.2) {
    Vector eigs(n);
    for (Eigen::Index i = 0; i < n; ++i)
        eigs[i] = floor + (1.0 - floor) * stream.next_uniform();
    eigs /= eigs.sum();
    return eigs;
}

/// Random SPD unit-trace fixture with controlled condition number.
inline Matrix random_unit_trace_spd(Eigen::Index n, renyi::RandomStream& stream,
                                    double floor = 0.2) {
    return spd_from_spectrum(unit_trace_spectrum(n, stream, floor), stream);
}

/// Rank-r PSD unit-trace matrix.
inline Matrix random_low_rank_psd(Eigen::Index n, int r, renyi::RandomStream& stream) {
    Matrix w(n, r);
    stream.fill_gaussian(w);
    Matrix a = w * w.transpose();
    return a / a.trace();
}

/// Eigendecomposition oracle: sorted eigenvalues.
inline Vector oracle_eigenvalues(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

inline double oracle_trace_power(const Matrix& a, double alpha) {
    const Vector eigs = oracle_eigenvalues(a);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        const double lam = std::clamp(eigs[i], 0.0, 1.0);
        if (lam > 0.0) sum += std::pow(lam, alpha);
    }
    return sum;
}

/// Analytic Chebyshev series coefficients of lambda^alpha on [0, v],
/// c_0 = 2 v^alpha Gamma(alpha+1/2) / (sqrt(pi) Gamma(alpha+1)) and
/// c_{k+1} = c_k (alpha - k) / (alpha + k + 1).
inline Vector chebyshev_closed_form_u0(double alpha, int m, double v) {
    Vector c(m + 1);
    c[0] = 2.0 * std::pow(v, alpha) * std::tgamma(alpha + 0.5) /
           (std::sqrt(std::numbers::pi) * std::tgamma(alpha + 1.0));
    for (int k = 0; k < m; ++k) c[k + 1] = c[k] * (alpha - k) / (alpha + k + 1.0);
    return c;
}

/// Chebyshev series coefficients by converged node summation: the same
/// midpoint quadrature as the production recipe but with n_nodes >> m and
/// Kahan compensation, so the aliasing error drops below 1e-10 even at the
/// u = 0 branch point.
inline Vector chebyshev_series_by_quadrature(double alpha, int m, double u, double v,
                                             long n_nodes) {
    std::vector<long double> sum(m + 1, 0.0L), comp(m + 1, 0.0L);
    auto add = [&](int k, long double term) {
        const long double y = term - comp[k];
        const long double t = sum[k] + y;
        comp[k] = (t - sum[k]) - y;
        sum[k] = t;
    };
    const long double pi_l = 3.14159265358979323846264338327950288L;
    for (long i = 0; i < n_nodes; ++i) {
        const long double theta = pi_l * (i + 0.5L) / n_nodes;
        const long double x = std::cos(theta);
        const long double fx =
            std::pow(static_cast<long double>(u) + 0.5L * (v - u) * (x + 1.0L),
                     static_cast<long double>(alpha));
        long double t_prev = 1.0L, t_cur = x;
        add(0, fx);
        if (m >= 1) add(1, fx * x);
        for (int k = 2; k <= m; ++k) {
            const long double t_next = 2.0L * x * t_cur - t_prev;
            add(k, fx * t_next);
            t_prev = t_cur;
            t_cur = t_next;
        }
    }
    Vector c(m + 1);
    for (int k = 0; k <= m; ++k) c[k] = static_cast<double>(sum[k] * 2.0L / n_nodes);
    return c;
}

/// Gaussian-mixture normalized kernel (the standard simulation fixture).
inline renyi::NormalizedKernel mixture_kernel(int n, int d, double sigma, std::uint64_t seed) {
    return renyi::build_kernel(renyi::mixture_samples(n, d, seed),
                               renyi::GaussianKernel{sigma});
}

} // namespace testsup
