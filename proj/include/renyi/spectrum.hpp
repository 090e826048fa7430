#pragma once

#include <cstdint>
#include <limits>

#include "renyi/common.hpp"

namespace renyi {

/// Extreme-eigenvalue estimates of a normalized kernel. After clamping,
/// 0 <= u <= 1/n <= v <= 1 and u <= v; kappa is +inf when u = 0.
struct SpectrumBounds {
    double u = 0.0;
    double v = 1.0;
    double kappa = std::numeric_limits<double>::infinity();
    int iterations_used = 0;
    bool v_converged = true;
    bool u_converged = true;
    bool rank_deficient = false;
};

struct PowerOptions {
    int max_iters = 100;
    double tol = 1e-6;
    std::uint64_t seed = 0;
    /// u estimates below max(rank_floor, v*tol*100) are reported as exactly
    /// 0 with the rank_deficient flag; the second term is the resolution of
    /// the shifted power iteration under the relative-change stop rule.
    double rank_floor = 1e-12;
};

/// Raw power iteration on a symmetric matrix: Rayleigh quotient of the
/// iterates, stopping on relative change <= tol. The quotient is monotone
/// non-decreasing in the iteration count for PSD input.
struct PowerResult {
    double rayleigh = 0.0;
    int iterations = 0;
    bool converged = false;
};
PowerResult power_method(const Matrix& a, const PowerOptions& opts);

/// Largest-eigenvalue estimate, inflated by (1+tol) and clamped to [1/n, 1].
/// The inflation is a safety margin for the polynomial expansion domain, not
/// a guaranteed upper bound.
double estimate_v(const Matrix& a, const PowerOptions& opts = {});

/// Smallest-eigenvalue estimate via power iteration on v*I - A, deflated by
/// (1-tol), floored at 0 (flagging rank deficiency) and capped at 1/n.
double estimate_u(const Matrix& a, double v, const PowerOptions& opts = {},
                  bool* rank_deficient = nullptr);

/// Both bounds plus the condition number.
SpectrumBounds estimate_bounds(const Matrix& a, const PowerOptions& opts = {});

} // namespace renyi
