#pragma once

#include <optional>
#include <string>

#include "renyi/hutchpp.hpp"
#include "renyi/poly.hpp"
#include "renyi/spectrum.hpp"

namespace renyi {

enum class Method { exact, int_power, taylor, chebyshev, auto_select };

std::string method_name(Method m);

/// How an entropy estimate should be produced. s == 0 or m == 0 derive the
/// missing parameter from (epsilon, delta) via select_params.
struct EstimatorParams {
    double alpha = 2.0;
    Method method = Method::auto_select;
    int s = 0;
    int m = 0;
    double epsilon = 1e-2;
    double delta = 1e-2;
    std::uint64_t seed = 0;
    PowerOptions power{};
    /// Precomputed spectrum bounds; set to skip the power iterations (e.g.
    /// across repeated trials on the same matrix).
    std::optional<SpectrumBounds> bounds{};
};

struct EntropyEstimate {
    double entropy = 0.0;        // natural-log units
    double trace_estimate = 0.0; // estimated tr(A^alpha) > 0
    Method method_used = Method::exact;
    int s_used = 0;
    int m_used = 0;
    std::optional<SpectrumBounds> bounds_used;
    double elapsed = 0.0; // seconds
    bool deterministic = false;
};

/// Extremal value of tr(A^alpha) when the spectrum sits on {u, v}; together
/// with n^(1-alpha) it sandwiches the true information potential.
struct MuBound {
    double u, v, alpha;
    Eigen::Index n;
    double mu;
    double lower; // min(mu, n^(1-alpha))
    double upper; // max(mu, n^(1-alpha))
};

/// S_alpha = log(trace)/(1 - alpha); rejects non-positive trace estimates.
double entropy_from_trace(double trace, double alpha);

/// O(n^3) eigendecomposition reference; eigenvalues clamped to [0, 1].
EntropyEstimate entropy_exact(const Matrix& a, double alpha);

/// Integer alpha >= 2 via Hutch++ on A^alpha.
EntropyEstimate entropy_int(const Matrix& a, int alpha, int s, std::uint64_t seed);

/// Non-integer alpha via the degree-m Taylor expansion around v.
EntropyEstimate entropy_taylor(const Matrix& a, double alpha, int s, int m, double v,
                               std::uint64_t seed);

/// Non-integer alpha via the degree-m Chebyshev expansion on [u, v]
/// (safeguard applied to v internally).
EntropyEstimate entropy_chebyshev(const Matrix& a, double alpha, int s, int m, double u, double v,
                                  std::uint64_t seed);

struct SelectedParams {
    int s = 0;
    int m = 0; // 0 for methods without a polynomial degree
};

/// Parameter choices from the estimators' error analysis, with every
/// hidden constant set to 1:
///   s = ceil((1/(eps|a-1|)) sqrt(ln(1/delta)) + ln(1/delta)), up to mult of 4
///   Taylor    m = ceil(kappa ln(1/(eps|a-1|)))                    (u > 0)
///             m = ceil((vn)^(1/min(1,a)) (1/(eps|a-1|))^(1/a))    (u = 0)
///   Chebyshev m = ceil(sqrt(kappa) ln(kappa/(eps|a-1|)))          (u > 0)
///             m = ceil((vn)^(1/(2min(1,a))) (1/(eps|a-1|))^(1/(2a)))
/// These are heuristics; pass explicit (s, m) for precise control.
SelectedParams select_params(double alpha, double epsilon, double delta,
                             const SpectrumBounds& bounds, Eigen::Index n, Method method);

MuBound mu_bound(double u, double v, double alpha, Eigen::Index n);

/// Full pipeline: resolves auto method routing, spectrum bounds and (s, m),
/// then runs the chosen estimator. Pure given the seed.
EntropyEstimate estimate(const Matrix& a, const EstimatorParams& params);

} // namespace renyi
