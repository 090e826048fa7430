#include "renyi/entropy.hpp"

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>

#include "renyi/rng.hpp"

namespace renyi {

namespace {

constexpr double kAlphaOneTol = 1e-9;
constexpr Eigen::Index kExactSizeLimit = 20000;

void validate_alpha(double alpha) {
    if (!(alpha > 0.0)) fail(errc::invalid_argument, "alpha must be positive");
    if (std::abs(alpha - 1.0) <= kAlphaOneTol)
        fail(errc::alpha_is_one,
             "alpha within 1e-9 of 1 is rejected: the estimators degrade as 1/|alpha-1| and the "
             "Shannon limit is out of scope");
}

bool integer_alpha(double alpha, int* value = nullptr) {
    const double r = std::round(alpha);
    if (std::abs(alpha - r) <= kAlphaOneTol && r >= 2.0) {
        if (value) *value = static_cast<int>(r);
        return true;
    }
    return false;
}

void require_non_integer(double alpha, const char* which) {
    const double r = std::round(alpha);
    if (std::abs(alpha - r) <= kAlphaOneTol)
        fail(errc::invalid_argument,
             std::string(which) + " handles non-integer alpha; use the integer-power path");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int round_up_multiple_of_4(double x) {
    const long c = static_cast<long>(std::ceil(x));
    return static_cast<int>((c + 3) / 4 * 4);
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::int_power: return "int";
        case Method::taylor: return "taylor";
        case Method::chebyshev: return "chebyshev";
        case Method::auto_select: return "auto";
    }
    return "?";
}

double entropy_from_trace(double trace, double alpha) {
    validate_alpha(alpha);
    if (!(trace > 0.0))
        fail(errc::non_positive_trace,
             "trace estimate is not positive (" + std::to_string(trace) +
                 "); the query budget s is too small for this matrix");
    return std::log(trace) / (1.0 - alpha);
}

EntropyEstimate entropy_exact(const Matrix& a, double alpha) {
    validate_alpha(alpha);
    if (a.rows() != a.cols()) fail(errc::size_mismatch, "entropy_exact needs a square matrix");
    if (a.rows() > kExactSizeLimit)
        fail(errc::invalid_argument, "entropy_exact is guarded at n <= 20000");
    const auto t0 = std::chrono::steady_clock::now();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
    double trace = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        double lam = std::clamp(solver.eigenvalues()[i], 0.0, 1.0);
        if (lam > 0.0) trace += std::pow(lam, alpha);
    }
    EntropyEstimate est;
    est.trace_estimate = trace;
    est.entropy = entropy_from_trace(trace, alpha);
    est.method_used = Method::exact;
    est.deterministic = true;
    est.elapsed = seconds_since(t0);
    return est;
}

namespace {

EntropyEstimate from_hutchpp(const Matrix& a, const MatrixFunctionSpec& f, double alpha, int s,
                             std::uint64_t seed, Method method, int m_used) {
    const auto t0 = std::chrono::steady_clock::now();
    const TraceEstimate tr = hutchpp(f, a, SketchConfig{s, seed});
    EntropyEstimate est;
    est.trace_estimate = tr.value;
    est.entropy = entropy_from_trace(tr.value, alpha);
    est.method_used = method;
    est.s_used = s;
    est.m_used = m_used;
    est.deterministic = tr.exact;
    est.elapsed = seconds_since(t0);
    return est;
}

} // namespace

EntropyEstimate entropy_int(const Matrix& a, int alpha, int s, std::uint64_t seed) {
    if (alpha < 2) fail(errc::invalid_argument, "entropy_int needs integer alpha >= 2");
    return from_hutchpp(a, MatrixFunctionSpec::int_power(alpha), alpha, s, seed,
                        Method::int_power, 0);
}

EntropyEstimate entropy_taylor(const Matrix& a, double alpha, int s, int m, double v,
                               std::uint64_t seed) {
    validate_alpha(alpha);
    require_non_integer(alpha, "entropy_taylor");
    const int m_min = static_cast<int>(std::ceil(alpha)) + 1;
    if (m < m_min)
        fail(errc::invalid_argument,
             "entropy_taylor needs m >= ceil(alpha)+1 = " + std::to_string(m_min));
    return from_hutchpp(a, MatrixFunctionSpec::taylor(alpha, m, v), alpha, s, seed, Method::taylor,
                        m);
}

EntropyEstimate entropy_chebyshev(const Matrix& a, double alpha, int s, int m, double u, double v,
                                  std::uint64_t seed) {
    validate_alpha(alpha);
    require_non_integer(alpha, "entropy_chebyshev");
    return from_hutchpp(a, MatrixFunctionSpec::chebyshev(alpha, m, u, v), alpha, s, seed,
                        Method::chebyshev, m);
}

SelectedParams select_params(double alpha, double epsilon, double delta,
                             const SpectrumBounds& bounds, Eigen::Index n, Method method) {
    validate_alpha(alpha);
    if (!(epsilon > 0.0 && epsilon < 1.0)) fail(errc::invalid_argument, "epsilon must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) fail(errc::invalid_argument, "delta must be in (0,1)");

    const double gap = std::abs(alpha - 1.0);
    const double log_inv_delta = std::log(1.0 / delta);
    SelectedParams sel;
    sel.s = round_up_multiple_of_4(std::sqrt(log_inv_delta) / (epsilon * gap) + log_inv_delta);

    const double inv_eps_gap = 1.0 / (epsilon * gap);
    switch (method) {
        case Method::taylor:
            if (bounds.u > 0.0) {
                sel.m = static_cast<int>(std::ceil(bounds.kappa * std::log(inv_eps_gap)));
            } else {
                const double vn = bounds.v * static_cast<double>(n);
                sel.m = static_cast<int>(std::ceil(std::pow(vn, 1.0 / std::min(1.0, alpha)) *
                                                   std::pow(inv_eps_gap, 1.0 / alpha)));
            }
            sel.m = std::max(sel.m, static_cast<int>(std::ceil(alpha)) + 1);
            break;
        case Method::chebyshev:
            if (bounds.u > 0.0) {
                sel.m = static_cast<int>(
                    std::ceil(std::sqrt(bounds.kappa) * std::log(bounds.kappa * inv_eps_gap)));
            } else {
                const double vn = bounds.v * static_cast<double>(n);
                sel.m = static_cast<int>(std::ceil(std::pow(vn, 0.5 / std::min(1.0, alpha)) *
                                                   std::pow(inv_eps_gap, 0.5 / alpha)));
            }
            sel.m = std::max(sel.m, 1);
            break;
        default:
            sel.m = 0;
            break;
    }
    return sel;
}

MuBound mu_bound(double u, double v, double alpha, Eigen::Index n) {
    validate_alpha(alpha);
    const double inv_n = 1.0 / static_cast<double>(n);
    if (u < 0.0 || v > 1.0 || u > inv_n + 1e-12 || v < inv_n - 1e-12)
        fail(errc::invalid_argument, "mu_bound needs 0 <= u <= 1/n <= v <= 1");
    MuBound b{u, v, alpha, n, 0.0, 0.0, 0.0};
    const double flat = std::pow(static_cast<double>(n), 1.0 - alpha);
    if (v > u) {
        const double nd = static_cast<double>(n);
        const double w_v = (1.0 - u * nd) / (v - u);
        const double w_u = (v * nd - 1.0) / (v - u);
        const double u_pow = u > 0.0 ? std::pow(u, alpha) : 0.0;
        b.mu = w_v * std::pow(v, alpha) + w_u * u_pow;
    } else if (v == u && std::abs(v - inv_n) <= 1e-12) {
        b.mu = flat; // fully degenerate spectrum
    } else {
        fail(errc::degenerate_bounds, "mu_bound needs v > u (or the degenerate v = u = 1/n)");
    }
    b.lower = std::min(b.mu, flat);
    b.upper = std::max(b.mu, flat);
    return b;
}

EntropyEstimate estimate(const Matrix& a, const EstimatorParams& params) {
    validate_alpha(params.alpha);
    if (a.rows() != a.cols()) fail(errc::size_mismatch, "estimate needs a square matrix");
    const auto t0 = std::chrono::steady_clock::now();
    const Eigen::Index n = a.rows();

    int alpha_int = 0;
    const bool is_int = integer_alpha(params.alpha, &alpha_int);

    std::optional<SpectrumBounds> bounds = params.bounds;
    auto ensure_bounds = [&]() -> const SpectrumBounds& {
        if (!bounds) {
            PowerOptions opts = params.power;
            opts.seed = derive_key(params.seed, hash_name("bounds"));
            bounds = estimate_bounds(a, opts);
        }
        return *bounds;
    };

    Method method = params.method;
    if (method == Method::auto_select) {
        if (is_int) {
            method = Method::int_power;
        } else {
            // Taylor needs no u estimate and suits flat spectra; Chebyshev
            // handles large condition numbers with far fewer terms.
            const SpectrumBounds& b = ensure_bounds();
            const bool flat_full_rank = b.u > 0.0 && b.kappa <= 50.0;
            const bool flat_deficient = b.u == 0.0 && b.v * static_cast<double>(n) <= 50.0;
            method = (flat_full_rank || flat_deficient) ? Method::taylor : Method::chebyshev;
        }
    }

    EntropyEstimate est;
    switch (method) {
        case Method::exact:
            est = entropy_exact(a, params.alpha);
            break;
        case Method::int_power: {
            if (!is_int)
                fail(errc::invalid_argument, "method=int needs an integer alpha >= 2");
            const int s =
                params.s > 0 ? params.s
                             : select_params(params.alpha, params.epsilon, params.delta,
                                             SpectrumBounds{}, n, Method::int_power)
                                   .s;
            est = entropy_int(a, alpha_int, s, params.seed);
            break;
        }
        case Method::taylor:
        case Method::chebyshev: {
            const SpectrumBounds& b = ensure_bounds();
            SelectedParams sel;
            if (params.s > 0 && params.m > 0) {
                sel = {params.s, params.m};
            } else {
                sel = select_params(params.alpha, params.epsilon, params.delta, b, n, method);
                if (params.s > 0) sel.s = params.s;
                if (params.m > 0) sel.m = params.m;
            }
            if (method == Method::taylor) {
                const int m = std::max(sel.m, static_cast<int>(std::ceil(params.alpha)) + 1);
                est = entropy_taylor(a, params.alpha, sel.s, m, b.v, params.seed);
            } else {
                est = entropy_chebyshev(a, params.alpha, sel.s, sel.m, b.u, b.v, params.seed);
            }
            break;
        }
        case Method::auto_select:
            fail(errc::invalid_argument, "unresolved auto method");
    }
    est.bounds_used = bounds;
    est.elapsed = seconds_since(t0);
    return est;
}

} // namespace renyi
