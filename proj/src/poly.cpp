#include "renyi/poly.hpp"

#include <cmath>
#include <numbers>

#include "renyi/ops.hpp"

namespace renyi {

Vector binomial_coeffs(double alpha, int m) {
    if (m < 0) fail(errc::invalid_argument, "binomial_coeffs needs m >= 0");
    Vector b(m + 1);
    b[0] = 1.0;
    for (int k = 0; k < m; ++k) b[k + 1] = b[k] * (alpha - k) / (k + 1);
    return b;
}

Vector chebyshev_node_coeffs(const std::function<double(double)>& f, int m, double a, double b) {
    if (m < 1) fail(errc::invalid_argument, "chebyshev_node_coeffs needs m >= 1");
    const int n_nodes = m + 1;
    Vector c = Vector::Zero(m + 1);
    for (int i = 0; i < n_nodes; ++i) {
        const double theta = std::numbers::pi * (i + 0.5) / n_nodes;
        const double x = std::cos(theta);
        const double fx = f(a + 0.5 * (b - a) * (x + 1.0));
        // T_k(x_i) = cos(k theta) by the three-term cosine recurrence
        double t_prev = 1.0;
        double t_cur = x;
        c[0] += fx;
        if (m >= 1) c[1] += fx * x;
        for (int k = 2; k <= m; ++k) {
            const double t_next = 2.0 * x * t_cur - t_prev;
            c[k] += fx * t_next;
            t_prev = t_cur;
            t_cur = t_next;
        }
    }
    c *= 2.0 / n_nodes;
    return c;
}

Vector chebyshev_coeffs(double alpha, int m, double u, double v) {
    if (u < 0.0 || v <= u)
        fail(errc::domain_error, "chebyshev_coeffs needs 0 <= u < v");
    return chebyshev_node_coeffs([alpha](double lam) { return std::pow(lam, alpha); }, m, u, v);
}

double taylor_tail_constant(double alpha, int k_max) {
    const int shift = static_cast<int>(std::ceil(alpha)) + 1;
    double best = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        // |binom(alpha, k+shift) / binom(alpha, k)| = prod_{i=k}^{k+shift-1} |alpha-i|/(i+1)
        double ratio = 1.0;
        for (int i = k; i < k + shift; ++i) ratio *= std::abs(alpha - i) / (i + 1);
        best = std::max(best, ratio);
    }
    return best;
}

MatrixFunctionSpec MatrixFunctionSpec::int_power(int alpha) {
    if (alpha < 1) fail(errc::invalid_argument, "int_power needs alpha >= 1");
    return MatrixFunctionSpec(IntPowerSpec{alpha});
}

MatrixFunctionSpec MatrixFunctionSpec::taylor(double alpha, int m, double v) {
    if (m < 1) fail(errc::invalid_argument, "taylor spec needs m >= 1");
    if (v <= 0.0 || v > 1.0) fail(errc::domain_error, "taylor spec needs v in (0, 1]");
    if (alpha <= 0.0) fail(errc::invalid_argument, "taylor spec needs alpha > 0");
    return MatrixFunctionSpec(TaylorSpec{alpha, m, v, binomial_coeffs(alpha, m)});
}

MatrixFunctionSpec MatrixFunctionSpec::chebyshev(double alpha, int m, double u, double v) {
    if (m < 1) fail(errc::invalid_argument, "chebyshev spec needs m >= 1");
    if (alpha <= 0.0) fail(errc::invalid_argument, "chebyshev spec needs alpha > 0");
    if (u < 0.0) fail(errc::domain_error, "chebyshev spec needs u >= 0");
    const double safe_v = chebyshev_safeguard(u, v);
    if (safe_v <= u) fail(errc::domain_error, "chebyshev spec needs v > u after safeguard");
    return MatrixFunctionSpec(
        ChebyshevSpec{alpha, m, u, safe_v, chebyshev_coeffs(alpha, m, u, safe_v)});
}

int MatrixFunctionSpec::query_cost() const {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, IntPowerSpec>) return s.alpha;
            else return s.degree;
        },
        spec_);
}

namespace {

// The three recurrences below are written once over a generic operand type
// (Vector or Matrix panel); `mul` is the product with A.

template <typename Operand, typename Mul>
Operand apply_int_power(const IntPowerSpec& s, const Operand& x, Mul&& mul) {
    Operand y = x;
    for (int k = 0; k < s.alpha; ++k) y = mul(y);
    return y;
}

template <typename Operand, typename Mul>
Operand apply_taylor(const TaylorSpec& s, const Operand& x, Mul&& mul) {
    const double inv_v = 1.0 / s.v;
    Operand term = x;
    Operand acc = s.binom[0] * x;
    for (int k = 1; k <= s.degree; ++k) {
        term = inv_v * mul(term) - term; // (A/v - I) term
        acc += s.binom[k] * term;
    }
    return std::pow(s.v, s.alpha) * acc;
}

template <typename Operand, typename Mul>
Operand apply_chebyshev(const ChebyshevSpec& s, const Operand& x, Mul&& mul) {
    const double scale = 2.0 / (s.v - s.u);
    const double center = (s.v + s.u) / (s.v - s.u);
    auto mapped = [&](const Operand& w) -> Operand { return scale * mul(w) - center * w; };
    Operand t_prev = x;
    Operand acc = (0.5 * s.coeffs[0]) * x;
    if (s.degree >= 1) {
        Operand t_cur = mapped(x);
        acc += s.coeffs[1] * t_cur;
        for (int k = 2; k <= s.degree; ++k) {
            Operand t_next = 2.0 * mapped(t_cur) - t_prev;
            acc += s.coeffs[k] * t_next;
            t_prev = std::move(t_cur);
            t_cur = std::move(t_next);
        }
    }
    return acc;
}

template <typename Operand, typename Mul>
Operand apply_impl(const MatrixFunctionSpec& spec, const Operand& x, Mul&& mul) {
    return std::visit(
        [&](const auto& s) -> Operand {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, IntPowerSpec>) return apply_int_power(s, x, mul);
            else if constexpr (std::is_same_v<T, TaylorSpec>) return apply_taylor(s, x, mul);
            else return apply_chebyshev(s, x, mul);
        },
        spec.variant());
}

} // namespace

Vector apply(const MatrixFunctionSpec& spec, const Matrix& a, const Vector& x) {
    if (a.rows() != a.cols() || a.cols() != x.size())
        fail(errc::size_mismatch, "apply: matrix is " + std::to_string(a.rows()) + "x" +
                                      std::to_string(a.cols()) + ", vector has " +
                                      std::to_string(x.size()) + " entries");
    return apply_impl(spec, x, [&](const Vector& w) { return ops::matvec(a, w); });
}

Matrix apply_panel(const MatrixFunctionSpec& spec, const Matrix& a, const Matrix& x) {
    if (a.rows() != a.cols() || a.cols() != x.rows())
        fail(errc::size_mismatch, "apply_panel: matrix is " + std::to_string(a.rows()) + "x" +
                                      std::to_string(a.cols()) + ", panel has " +
                                      std::to_string(x.rows()) + " rows");
    return apply_impl(spec, x, [&](const Matrix& w) { return ops::matmul_panel(a, w); });
}

double scalar_value(const MatrixFunctionSpec& spec, double lambda) {
    return apply_impl(spec, 1.0, [&](double w) { return lambda * w; });
}

} // namespace renyi
