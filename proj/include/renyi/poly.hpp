#pragma once

#include <functional>
#include <variant>

#include "renyi/common.hpp"

namespace renyi {

/// Generalized binomial coefficients b_k = binom(alpha, k), k = 0..m,
/// built exactly by the recurrence b_{k+1} = b_k (alpha - k) / (k + 1).
Vector binomial_coeffs(double alpha, int m);

/// Chebyshev coefficients of f on [a, b] from the m+1 first-kind nodes
/// x_i = cos(pi (i + 1/2) / (m + 1)); f is evaluated at g(x_i) with g the
/// linear map [-1, 1] -> [a, b]. Convention: f ~ c_0/2 + sum_{k>=1} c_k T_k.
Vector chebyshev_node_coeffs(const std::function<double(double)>& f, int m, double a, double b);

/// Coefficients for f(lambda) = lambda^alpha on [u, v].
Vector chebyshev_coeffs(double alpha, int m, double u, double v);

/// Upper bound constant of the Taylor tail, sup over k <= k_max of
/// |binom(alpha, ceil(alpha)+k+1) / binom(alpha, k)|; depends only on alpha.
double taylor_tail_constant(double alpha, int k_max = 10000);

/// Algorithm-4 safeguard: widen v so the Chebyshev analyticity ellipse fits.
inline double chebyshev_safeguard(double u, double v) {
    const double widened = u + 2.0 * std::sqrt(std::max(0.0, 2.0 * u - u * u));
    return std::max(v, widened);
}

struct IntPowerSpec {
    int alpha;
};

struct TaylorSpec {
    double alpha;
    int degree;
    double v;
    Vector binom; // b_0..b_m
};

struct ChebyshevSpec {
    double alpha;
    int degree;
    double u; // post-safeguard interval
    double v;
    Vector coeffs; // c_0..c_m
};

/// Implicit positive matrix function f(A) evaluated only through products
/// with A: exact powers for integer alpha, truncated Taylor or Chebyshev
/// expansions of lambda^alpha for fractional alpha.
class MatrixFunctionSpec {
public:
    using Variant = std::variant<IntPowerSpec, TaylorSpec, ChebyshevSpec>;

    static MatrixFunctionSpec int_power(int alpha);
    static MatrixFunctionSpec taylor(double alpha, int m, double v);
    /// Applies the safeguard to v before computing coefficients.
    static MatrixFunctionSpec chebyshev(double alpha, int m, double u, double v);

    /// Matrix-vector products with A consumed by one apply.
    int query_cost() const;
    const Variant& variant() const noexcept { return spec_; }

private:
    explicit MatrixFunctionSpec(Variant v) : spec_(std::move(v)) {}
    Variant spec_;
};

/// p(A) x through matvecs only; the recurrences keep three live vectors.
Vector apply(const MatrixFunctionSpec& spec, const Matrix& a, const Vector& x);

/// p(A) X for a panel of vectors (column-blocked parallel products).
Matrix apply_panel(const MatrixFunctionSpec& spec, const Matrix& a, const Matrix& x);

/// The same polynomial evaluated at a scalar; apply on a 1x1 matrix [lambda]
/// reduces to this.
double scalar_value(const MatrixFunctionSpec& spec, double lambda);

} // namespace renyi
