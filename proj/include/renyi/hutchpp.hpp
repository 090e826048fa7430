#pragma once

#include <cstdint>

#include "renyi/poly.hpp"

namespace renyi {

/// Query budget for one trace estimate: floor(s/4) sketch columns and
/// s - 2 floor(s/4) residual probes, so the accounting stays exact when s is
/// not divisible by 4.
struct SketchConfig {
    int s = 8;
    std::uint64_t seed = 0;

    int sketch_cols() const noexcept { return s / 4; }
    int probe_cols() const noexcept { return s - 2 * (s / 4); }
};

struct TraceEstimate {
    double value = 0.0;
    double low_rank_part = 0.0;
    double residual_part = 0.0;
    int queries_used = 0; // matrix-vector products with A actually performed
    int sketch_rank = 0;  // columns kept after the rank-revealing QR
    /// True when the estimate is exact by construction (the sketch budget
    /// covered the whole space, or the complement was traced exactly); such
    /// estimates do not depend on the seed beyond rounding.
    bool exact = false;
};

/// Variance-reduced stochastic estimate of tr(f(A)): the dominant subspace
/// captured by a randomized range sketch is traced exactly, the remainder by
/// Hutchinson probes. Deterministic for a fixed config. When the budget
/// reaches the dimension the estimator degenerates gracefully to an exact
/// column-by-column trace instead of wasting oversized sketches.
TraceEstimate hutchpp(const MatrixFunctionSpec& f, const Matrix& a, const SketchConfig& cfg);

/// Nominal matvec accounting for a budget: sketch_cols for A S, query_cost
/// per f-apply on sketch + probe columns, plus two projector applications
/// per probe.
long expected_queries(const MatrixFunctionSpec& f, const SketchConfig& cfg);

namespace detail {

/// i.i.d. N(0,1) panel with one independent substream per column, so column
/// count changes never reshuffle earlier columns.
Matrix gaussian_panel(Eigen::Index n, int cols, std::uint64_t seed, const char* label);

/// Thin orthonormal basis of range(y); columns whose pivoted-QR diagonal
/// falls below rel_threshold * |R_00| are dropped.
Matrix orthonormal_range(const Matrix& y, double rel_threshold, int* rank_out);

/// tr(Q^T f(A) Q) for orthonormal Q.
double projected_trace(const MatrixFunctionSpec& f, const Matrix& a, const Matrix& q);

/// Hutchinson estimate of tr((I-QQ^T) f(A) (I-QQ^T)) with s_g seeded probes.
double residual_probe_trace(const MatrixFunctionSpec& f, const Matrix& a, const Matrix& q, int s_g,
                            std::uint64_t seed);

/// Exact tr(f(A)) via blocked identity panels.
double exact_trace(const MatrixFunctionSpec& f, const Matrix& a);

} // namespace detail

} // namespace renyi
