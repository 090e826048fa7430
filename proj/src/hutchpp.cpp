#include "renyi/hutchpp.hpp"

#include <Eigen/QR>
#include <algorithm>

#include "renyi/ops.hpp"
#include "renyi/rng.hpp"

namespace renyi {

namespace detail {

Matrix gaussian_panel(Eigen::Index n, int cols, std::uint64_t seed, const char* label) {
    Matrix g(n, cols);
    const std::uint64_t base = derive_key(seed, hash_name(label));
#pragma omp parallel for schedule(static)
    for (int j = 0; j < cols; ++j) {
        RandomStream col_stream(derive_key(base, static_cast<std::uint64_t>(j)));
        for (Eigen::Index i = 0; i < n; ++i) g(i, j) = col_stream.next_gaussian();
    }
    return g;
}

Matrix orthonormal_range(const Matrix& y, double rel_threshold, int* rank_out) {
    Eigen::ColPivHouseholderQR<Matrix> qr(y);
    qr.setThreshold(rel_threshold);
    const int rank = static_cast<int>(qr.rank());
    if (rank_out) *rank_out = rank;
    if (rank == 0) return Matrix(y.rows(), 0);
    return qr.householderQ() * Matrix::Identity(y.rows(), rank);
}

double projected_trace(const MatrixFunctionSpec& f, const Matrix& a, const Matrix& q) {
    if (q.cols() == 0) return 0.0;
    const Matrix fq = apply_panel(f, a, q);
    double sum = 0.0;
    for (Eigen::Index j = 0; j < q.cols(); ++j) sum += q.col(j).dot(fq.col(j));
    return sum;
}

double residual_probe_trace(const MatrixFunctionSpec& f, const Matrix& a, const Matrix& q, int s_g,
                            std::uint64_t seed) {
    const Eigen::Index n = a.rows();
    Matrix w = gaussian_panel(n, s_g, seed, "hutchpp-probe");
    if (q.cols() > 0) w.noalias() -= q * (q.transpose() * w);
    Matrix fw = apply_panel(f, a, w);
    if (q.cols() > 0) fw.noalias() -= q * (q.transpose() * fw);
    double sum = 0.0;
    for (int j = 0; j < s_g; ++j) sum += w.col(j).dot(fw.col(j));
    return sum / s_g;
}

double exact_trace(const MatrixFunctionSpec& f, const Matrix& a) {
    const Eigen::Index n = a.rows();
    constexpr Eigen::Index block = 256;
    double sum = 0.0;
    for (Eigen::Index j0 = 0; j0 < n; j0 += block) {
        const Eigen::Index len = std::min(block, n - j0);
        Matrix basis = Matrix::Zero(n, len);
        for (Eigen::Index j = 0; j < len; ++j) basis(j0 + j, j) = 1.0;
        const Matrix fb = apply_panel(f, a, basis);
        for (Eigen::Index j = 0; j < len; ++j) sum += fb(j0 + j, j);
    }
    return sum;
}

} // namespace detail

TraceEstimate hutchpp(const MatrixFunctionSpec& f, const Matrix& a, const SketchConfig& cfg) {
    if (cfg.s < 8) fail(errc::invalid_argument, "hutchpp needs a query budget s >= 8");
    if (a.rows() != a.cols()) fail(errc::size_mismatch, "hutchpp needs a square matrix");
    const Eigen::Index n = a.rows();
    const int s_q = cfg.sketch_cols();
    const int s_g = cfg.probe_cols();
    const int cost = f.query_cost();

    TraceEstimate est;

    if (s_q >= n) {
        // The sketch would span the whole space: tr(f(A)) column by column.
        est.value = est.low_rank_part = detail::exact_trace(f, a);
        est.residual_part = 0.0;
        est.sketch_rank = static_cast<int>(n);
        est.queries_used = static_cast<int>(n) * cost;
        est.exact = true;
        return est;
    }

    const Matrix sketch = detail::gaussian_panel(n, s_q, cfg.seed, "hutchpp-sketch");
    const Matrix y = ops::matmul_panel(a, sketch);
    Eigen::ColPivHouseholderQR<Matrix> qr(y);
    qr.setThreshold(1e-12);
    const int rank = static_cast<int>(qr.rank());
    if (rank == 0) fail(errc::rank_collapse, "hutchpp sketch A*S is numerically zero");

    est.sketch_rank = rank;
    est.queries_used = s_q + rank * cost;
    const Eigen::Index codim = n - rank;

    if (s_g >= codim) {
        // Cheaper and exact: trace the complement basis instead of probing it.
        const Matrix full_q = qr.householderQ() * Matrix::Identity(n, n);
        est.low_rank_part = detail::projected_trace(f, a, full_q.leftCols(rank));
        est.residual_part = detail::projected_trace(f, a, full_q.rightCols(codim));
        est.queries_used += static_cast<int>(codim) * cost;
        est.exact = true;
    } else {
        const Matrix q = qr.householderQ() * Matrix::Identity(n, rank);
        est.low_rank_part = detail::projected_trace(f, a, q);
        est.residual_part = detail::residual_probe_trace(f, a, q, s_g, cfg.seed);
        est.queries_used += s_g * cost;
    }
    est.value = est.low_rank_part + est.residual_part;
    return est;
}

long expected_queries(const MatrixFunctionSpec& f, const SketchConfig& cfg) {
    const long s_q = cfg.sketch_cols();
    const long s_g = cfg.probe_cols();
    return s_q + static_cast<long>(f.query_cost()) * (s_q + s_g) + 2 * s_g;
}

} // namespace renyi
