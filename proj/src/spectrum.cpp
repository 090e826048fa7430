#include "renyi/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "renyi/ops.hpp"
#include "renyi/rng.hpp"

namespace renyi {

namespace {

Vector seeded_start(Eigen::Index n, std::uint64_t seed) {
    RandomStream stream(derive_key(seed, hash_name("power-start")));
    Vector x(n);
    stream.fill_gaussian(x);
    const double norm = x.norm();
    if (norm == 0.0) x.setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    else x /= norm;
    return x;
}

} // namespace

PowerResult power_method(const Matrix& a, const PowerOptions& opts) {
    const Eigen::Index n = a.rows();
    Vector x = seeded_start(n, opts.seed);
    PowerResult res;
    double prev = 0.0;
    for (int it = 1; it <= opts.max_iters; ++it) {
        Vector y = ops::matvec(a, x);
        const double quotient = x.dot(y);
        res.rayleigh = quotient;
        res.iterations = it;
        if (it > 1 && std::abs(quotient - prev) <= opts.tol * std::abs(quotient)) {
            res.converged = true;
            break;
        }
        prev = quotient;
        const double norm = y.norm();
        if (norm == 0.0) {
            // zero matrix (or x in its null space): quotient is exact
            res.converged = true;
            break;
        }
        x = y / norm;
    }
    return res;
}

double estimate_v(const Matrix& a, const PowerOptions& opts) {
    const double inv_n = 1.0 / static_cast<double>(a.rows());
    const PowerResult r = power_method(a, opts);
    const double inflated = r.rayleigh * (1.0 + opts.tol);
    return std::clamp(inflated, inv_n, 1.0);
}

double estimate_u(const Matrix& a, double v, const PowerOptions& opts, bool* rank_deficient) {
    const Eigen::Index n = a.rows();
    const double inv_n = 1.0 / static_cast<double>(n);
    Matrix shifted = -a;
    shifted.diagonal().array() += v;
    PowerOptions shifted_opts = opts;
    shifted_opts.seed = derive_key(opts.seed, hash_name("shifted"));
    const PowerResult r = power_method(shifted, shifted_opts);
    double u = (v - r.rayleigh) * (1.0 - opts.tol);
    // the shifted iteration stops once the quotient settles to rel. tol, so
    // estimates below v*tol*O(1) cannot certify a positive lambda_min
    const double floor = std::max(opts.rank_floor, v * opts.tol * 100.0);
    bool deficient = false;
    if (u < floor) {
        u = 0.0;
        deficient = true;
    }
    u = std::min(u, inv_n);
    if (rank_deficient) *rank_deficient = deficient;
    return u;
}

SpectrumBounds estimate_bounds(const Matrix& a, const PowerOptions& opts) {
    SpectrumBounds b;
    const PowerResult rv = power_method(a, opts);
    const double inv_n = 1.0 / static_cast<double>(a.rows());
    b.v = std::clamp(rv.rayleigh * (1.0 + opts.tol), inv_n, 1.0);
    b.v_converged = rv.converged;

    Matrix shifted = -a;
    shifted.diagonal().array() += b.v;
    PowerOptions shifted_opts = opts;
    shifted_opts.seed = derive_key(opts.seed, hash_name("shifted"));
    const PowerResult ru = power_method(shifted, shifted_opts);
    b.u_converged = ru.converged;
    double u = (b.v - ru.rayleigh) * (1.0 - opts.tol);
    const double floor = std::max(opts.rank_floor, b.v * opts.tol * 100.0);
    if (u < floor) {
        u = 0.0;
        b.rank_deficient = true;
    }
    b.u = std::min(u, inv_n);
    b.kappa = b.u > 0.0 ? b.v / b.u : std::numeric_limits<double>::infinity();
    b.iterations_used = rv.iterations + ru.iterations;
    return b;
}

} // namespace renyi
