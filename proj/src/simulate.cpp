#include "renyi/simulate.hpp"

#include <cmath>

#include "renyi/rng.hpp"

namespace renyi {

Matrix mixture_samples(int n, int d, std::uint64_t seed, double center) {
    Matrix x(n, d);
    RandomStream stream(derive_key(seed, hash_name("mixture")));
    for (int i = 0; i < n; ++i) {
        const double mu = (stream.next_u64() & 1) ? center : -center;
        for (int j = 0; j < d; ++j) x(i, j) = mu + stream.next_gaussian();
    }
    return x;
}

MreCell measure_cell(const Matrix& a, double exact_entropy, const EstimatorParams& params,
                     int trials) {
    if (trials < 1) fail(errc::invalid_argument, "need at least one trial");

    EstimatorParams base = params;
    const bool needs_bounds =
        base.method == Method::taylor || base.method == Method::chebyshev ||
        (base.method == Method::auto_select &&
         std::abs(base.alpha - std::round(base.alpha)) > 1e-9);
    if (needs_bounds && !base.bounds) {
        PowerOptions opts = base.power;
        opts.seed = derive_key(base.seed, hash_name("bounds"));
        base.bounds = estimate_bounds(a, opts);
    }

    std::vector<double> rel(trials);
    std::vector<double> secs(trials);
    std::string trial_error;
    errc trial_kind = errc::non_positive_trace;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        EstimatorParams p = base;
        p.seed = derive_key(params.seed, static_cast<std::uint64_t>(t));
        try {
            const EntropyEstimate est = estimate(a, p);
            rel[t] = std::abs(est.entropy - exact_entropy) / std::abs(exact_entropy);
            secs[t] = est.elapsed;
        } catch (const error& e) {
#pragma omp critical
            if (trial_error.empty()) {
                trial_error = "trial " + std::to_string(t) + ": " + e.what();
                trial_kind = e.kind();
            }
        }
    }
    if (!trial_error.empty()) fail(trial_kind, trial_error);

    MreCell cell;
    cell.alpha = params.alpha;
    cell.s = params.s;
    cell.m = params.m;
    cell.method = params.method;
    cell.trials = trials;
    double sum = 0.0;
    for (double r : rel) sum += r;
    cell.mre = sum / trials;
    double var = 0.0;
    for (double r : rel) var += (r - cell.mre) * (r - cell.mre);
    cell.sd = trials > 1 ? std::sqrt(var / (trials - 1)) : 0.0;
    double tsum = 0.0;
    for (double s : secs) tsum += s;
    cell.mean_elapsed = tsum / trials;
    return cell;
}

std::vector<MreCell> run_simulation(const SimulationSpec& spec) {
    if (spec.trials < 1) fail(errc::invalid_argument, "K must be >= 1");
    if (spec.n < 16) fail(errc::invalid_argument, "simulation needs n >= 16");
    const Matrix samples = mixture_samples(spec.n, spec.d, spec.seed, spec.center);
    const NormalizedKernel kernel = build_kernel(samples, spec.kernel);
    const Matrix& a = kernel.matrix();

    std::vector<MreCell> cells;
    for (double alpha : spec.alphas) {
        const EntropyEstimate oracle = entropy_exact(a, alpha);
        for (int s : spec.s_list) {
            for (int m : spec.m_list) {
                EstimatorParams params;
                params.alpha = alpha;
                params.method = spec.method;
                params.s = s;
                params.m = m;
                params.seed = spec.seed;
                params.power = spec.power;
                try {
                    MreCell cell = measure_cell(a, oracle.entropy, params, spec.trials);
                    cell.oracle_elapsed = oracle.elapsed;
                    cells.push_back(cell);
                } catch (const error& e) {
                    fail(e.kind(), "cell alpha=" + std::to_string(alpha) +
                                       " s=" + std::to_string(s) + " m=" + std::to_string(m) +
                                       ": " + e.what());
                }
            }
        }
    }
    return cells;
}

} // namespace renyi
