#pragma once

#include <vector>

#include "renyi/entropy.hpp"
#include "renyi/kernel.hpp"

namespace renyi {

/// n samples from the balanced Gaussian mixture
/// (1/2) N(-center, I_d) + (1/2) N(+center, I_d).
Matrix mixture_samples(int n, int d, std::uint64_t seed, double center = 1.0);

/// One grid of mean-relative-error measurements against the exact oracle.
struct SimulationSpec {
    int n = 1000;
    int d = 10;
    double center = 1.0;
    KernelSpec kernel = GaussianKernel{1.0};
    std::vector<double> alphas{2.0};
    std::vector<int> s_list{64};
    std::vector<int> m_list{0}; // ignored by the integer-power method
    int trials = 100;           // K
    std::uint64_t seed = 0;
    Method method = Method::auto_select;
    PowerOptions power{};
};

struct MreCell {
    double alpha = 0.0;
    int s = 0;
    int m = 0;
    Method method = Method::exact;
    double mre = 0.0;
    double sd = 0.0;
    double mean_elapsed = 0.0;   // per trial, seconds
    double oracle_elapsed = 0.0; // eigendecomposition, seconds
    int trials = 0;
};

/// Runs every (alpha, s, m) cell for K derived-seed trials on one sampled
/// dataset; the oracle is computed once per alpha. Trials run in a worker
/// pool; assembly is ordered and deterministic.
std::vector<MreCell> run_simulation(const SimulationSpec& spec);

/// MRE/SD over K trials of a single estimator configuration on a prebuilt
/// kernel with a known exact value.
MreCell measure_cell(const Matrix& a, double exact_entropy, const EstimatorParams& params,
                     int trials);

} // namespace renyi
