#pragma once

#include <vector>

#include "renyi/entropy.hpp"
#include "renyi/kernel.hpp"

namespace renyi {

/// A set of variables observed on the same n samples, one normalized kernel
/// per variable.
using VariableSet = std::vector<NormalizedKernel>;

/// Joint entropy S_alpha of the normalized Hadamard product of the variable
/// kernels; a single variable passes through unchanged.
EntropyEstimate joint_entropy(const VariableSet& vars, const EstimatorParams& params);

/// S_alpha(vars | given) = S_alpha(vars, given) - S_alpha(given); each term
/// runs with an independent substream derived from the shared seed.
double conditional_entropy(const VariableSet& vars, const NormalizedKernel& given,
                           const EstimatorParams& params);

struct MutualInformation {
    double value = 0.0;
    double vars_entropy = 0.0;
    double target_entropy = 0.0;
    double joint_entropy = 0.0;
};

/// I_alpha(vars; target) in the three-term form
/// S(vars) + S(target) - S(vars, target), with one seed schedule per term so
/// the identity holds exactly and results are reproducible. Randomized
/// estimates may come out slightly negative; no clamping is applied.
MutualInformation mutual_information(const VariableSet& vars, const NormalizedKernel& target,
                                     const EstimatorParams& params);

} // namespace renyi
