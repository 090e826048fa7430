#pragma once

#include <string>
#include <vector>

#include "renyi/kernel.hpp"
#include "renyi/measures.hpp"

namespace renyi {

/// Numeric feature columns plus an optional class label per sample.
struct Dataset {
    Matrix features;                 // n x d
    std::vector<std::string> names;  // d column names
    std::vector<std::string> labels; // n labels; empty if the data has none

    Eigen::Index n() const noexcept { return features.rows(); }
    Eigen::Index d() const noexcept { return features.cols(); }
};

/// One-hot embedding of class labels (distinct values in sorted order), as
/// fed to the label kernel.
Matrix one_hot_labels(const std::vector<std::string>& labels);

struct RankingResult {
    std::vector<std::string> names; // top-k, scores non-increasing
    std::vector<int> columns;       // original column indices
    std::vector<double> scores;     // w_i = I_alpha(X_i; Y)
    std::vector<double> elapsed;    // seconds per scored feature (all d)
};

struct SelectionResult {
    std::vector<std::string> names; // greedy pick order
    std::vector<int> columns;
    std::vector<double> objective; // I_alpha(S_sub; Y) after each addition, recorded verbatim
    std::vector<double> elapsed;   // seconds per greedy step
};

/// Scores every feature by mutual information with the label and returns the
/// top k. Ties break by ascending original column index.
RankingResult rank_features(const Dataset& data, const KernelSpec& kernel,
                            const EstimatorParams& params, int k);

/// Greedy forward selection maximizing I_alpha(S_sub; Y); the joint feature
/// kernel is the normalized Hadamard product of the per-feature kernels and
/// is grown incrementally. Candidates within one step share that step's
/// seed so comparisons stay low-variance; k = 1 coincides with the ranking
/// argmax under the same seed.
SelectionResult select_features(const Dataset& data, const KernelSpec& kernel,
                                const EstimatorParams& params, int k);

} // namespace renyi
