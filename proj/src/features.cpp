#include "renyi/features.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "renyi/rng.hpp"

namespace renyi {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void validate(const Dataset& data, int k) {
    if (data.labels.empty()) fail(errc::invalid_argument, "dataset has no label column");
    if (static_cast<Eigen::Index>(data.labels.size()) != data.n())
        fail(errc::size_mismatch, "label count does not match sample count");
    if (k < 1 || k > data.d())
        fail(errc::invalid_argument,
             "k must be in [1, d]; got k=" + std::to_string(k) + " with d=" +
                 std::to_string(data.d()));
}

std::string feature_name(const Dataset& data, int j) {
    if (j < static_cast<int>(data.names.size())) return data.names[j];
    return "feature_" + std::to_string(j);
}

NormalizedKernel feature_kernel(const Dataset& data, const KernelSpec& kernel, int j) {
    try {
        return build_kernel(data.features.col(j), kernel);
    } catch (const error& e) {
        fail(e.kind(), "feature '" + feature_name(data, j) + "': " + e.what());
    }
}

// Mutual information of a (joint) feature kernel with the label kernel,
// using the same per-term seed schedule as mutual_information so scores are
// interchangeable with direct calls. The label entropy is precomputed once
// per step since it is candidate-independent.
struct StepScorer {
    const NormalizedKernel* label;
    EstimatorParams step_params;
    double label_entropy;

    StepScorer(const NormalizedKernel& label_kernel, const EstimatorParams& params,
               std::uint64_t step_seed)
        : label(&label_kernel), step_params(params) {
        step_params.seed = step_seed;
        EstimatorParams p = step_params;
        p.seed = derive_key(step_seed, hash_name("term:target"));
        label_entropy = estimate(label_kernel.matrix(), p).entropy;
    }

    double score(const NormalizedKernel& feats, const std::string& name) const {
        try {
            EstimatorParams pv = step_params;
            pv.seed = derive_key(step_params.seed, hash_name("term:vars"));
            const double s_f = estimate(feats.matrix(), pv).entropy;
            EstimatorParams pj = step_params;
            pj.seed = derive_key(step_params.seed, hash_name("term:joint"));
            const NormalizedKernel joint = hadamard_joint({&feats, label});
            const double s_fy = estimate(joint.matrix(), pj).entropy;
            return s_f + label_entropy - s_fy;
        } catch (const error& e) {
            fail(e.kind(), "feature '" + name + "': " + e.what());
        }
    }
};

} // namespace

Matrix one_hot_labels(const std::vector<std::string>& labels) {
    std::map<std::string, int> classes;
    for (const auto& l : labels) classes.emplace(l, 0);
    int idx = 0;
    for (auto& [_, col] : classes) col = idx++;
    Matrix embedded = Matrix::Zero(static_cast<Eigen::Index>(labels.size()),
                                   static_cast<Eigen::Index>(classes.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        embedded(static_cast<Eigen::Index>(i), classes[labels[i]]) = 1.0;
    return embedded;
}

RankingResult rank_features(const Dataset& data, const KernelSpec& kernel,
                            const EstimatorParams& params, int k) {
    validate(data, k);
    const int d = static_cast<int>(data.d());
    const NormalizedKernel label_kernel = build_kernel(one_hot_labels(data.labels), kernel);
    const StepScorer scorer(label_kernel, params, derive_key(params.seed, 0));

    std::vector<double> scores(d);
    std::vector<double> elapsed(d);
    for (int j = 0; j < d; ++j) {
        const auto t0 = std::chrono::steady_clock::now();
        scores[j] = scorer.score(feature_kernel(data, kernel, j), feature_name(data, j));
        elapsed[j] = seconds_since(t0);
    }

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (scores[x] != scores[y]) return scores[x] > scores[y];
        return x < y;
    });

    RankingResult res;
    res.elapsed = std::move(elapsed);
    for (int r = 0; r < k; ++r) {
        const int j = order[r];
        res.names.push_back(feature_name(data, j));
        res.columns.push_back(j);
        res.scores.push_back(scores[j]);
    }
    return res;
}

SelectionResult select_features(const Dataset& data, const KernelSpec& kernel,
                                const EstimatorParams& params, int k) {
    validate(data, k);
    const int d = static_cast<int>(data.d());
    const NormalizedKernel label_kernel = build_kernel(one_hot_labels(data.labels), kernel);

    std::vector<NormalizedKernel> kernels;
    kernels.reserve(d);
    for (int j = 0; j < d; ++j) kernels.push_back(feature_kernel(data, kernel, j));

    SelectionResult res;
    std::vector<bool> taken(d, false);
    NormalizedKernel selected_joint; // running Hadamard product of the picks

    for (int step = 0; step < k; ++step) {
        const auto t0 = std::chrono::steady_clock::now();
        const StepScorer scorer(label_kernel, params,
                                derive_key(params.seed, static_cast<std::uint64_t>(step)));
        int best = -1;
        double best_score = 0.0;
        NormalizedKernel best_joint;
        for (int j = 0; j < d; ++j) {
            if (taken[j]) continue;
            NormalizedKernel candidate_joint =
                step == 0 ? kernels[j] : hadamard_joint({&selected_joint, &kernels[j]});
            const double score = scorer.score(candidate_joint, feature_name(data, j));
            if (best < 0 || score > best_score) {
                best = j;
                best_score = score;
                best_joint = std::move(candidate_joint);
            }
        }
        taken[best] = true;
        selected_joint = std::move(best_joint);
        res.names.push_back(feature_name(data, best));
        res.columns.push_back(best);
        res.objective.push_back(best_score);
        res.elapsed.push_back(seconds_since(t0));
    }
    return res;
}

} // namespace renyi
