#pragma once

#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "renyi/common.hpp"

namespace renyi {

struct GaussianKernel {
    double sigma = 1.0;
};

struct PolynomialKernel {
    int degree = 2;
    double offset = 1.0;
};

/// Infinitely divisible kernel families supported for entropy estimation.
using KernelSpec = std::variant<GaussianKernel, PolynomialKernel>;

/// Trace-one normalized Gram matrix: A_ij = K_ij / (n sqrt(K_ii K_jj)).
/// Symmetric PSD with all diagonal entries exactly 1/n; immutable after
/// construction and safe to share across threads.
class NormalizedKernel {
public:
    NormalizedKernel() = default;
    /// Takes a matrix that already satisfies the normalization invariants.
    explicit NormalizedKernel(Matrix a);

    const Matrix& matrix() const noexcept { return a_; }
    Eigen::Index size() const noexcept { return a_.rows(); }

    /// Content hash usable as a canonical ordering key.
    std::uint64_t content_hash() const noexcept { return hash_; }

private:
    Matrix a_;
    std::uint64_t hash_ = 0;
};

/// Builds the normalized kernel of a sample set (rows = samples).
NormalizedKernel build_kernel(const Matrix& samples, const KernelSpec& spec);

/// Normalized Hadamard product (A_1 o ... o A_L) / tr(A_1 o ... o A_L).
/// The divisor is n^(1-L) exactly since every diagonal entry is 1/n, and the
/// factors are multiplied in a canonical content order so any permutation of
/// the input list yields a bitwise-identical result.
NormalizedKernel hadamard_joint(std::span<const NormalizedKernel* const> kernels);
NormalizedKernel hadamard_joint(const std::vector<NormalizedKernel>& kernels);

inline NormalizedKernel hadamard_joint(std::initializer_list<const NormalizedKernel*> kernels) {
    return hadamard_joint(std::span<const NormalizedKernel* const>(kernels.begin(), kernels.size()));
}

} // namespace renyi
