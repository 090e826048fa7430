#include "renyi/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "renyi/ops.hpp"

namespace renyi {

namespace {

std::uint64_t matrix_hash(const Matrix& m) {
    // FNV-1a over the raw little-endian bytes
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const auto* bytes = reinterpret_cast<const unsigned char*>(m.data());
    const std::size_t len = sizeof(double) * static_cast<std::size_t>(m.size());
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

void validate_samples(const Matrix& samples) {
    if (samples.rows() < 2)
        fail(errc::invalid_argument, "need at least 2 samples, got " + std::to_string(samples.rows()));
    if (!samples.allFinite()) fail(errc::non_finite, "sample matrix contains non-finite values");
}

} // namespace

NormalizedKernel::NormalizedKernel(Matrix a) : a_(std::move(a)) { hash_ = matrix_hash(a_); }

NormalizedKernel build_kernel(const Matrix& samples, const KernelSpec& spec) {
    validate_samples(samples);
    Matrix k = std::visit(
        [&](const auto& s) -> Matrix {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianKernel>) {
                if (s.sigma <= 0.0) fail(errc::invalid_argument, "gaussian kernel needs sigma > 0");
                return ops::gaussian_gram(samples, s.sigma);
            } else {
                if (s.degree < 1) fail(errc::invalid_argument, "polynomial kernel needs degree >= 1");
                if (s.offset < 0.0) fail(errc::invalid_argument, "polynomial kernel needs offset >= 0");
                return ops::polynomial_gram(samples, s.degree, s.offset);
            }
        },
        spec);

    const Eigen::Index n = k.rows();
    if (!k.allFinite()) fail(errc::non_finite, "kernel evaluation produced non-finite values");
    Vector inv_sqrt_diag(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (k(i, i) <= 0.0)
            fail(errc::zero_diagonal,
                 "kernel diagonal entry " + std::to_string(i) + " is not positive");
        inv_sqrt_diag[i] = 1.0 / std::sqrt(k(i, i));
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = inv_n;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = inv_n * k(i, j) * inv_sqrt_diag[i] * inv_sqrt_diag[j];
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return NormalizedKernel(std::move(a));
}

NormalizedKernel hadamard_joint(std::span<const NormalizedKernel* const> kernels) {
    if (kernels.size() < 2) fail(errc::invalid_argument, "hadamard_joint needs at least 2 kernels");
    const Eigen::Index n = kernels.front()->size();
    for (const auto* k : kernels)
        if (k->size() != n)
            fail(errc::size_mismatch, "hadamard_joint kernel sizes differ: " + std::to_string(n) +
                                          " vs " + std::to_string(k->size()));

    // canonical factor order: content hash, then raw bytes on hash ties
    std::vector<const NormalizedKernel*> order(kernels.begin(), kernels.end());
    std::sort(order.begin(), order.end(), [](const NormalizedKernel* x, const NormalizedKernel* y) {
        if (x->content_hash() != y->content_hash()) return x->content_hash() < y->content_hash();
        return std::memcmp(x->matrix().data(), y->matrix().data(),
                           sizeof(double) * static_cast<std::size_t>(x->matrix().size())) < 0;
    });

    // tr(A_1 o ... o A_L) = n (1/n)^L exactly, so the renormalization is n^(L-1)
    double scale = 1.0;
    for (std::size_t l = 1; l < order.size(); ++l) scale *= static_cast<double>(n);

    Matrix prod = order[0]->matrix();
    for (std::size_t l = 1; l + 1 < order.size(); ++l)
        prod = ops::hadamard_scaled(prod, order[l]->matrix(), 1.0);
    prod = ops::hadamard_scaled(prod, order.back()->matrix(), scale);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (Eigen::Index i = 0; i < n; ++i) prod(i, i) = inv_n;
    return NormalizedKernel(std::move(prod));
}

NormalizedKernel hadamard_joint(const std::vector<NormalizedKernel>& kernels) {
    std::vector<const NormalizedKernel*> ptrs;
    ptrs.reserve(kernels.size());
    for (const auto& k : kernels) ptrs.push_back(&k);
    return hadamard_joint(ptrs);
}

} // namespace renyi
