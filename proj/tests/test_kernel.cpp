#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstring>

#include "renyi/kernel.hpp"
#include "renyi/rng.hpp"
#include "support.hpp"

using namespace renyi;

namespace {

void check_kernel_invariants(const NormalizedKernel& k) {
    const Matrix& a = k.matrix();
    const Eigen::Index n = k.size();
    CHECK((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    for (Eigen::Index i = 0; i < n; ++i) CHECK(a(i, i) == doctest::Approx(1.0 / n).epsilon(1e-12));
    CHECK(a.trace() == doctest::Approx(1.0).epsilon(1e-10));
}

} // namespace

TEST_CASE("two identical samples give the all-1/2 kernel") {
    Matrix samples(2, 3);
    samples.row(0) << 0.3, -1.2, 0.7;
    samples.row(1) = samples.row(0);
    const NormalizedKernel k = build_kernel(samples, GaussianKernel{1.0});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(k.matrix()(i, j) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("samples far apart give I/n") {
    Matrix samples(4, 1);
    samples << 0.0, 1e6, 2e6, 3e6;
    const NormalizedKernel k = build_kernel(samples, GaussianKernel{1.0});
    CHECK((k.matrix() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("3-point line matches the scalar kernel formula") {
    Matrix samples(3, 1);
    samples << 0.0, 1.0, 2.0;
    const NormalizedKernel k = build_kernel(samples, GaussianKernel{1.0});
    // scalar oracle: A_ij = exp(-(x_i-x_j)^2/2)/3
    CHECK(k.matrix()(0, 1) == doctest::Approx(std::exp(-0.5) / 3.0).epsilon(1e-15));
    CHECK(k.matrix()(0, 2) == doctest::Approx(std::exp(-2.0) / 3.0).epsilon(1e-15));
    CHECK(k.matrix()(1, 2) == doctest::Approx(std::exp(-0.5) / 3.0).epsilon(1e-15));
    check_kernel_invariants(k);
}

TEST_CASE("kernel invariants hold on random data, including PSD") {
    RandomStream stream(21);
    for (int rep = 0; rep < 4; ++rep) {
        Matrix samples(40 + 3 * rep, 4);
        stream.fill_gaussian(samples);
        const KernelSpec spec = rep % 2 == 0 ? KernelSpec(GaussianKernel{0.7 + 0.3 * rep})
                                             : KernelSpec(PolynomialKernel{2, 1.0});
        const NormalizedKernel k = build_kernel(samples, spec);
        check_kernel_invariants(k);
        CHECK(testsup::oracle_eigenvalues(k.matrix()).minCoeff() >= -1e-10);
    }
}

TEST_CASE("polynomial kernel with a zero diagonal is rejected") {
    Matrix samples = Matrix::Zero(3, 2);
    samples.row(1) << 1.0, 0.0;
    samples.row(2) << 0.0, 1.0;
    CHECK_THROWS_WITH_AS(build_kernel(samples, PolynomialKernel{2, 0.0}), doctest::Contains("not positive"),
                         error);
}

TEST_CASE("non-finite kernel values are rejected") {
    Matrix samples(2, 1);
    samples << 1e200, -1e200;
    CHECK_THROWS_AS(build_kernel(samples, PolynomialKernel{2, 1.0}), error);
}

TEST_CASE("single sample is rejected") {
    Matrix samples(1, 2);
    samples << 1.0, 2.0;
    CHECK_THROWS_AS(build_kernel(samples, GaussianKernel{1.0}), error);
}

TEST_CASE("hadamard_joint of degenerate kernels") {
    const NormalizedKernel eye(Matrix::Identity(5, 5) / 5.0);
    const NormalizedKernel joint = hadamard_joint({eye, eye});
    CHECK((joint.matrix() - eye.matrix()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("the all-1/n kernel acts as identity under hadamard_joint") {
    RandomStream stream(22);
    Matrix samples(12, 3);
    stream.fill_gaussian(samples);
    const NormalizedKernel a = build_kernel(samples, GaussianKernel{1.0});
    const NormalizedKernel j(Matrix::Constant(12, 12, 1.0 / 12.0));
    const NormalizedKernel joint = hadamard_joint({a, j});
    CHECK((joint.matrix() - a.matrix()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("hadamard_joint has unit trace (exact summation oracle)") {
    RandomStream stream(23);
    Matrix s1(4, 2), s2(4, 2);
    stream.fill_gaussian(s1);
    stream.fill_gaussian(s2);
    const NormalizedKernel a = build_kernel(s1, GaussianKernel{1.0});
    const NormalizedKernel b = build_kernel(s2, GaussianKernel{0.5});
    const NormalizedKernel joint = hadamard_joint({a, b});
    long double trace = 0.0L;
    for (int i = 0; i < 4; ++i) trace += static_cast<long double>(joint.matrix()(i, i));
    CHECK(std::abs(static_cast<double>(trace) - 1.0) <= 1e-12);
}

TEST_CASE("hadamard_joint is bitwise permutation invariant") {
    RandomStream stream(24);
    std::vector<NormalizedKernel> kernels;
    for (int v = 0; v < 3; ++v) {
        Matrix samples(10, 2);
        stream.fill_gaussian(samples);
        kernels.push_back(build_kernel(samples, GaussianKernel{1.0}));
    }
    const NormalizedKernel ref = hadamard_joint(kernels);
    std::vector<NormalizedKernel> shuffled{kernels[2], kernels[0], kernels[1]};
    const NormalizedKernel perm = hadamard_joint(shuffled);
    CHECK(std::memcmp(ref.matrix().data(), perm.matrix().data(),
                      sizeof(double) * static_cast<std::size_t>(ref.matrix().size())) == 0);
}

TEST_CASE("hadamard_joint of PSD inputs stays PSD (Schur product check)") {
    RandomStream stream(25);
    for (int rep = 0; rep < 3; ++rep) {
        Matrix s1(30, 3), s2(30, 2);
        stream.fill_gaussian(s1);
        stream.fill_gaussian(s2);
        const NormalizedKernel a = build_kernel(s1, GaussianKernel{1.0});
        const NormalizedKernel b = build_kernel(s2, PolynomialKernel{2, 1.0});
        const NormalizedKernel joint = hadamard_joint({a, b});
        CHECK(testsup::oracle_eigenvalues(joint.matrix()).minCoeff() >= -1e-10);
    }
}

TEST_CASE("hadamard_joint rejects mismatched sizes") {
    const NormalizedKernel a(Matrix::Identity(4, 4) / 4.0);
    const NormalizedKernel b(Matrix::Identity(5, 5) / 5.0);
    CHECK_THROWS_AS(hadamard_joint({a, b}), error);
}
