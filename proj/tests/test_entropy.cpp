#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "renyi/entropy.hpp"
#include "renyi/kernel.hpp"
#include "renyi/rng.hpp"
#include "support.hpp"

using namespace renyi;

namespace {

Matrix rotated_diag(std::initializer_list<double> eigs, std::uint64_t seed) {
    RandomStream stream(seed);
    Vector d(static_cast<Eigen::Index>(eigs.size()));
    Eigen::Index i = 0;
    for (double e : eigs) d[i++] = e;
    return testsup::spd_from_spectrum(d, stream);
}

} // namespace

TEST_CASE("exact entropy of degenerate spectra") {
    const Matrix eye3 = Matrix::Identity(3, 3) / 3.0;
    CHECK(entropy_exact(eye3, 2.0).entropy == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(entropy_exact(eye3, 0.5).entropy == doctest::Approx(std::log(3.0)).epsilon(1e-12));

    RandomStream stream(61);
    Vector w(12);
    stream.fill_gaussian(w);
    w.normalize();
    const Matrix rank1 = w * w.transpose();
    CHECK(std::abs(entropy_exact(rank1, 2.0).entropy) <= 1e-10);
}

TEST_CASE("exact entropy of diag(0.5, 0.3, 0.2) at alpha=2") {
    Matrix a = Matrix::Zero(3, 3);
    a.diagonal() << 0.5, 0.3, 0.2;
    // scalar oracle: sum of squares is 0.38
    CHECK(entropy_exact(a, 2.0).entropy == doctest::Approx(-std::log(0.38)).epsilon(1e-12));
}

TEST_CASE("alpha near 1 and invalid alpha are rejected") {
    const Matrix eye = Matrix::Identity(4, 4) / 4.0;
    CHECK_THROWS_AS(entropy_exact(eye, 1.0 + 1e-12), error);
    CHECK_THROWS_AS(entropy_exact(eye, -0.5), error);
    CHECK_THROWS_AS(entropy_from_trace(1.0, 1.0), error);
}

TEST_CASE("non-positive trace estimates are an error, not a clamp") {
    CHECK_THROWS_AS(entropy_from_trace(0.0, 2.0), error);
    CHECK_THROWS_AS(entropy_from_trace(-0.1, 2.0), error);
}

TEST_CASE("entropy_int: degenerate spectrum, mean over seeds") {
    const Matrix a = Matrix::Identity(100, 100) / 100.0;
    double mean = 0.0;
    for (int seed = 0; seed < 100; ++seed)
        mean += entropy_int(a, 2, 16, static_cast<std::uint64_t>(seed)).entropy;
    mean /= 100;
    CHECK(std::abs(mean - std::log(100.0)) <= 1e-3 * std::log(100.0));
}

TEST_CASE("entropy_int: exact on low rank") {
    RandomStream stream(62);
    const Matrix a = testsup::random_low_rank_psd(60, 3, stream);
    const double exact = entropy_exact(a, 3.0).entropy;
    for (int seed = 0; seed < 10; ++seed) {
        const EntropyEstimate est = entropy_int(a, 3, 16, static_cast<std::uint64_t>(seed));
        CHECK(std::abs(est.entropy - exact) <= 1e-10 * std::abs(exact));
    }
}

TEST_CASE("entropy_taylor matches the oracle on a rotated spectrum") {
    const Matrix a = rotated_diag({0.5, 0.3, 0.2}, 63);
    const double exact = entropy_exact(a, 1.5).entropy;
    const EntropyEstimate est = entropy_taylor(a, 1.5, 64, 40, 0.5 * (1 + 1e-9), 1);
    CHECK(std::abs(est.entropy - exact) <= 1e-3 * std::abs(exact));
}

TEST_CASE("entropy_taylor terminates instantly on the flat spectrum") {
    const Matrix a = Matrix::Identity(24, 24) / 24.0;
    // (A/v - I) = 0, so the expansion stops at k=0: the polynomial is exact
    // and only trace-estimator noise remains
    double mean = 0.0;
    for (int seed = 0; seed < 50; ++seed)
        mean += entropy_taylor(a, 0.5, 8, 2, 1.0 / 24.0, seed).entropy;
    mean /= 50;
    // s = 8 leaves visible probe noise plus the Jensen bias of the log
    CHECK(mean == doctest::Approx(std::log(24.0)).epsilon(3e-2));
    // with the budget covering the dimension the whole path is exact
    const EntropyEstimate est = entropy_taylor(a, 0.5, 96, 2, 1.0 / 24.0, 5);
    CHECK(est.deterministic);
    CHECK(est.entropy == doctest::Approx(std::log(24.0)).epsilon(1e-12));
}

TEST_CASE("entropy_chebyshev matches the oracle on a rotated spectrum") {
    const Matrix a = rotated_diag({0.5, 0.3, 0.2}, 64);
    const double exact = entropy_exact(a, 1.5).entropy;
    const EntropyEstimate est =
        entropy_chebyshev(a, 1.5, 64, 15, 0.2 * (1 - 1e-6), 0.5 * (1 + 1e-6), 2);
    CHECK(std::abs(est.entropy - exact) <= 1e-3 * std::abs(exact));
}

TEST_CASE("entropy_taylor at the recommended budget on the mixture fixture") {
    // s=50 with the deeper m=40 expansion holds MRE well under 1e-2
    const NormalizedKernel k = testsup::mixture_kernel(1000, 10, 1.0, 555);
    const double exact = entropy_exact(k.matrix(), 1.5).entropy;
    const SpectrumBounds b = estimate_bounds(k.matrix());
    double mre = 0.0;
    const int trials = 25;
    for (int seed = 0; seed < trials; ++seed) {
        const EntropyEstimate est = entropy_taylor(k.matrix(), 1.5, 50, 40, b.v, seed);
        mre += std::abs(est.entropy - exact) / std::abs(exact);
    }
    CHECK(mre / trials <= 1e-2);
}

TEST_CASE("entropy_chebyshev handles the rank-deficient polynomial kernel") {
    RandomStream stream(65);
    Matrix samples(120, 4);
    stream.fill_gaussian(samples);
    samples.bottomRows(30) = samples.topRows(30); // duplicates force u = 0
    const NormalizedKernel k = build_kernel(samples, PolynomialKernel{2, 1.0});
    const double exact = entropy_exact(k.matrix(), 2.5).entropy;
    const SpectrumBounds b = estimate_bounds(k.matrix());
    const EntropyEstimate est = entropy_chebyshev(k.matrix(), 2.5, 64, 30, 0.0, b.v, 3);
    CHECK(std::abs(est.entropy - exact) <= 1e-2 * std::abs(exact));
}

TEST_CASE("entropy_chebyshev survives the fully degenerate u = v = 1/n") {
    const Eigen::Index n = 32;
    const Matrix a = Matrix::Identity(n, n) / static_cast<double>(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    const EntropyEstimate est = entropy_chebyshev(a, 0.5, 128, 20, inv_n, inv_n, 4);
    CHECK(std::abs(est.entropy - std::log(static_cast<double>(n))) <=
          1e-2 * std::log(static_cast<double>(n)));
}

TEST_CASE("all estimator paths agree on the degenerate spectrum") {
    // in the exact budget regime every path lands on log n; randomized
    // budgets would only add probe noise around it
    const Eigen::Index n = 64;
    const int s = 4 * static_cast<int>(n);
    const Matrix a = Matrix::Identity(n, n) / static_cast<double>(n);
    const double expected = std::log(static_cast<double>(n));
    CHECK(entropy_exact(a, 2.0).entropy == doctest::Approx(expected).epsilon(1e-10));
    CHECK(entropy_int(a, 2, s, 9).entropy == doctest::Approx(expected).epsilon(1e-12));
    CHECK(entropy_taylor(a, 2.5, s, 4, 1.0 / n, 9).entropy ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(entropy_chebyshev(a, 2.5, s, 20, 1.0 / n, 1.0 / n, 9).entropy ==
          doctest::Approx(expected).epsilon(1e-2));
}

TEST_CASE("select_params scalar arithmetic") {
    SpectrumBounds flat; // unused for s
    const SelectedParams p1 = select_params(2.0, 0.1, 0.1, flat, 100, Method::int_power);
    CHECK(p1.s == 20);
    CHECK(p1.m == 0);

    SpectrumBounds cond;
    cond.u = 0.001;
    cond.v = 0.1;
    cond.kappa = 100.0;
    // ceil(10 * ln(100/0.005)) = ceil(99.035) = 100
    const SelectedParams p2 = select_params(1.5, 0.01, 0.1, cond, 100, Method::chebyshev);
    CHECK(p2.m == 100);

    SpectrumBounds deficient;
    deficient.u = 0.0;
    deficient.v = 0.5;
    deficient.kappa = std::numeric_limits<double>::infinity();
    const SelectedParams p3 = select_params(2.0, 0.01, 0.1, deficient, 1000, Method::chebyshev);
    CHECK(p3.m == 71);
}

TEST_CASE("select_params validates inputs") {
    SpectrumBounds b;
    CHECK_THROWS_AS(select_params(1.0, 0.1, 0.1, b, 10, Method::taylor), error);
    CHECK_THROWS_AS(select_params(2.0, 0.0, 0.1, b, 10, Method::int_power), error);
    CHECK_THROWS_AS(select_params(2.0, 0.1, 1.5, b, 10, Method::int_power), error);
}

TEST_CASE("mu bound formula") {
    // u = 0: the second term vanishes and mu = v^(alpha-1)
    const MuBound b0 = mu_bound(0.0, 0.5, 2.0, 10);
    CHECK(b0.mu == doctest::Approx(0.5).epsilon(1e-14));

    // degenerate spectrum convention
    const MuBound b1 = mu_bound(0.1, 0.1, 2.0, 10);
    CHECK(b1.mu == doctest::Approx(0.1).epsilon(1e-14));

    CHECK_THROWS_AS(mu_bound(0.05, 0.04, 2.0, 10), error);
}

TEST_CASE("tr(A^alpha) lies in the mu sandwich (eigenvalue oracle)") {
    RandomStream stream(66);
    for (int rep = 0; rep < 100; ++rep) {
        const Eigen::Index n = 5 + static_cast<Eigen::Index>(stream.next_u64() % 60);
        const Vector eigs = testsup::unit_trace_spectrum(n, stream, 0.05);
        const double u = eigs.minCoeff();
        const double v = eigs.maxCoeff();
        const double alpha = rep % 2 == 0 ? 0.5 + stream.next_uniform() * 0.4
                                          : 1.5 + stream.next_uniform() * 3.0;
        double trace = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) trace += std::pow(eigs[i], alpha);
        const MuBound b = mu_bound(u, v, alpha, n);
        CHECK(trace >= b.lower - 1e-12);
        CHECK(trace <= b.upper + 1e-12);
    }
}

TEST_CASE("trace perturbation reduction: eps0-accurate trace gives eps-accurate entropy") {
    RandomStream stream(67);
    for (int rep = 0; rep < 50; ++rep) {
        const Eigen::Index n = 20 + static_cast<Eigen::Index>(stream.next_u64() % 80);
        const Vector eigs = testsup::unit_trace_spectrum(n, stream, 0.1);
        const double alpha = rep % 2 == 0 ? 0.5 : 2.5;
        double trace = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) trace += std::pow(eigs[i], alpha);
        const double entropy = std::log(trace) / (1.0 - alpha);

        const MuBound b = mu_bound(eigs.minCoeff(), eigs.maxCoeff(), alpha, n);
        const double eps = 0.05;
        const double eps0 = 1.0 - std::pow(std::min(b.mu, 1.0 / b.mu), eps);
        for (double sign : {-1.0, 1.0}) {
            const double perturbed = trace * (1.0 + sign * eps0);
            const double perturbed_entropy = std::log(perturbed) / (1.0 - alpha);
            CHECK(std::abs(perturbed_entropy - entropy) <= eps * std::abs(entropy) + 1e-12);
        }
    }
}

TEST_CASE("estimate() routes automatically and records diagnostics") {
    const NormalizedKernel k = testsup::mixture_kernel(200, 6, 1.0, 77);

    EstimatorParams p;
    p.alpha = 2.0;
    p.s = 16;
    p.seed = 5;
    const EntropyEstimate ei = estimate(k.matrix(), p);
    CHECK(ei.method_used == Method::int_power);
    CHECK(ei.s_used == 16);

    p.alpha = 1.5;
    p.s = 256;
    p.m = 60;
    const EntropyEstimate ec = estimate(k.matrix(), p);
    CHECK((ec.method_used == Method::taylor || ec.method_used == Method::chebyshev));
    CHECK(ec.bounds_used.has_value());
    CHECK(ec.trace_estimate > 0.0);
    CHECK(ec.entropy == doctest::Approx(std::log(ec.trace_estimate) / (1.0 - 1.5)));

    p.method = Method::exact;
    const EntropyEstimate ex = estimate(k.matrix(), p);
    const double rel = std::abs(ec.entropy - ex.entropy) / std::abs(ex.entropy);
    CHECK(rel <= 2e-2);
}

TEST_CASE("estimate() derives s and m from epsilon/delta when omitted") {
    const NormalizedKernel k = testsup::mixture_kernel(100, 4, 1.0, 78);
    EstimatorParams p;
    p.alpha = 2.0;
    p.epsilon = 0.1;
    p.delta = 0.1;
    p.seed = 1;
    const EntropyEstimate est = estimate(k.matrix(), p);
    CHECK(est.s_used == 20); // the worked example value
}

TEST_CASE("randomized estimators agree with the oracle under generous parameters") {
    RandomStream stream(68);
    for (Eigen::Index n : {100, 220}) {
        const Matrix a = testsup::random_unit_trace_spd(n, stream, 0.25);
        for (double alpha : {0.5, 2.0, 2.5}) {
            const double exact = entropy_exact(a, alpha).entropy;
            EstimatorParams p;
            p.alpha = alpha;
            p.epsilon = 1e-3;
            p.delta = 1e-2;
            int hits = 0;
            const int trials = 50;
            for (int t = 0; t < trials; ++t) {
                p.seed = static_cast<std::uint64_t>(t);
                const EntropyEstimate est = estimate(a, p);
                if (std::abs(est.entropy - exact) <= 1e-2 * std::abs(exact)) ++hits;
            }
            CHECK(hits == trials);
        }
    }
}

TEST_CASE("exact path rejects non-square input") {
    CHECK_THROWS_AS(entropy_exact(Matrix::Zero(3, 4), 2.0), error);
}
