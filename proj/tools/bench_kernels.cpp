// Throughput comparison of the OpenMP kernels against their serial reference
// twins, plus the end-to-end randomized-vs-exact entropy timing.

#include <chrono>
#include <cstdio>
#include <functional>

#include "renyi/entropy.hpp"
#include "renyi/kernel.hpp"
#include "renyi/ops.hpp"
#include "renyi/simulate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_once(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double best_of(int reps, const std::function<void()>& fn) {
    double best = time_once(fn);
    for (int r = 1; r < reps; ++r) best = std::min(best, time_once(fn));
    return best;
}

void report(const char* name, double serial, double parallel, double max_diff) {
    std::printf("%-22s %10.4f ms %10.4f ms %8.2fx   max|diff| %.3g\n", name, serial * 1e3,
                parallel * 1e3, serial / parallel, max_diff);
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 1500;
    const int d = 10;
    const int panel_cols = 64;
#ifdef _OPENMP
    std::printf("threads: %d, n = %d\n", omp_get_max_threads(), n);
#else
    std::printf("threads: 1 (OpenMP off), n = %d\n", n);
#endif
    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    const renyi::Matrix samples = renyi::mixture_samples(n, d, 42);

    renyi::Matrix g_serial, g_par;
    const double t_gs = best_of(3, [&] { g_serial = renyi::ops::gaussian_gram_serial(samples, 1.0); });
    const double t_gp = best_of(3, [&] { g_par = renyi::ops::gaussian_gram(samples, 1.0); });
    report("gaussian_gram", t_gs, t_gp, (g_serial - g_par).cwiseAbs().maxCoeff());

    renyi::Matrix p_serial, p_par;
    const double t_ps = best_of(3, [&] { p_serial = renyi::ops::polynomial_gram_serial(samples, 2, 1.0); });
    const double t_pp = best_of(3, [&] { p_par = renyi::ops::polynomial_gram(samples, 2, 1.0); });
    report("polynomial_gram", t_ps, t_pp, (p_serial - p_par).cwiseAbs().maxCoeff());

    const renyi::NormalizedKernel kernel = renyi::build_kernel(samples, renyi::GaussianKernel{1.0});
    const renyi::Matrix& a = kernel.matrix();

    renyi::Vector x = renyi::Vector::LinSpaced(n, -1.0, 1.0);
    renyi::Vector y_serial, y_par;
    const double t_vs = best_of(5, [&] { y_serial = renyi::ops::matvec_serial(a, x); });
    const double t_vp = best_of(5, [&] { y_par = renyi::ops::matvec(a, x); });
    report("matvec", t_vs, t_vp, (y_serial - y_par).cwiseAbs().maxCoeff());

    renyi::Matrix panel = renyi::Matrix::Random(n, panel_cols);
    renyi::Matrix m_serial, m_par;
    const double t_ms = best_of(3, [&] { m_serial = renyi::ops::matmul_panel_serial(a, panel); });
    const double t_mp = best_of(3, [&] { m_par = renyi::ops::matmul_panel(a, panel); });
    report("matmul_panel(64)", t_ms, t_mp, (m_serial - m_par).cwiseAbs().maxCoeff());

    renyi::Matrix h_serial, h_par;
    const double t_hs = best_of(3, [&] { h_serial = renyi::ops::hadamard_scaled_serial(a, a, 2.0); });
    const double t_hp = best_of(3, [&] { h_par = renyi::ops::hadamard_scaled(a, a, 2.0); });
    report("hadamard_scaled", t_hs, t_hp, (h_serial - h_par).cwiseAbs().maxCoeff());

    std::printf("\nentropy (alpha = 2):\n");
    const double t_exact = time_once([&] { (void)renyi::entropy_exact(a, 2.0); });
    double t_rand = 0.0;
    renyi::EntropyEstimate est;
    t_rand = best_of(3, [&] { est = renyi::entropy_int(a, 2, 48, 7); });
    const renyi::EntropyEstimate exact = renyi::entropy_exact(a, 2.0);
    std::printf("  exact      %10.1f ms\n", t_exact * 1e3);
    std::printf("  randomized %10.1f ms  (s = 48, rel err %.2e, %.1fx speedup)\n", t_rand * 1e3,
                std::abs(est.entropy - exact.entropy) / exact.entropy, t_exact / t_rand);
    return 0;
}
