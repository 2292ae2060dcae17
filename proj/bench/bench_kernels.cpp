// Timings for the data-parallel kernels: serial reference vs OpenMP
// version on a few representative sizes.  Output is a plain table of
// median wall times; no pass/fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bpd/kernels.hpp"

using namespace bpd;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

namespace {

std::mt19937_64 rng(7);

cplx rand_cplx() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

std::vector<cplx> rand_vec(int n) {
    std::vector<cplx> v(static_cast<size_t>(n));
    for (auto& x : v) x = rand_cplx();
    return v;
}

MatrixXcd rand_mat(int r, int c) {
    MatrixXcd m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rand_cplx();
    return m;
}

template <class F>
double median_ms(F&& body, int reps = 5) {
    std::vector<double> t;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        t.push_back(std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

void row(const char* name, double serial, double par) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial, par,
                par > 0.0 ? serial / par : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled (both columns run serially)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        std::vector<cplx> coeffs = rand_vec(2048), points = rand_vec(4096), out;
        double s = median_ms([&] { kernels::serial::eval_series_at_points(coeffs, points, out); });
        double p = median_ms([&] { kernels::par::eval_series_at_points(coeffs, points, out); });
        row("eval_series_at_points", s, p);
    }
    {
        std::vector<cplx> samples = rand_vec(8192), out;
        double s = median_ms([&] { kernels::serial::coefficients_from_circle(samples, 1024, out); });
        double p = median_ms([&] { kernels::par::coefficients_from_circle(samples, 1024, out); });
        row("coefficients_from_circle", s, p);
    }
    {
        MatrixXcd A = rand_mat(2048, 96), B = rand_mat(2048, 96), G;
        VectorXd w(2048);
        for (int i = 0; i < 2048; ++i) w(i) = 1.0 / (i + 1.0);
        double s = median_ms([&] { kernels::serial::weighted_gram(A, B, w, G); });
        double p = median_ms([&] { kernels::par::weighted_gram(A, B, w, G); });
        row("weighted_gram", s, p);
    }
    {
        std::vector<cplx> symbol = rand_vec(512);
        MatrixXcd F = rand_mat(2048, 64), out;
        VectorXd w(2048);
        for (int i = 0; i < 2048; ++i) w(i) = i + 1.0;
        double s = median_ms([&] { kernels::serial::adjoint_apply_batch(symbol, w, F, out); });
        double p = median_ms([&] { kernels::par::adjoint_apply_batch(symbol, w, F, out); });
        row("adjoint_apply_batch", s, p);
    }
    {
        MatrixXcd T = rand_mat(40, 40), L;
        double s = median_ms([&] { kernels::serial::commutator_map(T, L); });
        double p = median_ms([&] { kernels::par::commutator_map(T, L); });
        row("commutator_map", s, p);
    }
    return 0;
}
