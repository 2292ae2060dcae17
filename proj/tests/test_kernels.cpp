#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "bpd/kernels.hpp"

using namespace bpd;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

namespace {

std::mt19937_64 rng(20240821);

cplx rand_cplx(double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

std::vector<cplx> rand_vec(int n, double scale = 1.0) {
    std::vector<cplx> v(static_cast<size_t>(n));
    for (auto& x : v) x = rand_cplx(scale);
    return v;
}

MatrixXcd rand_mat(int r, int c) {
    MatrixXcd m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rand_cplx();
    return m;
}

}  // namespace

TEST_CASE("eval_series_at_points: parallel equals serial equals Horner") {
    std::vector<cplx> coeffs = rand_vec(300);
    std::vector<cplx> points = rand_vec(97, 0.9);
    std::vector<cplx> a, b;
    kernels::serial::eval_series_at_points(coeffs, points, a);
    kernels::par::eval_series_at_points(coeffs, points, b);
    REQUIRE(a.size() == points.size());
    REQUIRE(b.size() == points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        CHECK(std::abs(a[i] - b[i]) < 1e-11);
        cplx horner{0.0, 0.0};
        for (size_t k = coeffs.size(); k-- > 0;) horner = horner * points[i] + coeffs[k];
        CHECK(std::abs(a[i] - horner) < 1e-10);
    }
    std::vector<cplx> c = kernels::eval_series_at_points(coeffs, points);
    for (size_t i = 0; i < points.size(); ++i) CHECK(std::abs(c[i] - a[i]) < 1e-11);
}

TEST_CASE("coefficients_from_circle: parallel equals serial, recovers polynomials") {
    const int M = 128, K = 20;
    std::vector<cplx> poly = rand_vec(K + 1);
    std::vector<cplx> samples(M);
    for (int j = 0; j < M; ++j) {
        cplx z = unit(2.0 * pi * j / M), acc{0.0, 0.0}, zk{1.0, 0.0};
        for (const cplx& c : poly) {
            acc += c * zk;
            zk *= z;
        }
        samples[static_cast<size_t>(j)] = acc;
    }
    std::vector<cplx> a, b;
    kernels::serial::coefficients_from_circle(samples, K, a);
    kernels::par::coefficients_from_circle(samples, K, b);
    REQUIRE(a.size() == static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        CHECK(std::abs(a[static_cast<size_t>(k)] - b[static_cast<size_t>(k)]) < 1e-12);
        CHECK(std::abs(a[static_cast<size_t>(k)] - poly[static_cast<size_t>(k)]) < 1e-12);
    }
}

TEST_CASE("weighted_gram: parallel equals serial equals the definition") {
    const int n = 60, ca = 7, cb = 5;
    MatrixXcd A = rand_mat(n, ca), B = rand_mat(n, cb);
    VectorXd w(n);
    for (int i = 0; i < n; ++i) w(i) = 1.0 / (i + 1.0);
    MatrixXcd G1, G2;
    kernels::serial::weighted_gram(A, B, w, G1);
    kernels::par::weighted_gram(A, B, w, G2);
    MatrixXcd want = A.adjoint() * w.asDiagonal() * B;
    CHECK((G1 - want).norm() < 1e-12);
    CHECK((G1 - G2).norm() < 1e-12);
    CHECK((kernels::weighted_gram(A, B, w) - want).norm() < 1e-12);
}

TEST_CASE("adjoint_apply_batch: parallel equals serial equals the definition") {
    const int n = 80, cols = 6, symlen = 30;
    std::vector<cplx> symbol = rand_vec(symlen);
    VectorXd w(n);
    for (int i = 0; i < n; ++i) w(i) = i + 1.0;
    MatrixXcd F = rand_mat(n, cols);
    MatrixXcd O1, O2;
    kernels::serial::adjoint_apply_batch(symbol, w, F, O1);
    kernels::par::adjoint_apply_batch(symbol, w, F, O2);
    CHECK((O1 - O2).norm() < 1e-11);
    for (int c = 0; c < cols; ++c)
        for (int k = 0; k < n; ++k) {
            cplx acc{0.0, 0.0};
            for (int m = k; m < n && m - k < symlen; ++m)
                acc += w(m) * F(m, c) * std::conj(symbol[static_cast<size_t>(m - k)]);
            CHECK(std::abs(O1(k, c) - acc / w(k)) < 1e-10);
        }
    CHECK((kernels::adjoint_apply_batch(symbol, w, F) - O1).norm() < 1e-11);
}

TEST_CASE("commutator_map: parallel equals serial and encodes both commutators") {
    const int d = 9;
    MatrixXcd T = rand_mat(d, d);
    MatrixXcd L1, L2;
    kernels::serial::commutator_map(T, L1);
    kernels::par::commutator_map(T, L2);
    REQUIRE(L1.rows() == 2 * d * d);
    REQUIRE(L1.cols() == d * d);
    CHECK((L1 - L2).norm() < 1e-12);
    // apply to a random A and compare with the dense commutators
    MatrixXcd A = rand_mat(d, d);
    Eigen::VectorXcd vecA = Eigen::Map<Eigen::VectorXcd>(A.data(), d * d);
    Eigen::VectorXcd out = L1 * vecA;
    MatrixXcd C1 = A * T - T * A;
    MatrixXcd C2 = A * T.adjoint() - T.adjoint() * A;
    Eigen::VectorXcd want(2 * d * d);
    want.head(d * d) = Eigen::Map<Eigen::VectorXcd>(C1.data(), d * d);
    want.tail(d * d) = Eigen::Map<Eigen::VectorXcd>(C2.data(), d * d);
    CHECK((out - want).norm() < 1e-11);
    CHECK((kernels::commutator_map(T) - L1).norm() < 1e-12);
}
