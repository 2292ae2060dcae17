#include "bpd/kernels.hpp"

#include <cmath>

namespace bpd::kernels {

namespace serial {

void eval_series_at_points(const std::vector<cplx>& coeffs, const std::vector<cplx>& points,
                           std::vector<cplx>& out) {
    out.resize(points.size());
    for (size_t j = 0; j < points.size(); ++j) {
        cplx acc{0.0, 0.0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * points[j] + *it;
        out[j] = acc;
    }
}

void coefficients_from_circle(const std::vector<cplx>& samples, int K, std::vector<cplx>& out) {
    const int M = static_cast<int>(samples.size());
    out.assign(size_t(K) + 1, cplx{0.0, 0.0});
    for (int k = 0; k <= K; ++k) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < M; ++j) acc += samples[size_t(j)] * unit(-2.0 * pi * j * k / M);
        out[size_t(k)] = acc / double(M);
    }
}

void weighted_gram(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                   const Eigen::VectorXd& w, Eigen::MatrixXcd& G) {
    G.resize(A.cols(), B.cols());
    for (Eigen::Index i = 0; i < A.cols(); ++i)
        for (Eigen::Index j = 0; j < B.cols(); ++j) {
            cplx acc{0.0, 0.0};
            for (Eigen::Index m = 0; m < A.rows(); ++m)
                acc += w(m) * std::conj(A(m, i)) * B(m, j);
            G(i, j) = acc;
        }
}

void adjoint_apply_batch(const std::vector<cplx>& symbol, const Eigen::VectorXd& w,
                         const Eigen::MatrixXcd& F, Eigen::MatrixXcd& out) {
    const Eigen::Index n = F.rows();
    out.resize(n, F.cols());
    for (Eigen::Index c = 0; c < F.cols(); ++c) {
        for (Eigen::Index k = 0; k < n; ++k) {
            cplx acc{0.0, 0.0};
            for (Eigen::Index m = k; m < n; ++m) {
                size_t lag = size_t(m - k);
                if (lag < symbol.size())
                    acc += w(m) * F(m, c) * std::conj(symbol[lag]);
            }
            out(k, c) = acc / w(k);
        }
    }
}

void commutator_map(const Eigen::MatrixXcd& T, Eigen::MatrixXcd& L) {
    const Eigen::Index d = T.rows();
    const Eigen::Index d2 = d * d;
    L.setZero(2 * d2, d2);
    const Eigen::MatrixXcd Th = T.adjoint();
    // [A,T] = A T - T A; vec-column (q,p) of A contributes to rows of block 0,
    // [A,T^H] to block 1.  Column index of vec(A): col = q*d + p for A(p,q).
    for (Eigen::Index q = 0; q < d; ++q) {
        for (Eigen::Index p = 0; p < d; ++p) {
            Eigen::Index col = q * d + p;
            // (A T)(i,j) = sum_q A(i,q) T(q,j): entry A(p,q) feeds row (p + j*d) with T(q,j)
            for (Eigen::Index j = 0; j < d; ++j) {
                L(j * d + p, col) += T(q, j);
                L(d2 + j * d + p, col) += Th(q, j);
            }
            // (T A)(i,j) = sum_p T(i,p) A(p,j): entry A(p,q) feeds row (i + q*d) with -T(i,p)
            for (Eigen::Index i = 0; i < d; ++i) {
                L(q * d + i, col) -= T(i, p);
                L(d2 + q * d + i, col) -= Th(i, p);
            }
        }
    }
}

}  // namespace serial

namespace par {

void eval_series_at_points(const std::vector<cplx>& coeffs, const std::vector<cplx>& points,
                           std::vector<cplx>& out) {
    out.resize(points.size());
    const auto n = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static)
    for (long long j = 0; j < n; ++j) {
        cplx acc{0.0, 0.0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * points[size_t(j)] + *it;
        out[size_t(j)] = acc;
    }
}

void coefficients_from_circle(const std::vector<cplx>& samples, int K, std::vector<cplx>& out) {
    const int M = static_cast<int>(samples.size());
    out.assign(size_t(K) + 1, cplx{0.0, 0.0});
#pragma omp parallel for schedule(static)
    for (int k = 0; k <= K; ++k) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < M; ++j) acc += samples[size_t(j)] * unit(-2.0 * pi * j * k / M);
        out[size_t(k)] = acc / double(M);
    }
}

void weighted_gram(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                   const Eigen::VectorXd& w, Eigen::MatrixXcd& G) {
    G.resize(A.cols(), B.cols());
    const auto cols = static_cast<long long>(B.cols());
#pragma omp parallel for schedule(static)
    for (long long j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < A.cols(); ++i) {
            cplx acc{0.0, 0.0};
            for (Eigen::Index m = 0; m < A.rows(); ++m)
                acc += w(m) * std::conj(A(m, i)) * B(m, Eigen::Index(j));
            G(i, Eigen::Index(j)) = acc;
        }
}

void adjoint_apply_batch(const std::vector<cplx>& symbol, const Eigen::VectorXd& w,
                         const Eigen::MatrixXcd& F, Eigen::MatrixXcd& out) {
    const Eigen::Index n = F.rows();
    out.resize(n, F.cols());
    const auto cols = static_cast<long long>(F.cols());
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < cols; ++c) {
        for (Eigen::Index k = 0; k < n; ++k) {
            cplx acc{0.0, 0.0};
            for (Eigen::Index m = k; m < n; ++m) {
                size_t lag = size_t(m - k);
                if (lag < symbol.size())
                    acc += w(m) * F(m, Eigen::Index(c)) * std::conj(symbol[lag]);
            }
            out(k, Eigen::Index(c)) = acc / w(k);
        }
    }
}

void commutator_map(const Eigen::MatrixXcd& T, Eigen::MatrixXcd& L) {
    const Eigen::Index d = T.rows();
    const Eigen::Index d2 = d * d;
    L.setZero(2 * d2, d2);
    const Eigen::MatrixXcd Th = T.adjoint();
    const auto dq = static_cast<long long>(d);
#pragma omp parallel for schedule(static)
    for (long long q = 0; q < dq; ++q) {
        for (Eigen::Index p = 0; p < d; ++p) {
            Eigen::Index col = Eigen::Index(q) * d + p;
            for (Eigen::Index j = 0; j < d; ++j) {
                L(j * d + p, col) += T(Eigen::Index(q), j);
                L(d2 + j * d + p, col) += Th(Eigen::Index(q), j);
            }
            for (Eigen::Index i = 0; i < d; ++i) {
                L(Eigen::Index(q) * d + i, col) -= T(i, p);
                L(d2 + Eigen::Index(q) * d + i, col) -= Th(i, p);
            }
        }
    }
}

}  // namespace par

namespace {
constexpr long long kParThreshold = 1 << 14;  // flop-count guess below which serial wins
}

std::vector<cplx> eval_series_at_points(const std::vector<cplx>& coeffs,
                                        const std::vector<cplx>& points) {
    std::vector<cplx> out;
    if (static_cast<long long>(coeffs.size()) * static_cast<long long>(points.size()) <
        kParThreshold)
        serial::eval_series_at_points(coeffs, points, out);
    else
        par::eval_series_at_points(coeffs, points, out);
    return out;
}

std::vector<cplx> coefficients_from_circle(const std::vector<cplx>& samples, int K) {
    std::vector<cplx> out;
    if (static_cast<long long>(samples.size()) * (K + 1) < kParThreshold)
        serial::coefficients_from_circle(samples, K, out);
    else
        par::coefficients_from_circle(samples, K, out);
    return out;
}

Eigen::MatrixXcd weighted_gram(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                               const Eigen::VectorXd& w) {
    Eigen::MatrixXcd G;
    if (A.cols() * B.cols() * A.rows() < kParThreshold)
        serial::weighted_gram(A, B, w, G);
    else
        par::weighted_gram(A, B, w, G);
    return G;
}

Eigen::MatrixXcd adjoint_apply_batch(const std::vector<cplx>& symbol, const Eigen::VectorXd& w,
                                     const Eigen::MatrixXcd& F) {
    Eigen::MatrixXcd out;
    if (F.rows() * F.rows() * F.cols() < kParThreshold)
        serial::adjoint_apply_batch(symbol, w, F, out);
    else
        par::adjoint_apply_batch(symbol, w, F, out);
    return out;
}

Eigen::MatrixXcd commutator_map(const Eigen::MatrixXcd& T) {
    Eigen::MatrixXcd L;
    if (T.rows() * T.rows() * T.rows() < kParThreshold)
        serial::commutator_map(T, L);
    else
        par::commutator_map(T, L);
    return L;
}

}  // namespace bpd::kernels
