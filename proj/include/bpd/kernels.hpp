#ifndef BPD_KERNELS_HPP
#define BPD_KERNELS_HPP

#include <Eigen/Dense>

#include <vector>

#include "bpd/complex_util.hpp"

// Data-parallel inner loops.  Each kernel has a serial reference
// implementation under kernels::serial and an OpenMP version under
// kernels::par; the unprefixed entry points dispatch on problem size.
// The test suite checks par against serial, and bench/ times both.

namespace bpd::kernels {

namespace serial {

/// out[j] = sum_k coeffs[k] * points[j]^k
void eval_series_at_points(const std::vector<cplx>& coeffs, const std::vector<cplx>& points,
                           std::vector<cplx>& out);

/// Discrete Cauchy coefficients from M uniform unit-circle samples:
/// out[k] = (1/M) sum_j samples[j] e^{-2 pi i j k / M}, k = 0..K.
void coefficients_from_circle(const std::vector<cplx>& samples, int K, std::vector<cplx>& out);

/// G = A^H diag(w) B  (weighted cross-Gram of coefficient columns).
void weighted_gram(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                   const Eigen::VectorXd& w, Eigen::MatrixXcd& G);

/// Exact multiplication adjoint applied to every column of F:
/// out(k,c) = (1/w_k) sum_{m>=k} w_m F(m,c) conj(symbol[m-k]).
void adjoint_apply_batch(const std::vector<cplx>& symbol, const Eigen::VectorXd& w,
                         const Eigen::MatrixXcd& F, Eigen::MatrixXcd& out);

/// Matrix of A -> stack([A,T], [A,T^H]) acting on vec(A), column-major:
/// rows 2 d^2, cols d^2 for d = T.rows().
void commutator_map(const Eigen::MatrixXcd& T, Eigen::MatrixXcd& L);

}  // namespace serial

namespace par {

void eval_series_at_points(const std::vector<cplx>& coeffs, const std::vector<cplx>& points,
                           std::vector<cplx>& out);
void coefficients_from_circle(const std::vector<cplx>& samples, int K, std::vector<cplx>& out);
void weighted_gram(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                   const Eigen::VectorXd& w, Eigen::MatrixXcd& G);
void adjoint_apply_batch(const std::vector<cplx>& symbol, const Eigen::VectorXd& w,
                         const Eigen::MatrixXcd& F, Eigen::MatrixXcd& out);
void commutator_map(const Eigen::MatrixXcd& T, Eigen::MatrixXcd& L);

}  // namespace par

// size-dispatching entry points used by the library
std::vector<cplx> eval_series_at_points(const std::vector<cplx>& coeffs,
                                        const std::vector<cplx>& points);
std::vector<cplx> coefficients_from_circle(const std::vector<cplx>& samples, int K);
Eigen::MatrixXcd weighted_gram(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                               const Eigen::VectorXd& w);
Eigen::MatrixXcd adjoint_apply_batch(const std::vector<cplx>& symbol, const Eigen::VectorXd& w,
                                     const Eigen::MatrixXcd& F);
Eigen::MatrixXcd commutator_map(const Eigen::MatrixXcd& T);

}  // namespace bpd::kernels

#endif
