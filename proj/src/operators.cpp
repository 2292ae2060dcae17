#include "bpd/operators.hpp"

#include <algorithm>
#include <cmath>

#include "bpd/kernels.hpp"

namespace bpd {

namespace {

Eigen::VectorXd weight_vector(Space s, int N) {
    Eigen::VectorXd w(N + 1);
    for (int k = 0; k <= N; ++k) w(k) = space_weight(s, k);
    return w;
}

Eigen::VectorXd nu_vector(Space s, int N) {
    Eigen::VectorXd nu(N + 1);
    for (int k = 0; k <= N; ++k) nu(k) = std::sqrt(space_weight(s, k));
    return nu;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

CoeffVector SubspaceBasis::vector(int i) const {
    Eigen::VectorXcd col = Q.col(i);
    return from_coords(col, space);
}

double SubspaceBasis::gram_defect() const {
    Eigen::MatrixXcd G = Q.adjoint() * Q;
    return (G - Eigen::MatrixXcd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
}

Eigen::VectorXcd to_coords(const CoeffVector& f, int N) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(N + 1);
    int n = std::min(N, f.truncation());
    for (int k = 0; k <= n; ++k) u(k) = std::sqrt(space_weight(f.space, k)) * f.coeff(k);
    return u;
}

CoeffVector from_coords(const Eigen::VectorXcd& u, Space space, double decay_rate) {
    std::vector<cplx> c(static_cast<size_t>(u.size()));
    for (int k = 0; k < u.size(); ++k) c[size_t(k)] = u(k) / std::sqrt(space_weight(space, k));
    PowerSeries s = decay_rate > 0.0 ? PowerSeries::with_decay(std::move(c), decay_rate)
                                     : PowerSeries::polynomial(std::move(c));
    return CoeffVector(std::move(s), space);
}

TruncatedOperator mult_matrix(const BlaschkeProduct& phi, Space space, int N) {
    if (N < phi.order()) throw std::invalid_argument("mult_matrix: N must be >= order");
    PowerSeries t = phi.taylor(N);
    Eigen::VectorXd nu = nu_vector(space, N);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    for (int k = 0; k <= N; ++k)
        for (int j = k; j <= N; ++j) m(j, k) = t.coeff(j - k) * nu(j) / nu(k);
    double numax = space == Space::Dirichlet ? nu(N) : 1.0;
    return TruncatedOperator{std::move(m), space, phi, t.tail_bound * numax};
}

CoeffVector adjoint_apply(const BlaschkeProduct& phi, const CoeffVector& f) {
    const int N = f.truncation();
    PowerSeries t = phi.taylor(N);
    Eigen::VectorXd w = weight_vector(f.space, N);
    Eigen::MatrixXcd F(N + 1, 1);
    for (int k = 0; k <= N; ++k) F(k, 0) = f.coeff(k);
    Eigen::MatrixXcd out = kernels::adjoint_apply_batch(t.coeffs, w, F);
    std::vector<cplx> c(size_t(N) + 1);
    for (int k = 0; k <= N; ++k) c[size_t(k)] = out(k, 0);
    double rate = std::max(f.coeffs.decay_rate, phi.max_zero_modulus());
    PowerSeries s = rate > 0.0 ? PowerSeries::with_decay(std::move(c), rate)
                               : PowerSeries::polynomial(std::move(c));
    return CoeffVector(std::move(s), f.space);
}

SubspaceBasis orthonormalize(Eigen::MatrixXcd cols, Space space, double tol, std::string label) {
    const Eigen::Index n = cols.rows();
    Eigen::MatrixXcd Q(n, cols.cols());
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols.cols(); ++c) {
        Eigen::VectorXcd v = cols.col(c);
        // modified Gram-Schmidt with one reorthogonalization pass
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < r; ++i) v -= (Q.col(i).adjoint() * v)(0) * Q.col(i);
        double nv = v.norm();
        if (nv > tol) {
            Q.col(r) = v / nv;
            ++r;
        }
    }
    SubspaceBasis S;
    S.Q = Q.leftCols(r);
    S.space = space;
    S.label = std::move(label);
    return S;
}

SubspaceBasis orbit_subspace(const std::vector<CoeffVector>& generators,
                             const BlaschkeProduct& phi, int J, std::string label) {
    if (generators.empty()) throw std::invalid_argument("orbit_subspace: no generators");
    Space space = generators.front().space;
    int N = generators.front().truncation();
    for (const CoeffVector& g : generators) {
        if (g.space != space) throw std::invalid_argument("orbit_subspace: space mismatch");
        N = std::max(N, g.truncation());
    }
    PowerSeries phit = phi.taylor(N);
    const int cap = J > 0 ? J : std::max(8, 4 * N / phi.order());
    const double tol_increment = 1e-10;

    double scale = 0.0;
    for (const CoeffVector& g : generators)
        scale = std::max(scale, to_coords(g, N).norm());

    Eigen::MatrixXcd Q(N + 1, 0);
    std::vector<PowerSeries> current;
    for (const CoeffVector& g : generators) current.push_back(series_resize(g.coeffs, N));

    for (int j = 0; j <= cap; ++j) {
        double max_increment = 0.0;
        for (size_t gi = 0; gi < current.size(); ++gi) {
            Eigen::VectorXcd v = to_coords(CoeffVector(current[gi], space), N);
            for (int pass = 0; pass < 2; ++pass)
                for (Eigen::Index i = 0; i < Q.cols(); ++i)
                    v -= (Q.col(i).adjoint() * v)(0) * Q.col(i);
            double nv = v.norm();
            max_increment = std::max(max_increment, nv);
            if (nv > tol_increment * std::max(1.0, scale)) {
                Q.conservativeResize(Eigen::NoChange, Q.cols() + 1);
                Q.col(Q.cols() - 1) = v / nv;
            }
        }
        if (j > 0 && max_increment <= tol_increment * std::max(1.0, scale)) break;
        if (j < cap)
            for (PowerSeries& s : current) s = series_mul(s, phit);
    }
    SubspaceBasis S;
    S.Q = std::move(Q);
    S.space = space;
    S.label = std::move(label);
    return S;
}

SubspaceBasis monomial_class_subspace(Space space, int N, int residue, int modulus, int maxdeg,
                                      std::string label) {
    std::vector<int> degs;
    for (int k = residue; k <= std::min(N, maxdeg); k += modulus) degs.push_back(k);
    Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(N + 1, Eigen::Index(degs.size()));
    for (size_t i = 0; i < degs.size(); ++i) Q(degs[i], Eigen::Index(i)) = 1.0;
    SubspaceBasis S;
    S.Q = std::move(Q);
    S.space = space;
    S.label = std::move(label);
    return S;
}

SubspaceBasis complement_subspace(const SubspaceBasis& S, int K, std::string label) {
    const int N = S.truncation();
    K = std::min(K, N);
    // Full unitary extension of S.Q: the trailing Householder-QR columns span the
    // orthogonal complement of S within the window exactly.
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(S.Q);
    Eigen::MatrixXcd full = qr.householderQ() * Eigen::MatrixXcd::Identity(N + 1, N + 1);
    SubspaceBasis C;
    C.Q = full.rightCols(N + 1 - S.dim());
    C.space = S.space;
    C.label = std::move(label);
    return C;
}

ResidualReport reducing_residual(const SubspaceBasis& S, const BlaschkeProduct& phi,
                                 double tol_red) {
    const int N = S.truncation();
    TruncatedOperator T = mult_matrix(phi, S.space, N);
    Eigen::MatrixXcd TQ = T.matrix * S.Q;
    Eigen::MatrixXcd R1 = TQ - S.Q * (S.Q.adjoint() * TQ);

    // adjoint side through the exact inner-product formula
    PowerSeries t = phi.taylor(N);
    Eigen::VectorXd w = weight_vector(S.space, N);
    Eigen::VectorXd nu = nu_vector(S.space, N);
    Eigen::MatrixXcd F(N + 1, S.dim());
    for (int c = 0; c < S.dim(); ++c)
        for (int k = 0; k <= N; ++k) F(k, c) = S.Q(k, c) / nu(k);
    Eigen::MatrixXcd A = kernels::adjoint_apply_batch(t.coeffs, w, F);
    for (int c = 0; c < S.dim(); ++c)
        for (int k = 0; k <= N; ++k) A(k, c) *= nu(k);
    Eigen::MatrixXcd R2 = A - S.Q * (S.Q.adjoint() * A);

    ResidualReport rep;
    rep.invariance_residual = spectral_norm(R1);
    rep.adjoint_invariance_residual = spectral_norm(R2);
    rep.tolerance = tol_red;
    rep.reducing =
        rep.invariance_residual <= tol_red && rep.adjoint_invariance_residual <= tol_red;
    return rep;
}

SubspaceBasis adjoint_kernel_basis(const BlaschkeProduct& phi, Space space, int N,
                                   double tol_ker) {
    TruncatedOperator T = mult_matrix(phi, space, N);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(T.matrix.adjoint(), Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();  // descending
    const int n = phi.order();
    int small = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) < tol_ker) ++small;
    if (small != n)
        throw numerical_failure("adjoint_kernel_basis: found " + std::to_string(small) +
                                " near-kernel directions, expected " + std::to_string(n));
    SubspaceBasis K;
    K.Q = svd.matrixV().rightCols(n);
    K.space = space;
    K.label = "ker_adjoint";
    return K;
}

int wandering_dim(const SubspaceBasis& S, const BlaschkeProduct& phi, double /*tol*/) {
    SubspaceBasis K = adjoint_kernel_basis(phi, S.space, S.truncation());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(K.Q.adjoint() * S.Q));
    int count = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        double s = svd.singularValues()(i);
        if (s > 0.9)
            ++count;
        else if (s > 0.1)
            throw numerical_failure("wandering_dim: borderline principal cosine " +
                                    std::to_string(s) + " (truncation too coarse)");
    }
    return count;
}

CommutantProbeResult commutant_probe(const BlaschkeProduct& phi, Space space, int N, double eps) {
    TruncatedOperator T = mult_matrix(phi, space, N);
    Eigen::MatrixXcd L = kernels::commutator_map(T.matrix);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(L);
    Eigen::VectorXd sv = svd.singularValues();  // descending
    CommutantProbeResult res;
    const int keep = std::min<int>(16, int(sv.size()));
    for (int i = 0; i < keep; ++i) res.singular_values.push_back(sv(sv.size() - 1 - i));
    int dim = 0;
    for (double s : res.singular_values)
        if (s < eps) ++dim;
    if (dim == 0) dim = 1;  // identity always commutes; eps was too tight
    res.estimated_dimension = dim;
    double last_accepted = res.singular_values[size_t(dim - 1)];
    double first_rejected = dim < int(res.singular_values.size())
                                ? res.singular_values[size_t(dim)]
                                : sv(0);
    res.gap_ratio = first_rejected / std::max(last_accepted, 1e-300);
    res.conclusive = res.gap_ratio >= 10.0;
    return res;
}

SubspaceBasis u_pushforward(const SubspaceBasis& S) {
    if (S.space != Space::Dirichlet)
        throw std::invalid_argument("u_pushforward: Dirichlet-space basis required");
    const int N = S.truncation();
    Eigen::MatrixXcd cols(N + 1, S.dim());
    for (int c = 0; c < S.dim(); ++c) {
        CoeffVector f = S.vector(c);
        CoeffVector g = u_map(f);
        cols.col(c) = to_coords(g, N);
    }
    return orthonormalize(std::move(cols), Space::Bergman, 1e-10, S.label);
}

double cross_gram_norm(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.space != b.space) throw std::invalid_argument("cross_gram_norm: space mismatch");
    return spectral_norm(Eigen::MatrixXcd(a.Q.adjoint() * b.Q));
}

}  // namespace bpd
