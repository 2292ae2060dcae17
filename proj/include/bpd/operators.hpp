#ifndef BPD_OPERATORS_HPP
#define BPD_OPERATORS_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "bpd/blaschke.hpp"
#include "bpd/spaces.hpp"

namespace bpd {

constexpr double default_tol_red = 1e-7;

/// (N+1)x(N+1) matrix of M_phi in the orthonormal monomial basis
/// e_k = z^k / sqrt(weight(k)); lower triangular with
/// entry (j,k) = phihat(j-k) nu_j / nu_k.
struct TruncatedOperator {
    Eigen::MatrixXcd matrix;
    Space space;
    BlaschkeProduct symbol;
    double trunc_error;
};

/// Orthonormal family spanning a (truncated) closed subspace.  Columns are
/// coordinates in the orthonormal monomial basis of the space.
struct SubspaceBasis {
    Eigen::MatrixXcd Q;
    Space space = Space::Dirichlet;
    std::string label;

    int dim() const { return static_cast<int>(Q.cols()); }
    int truncation() const { return static_cast<int>(Q.rows()) - 1; }
    CoeffVector vector(int i) const;
    /// Largest deviation of the Gram matrix from the identity.
    double gram_defect() const;
};

struct ResidualReport {
    double invariance_residual = 0.0;
    double adjoint_invariance_residual = 0.0;
    double tolerance = default_tol_red;
    bool reducing = false;
};

struct CommutantProbeResult {
    std::vector<double> singular_values;  // ascending, the lowest few
    int estimated_dimension = 1;
    double gap_ratio = 0.0;
    bool conclusive = false;
};

// coordinate helpers
Eigen::VectorXcd to_coords(const CoeffVector& f, int N);
CoeffVector from_coords(const Eigen::VectorXcd& u, Space space, double decay_rate = 0.0);

TruncatedOperator mult_matrix(const BlaschkeProduct& phi, Space space, int N);

/// Exact multiplication adjoint: coefficient k of the output is
/// <f, phi z^k> / weight(k), free of matrix-truncation artifacts.
CoeffVector adjoint_apply(const BlaschkeProduct& phi, const CoeffVector& f);

/// Orthonormalized span of a coordinate family (rank decided at tol).
SubspaceBasis orthonormalize(Eigen::MatrixXcd cols, Space space, double tol = 1e-10,
                             std::string label = {});

/// Orthonormalized closure of {phi^j g : 0 <= j <= J, g generator} at the
/// generators' truncation; J = 0 means automatic (stop once the projector
/// stops moving, cap 4N/order).
SubspaceBasis orbit_subspace(const std::vector<CoeffVector>& generators,
                             const BlaschkeProduct& phi, int J = 0, std::string label = {});

/// span{z^j, z^{j+n}, ...} up to degree maxdeg (inclusive), inside the
/// ambient truncation N.
SubspaceBasis monomial_class_subspace(Space space, int N, int residue, int modulus, int maxdeg,
                                      std::string label = {});

/// Orthogonal complement of S within the coefficient window, obtained by
/// extending S's basis to a full unitary (K is clamped to the truncation).
SubspaceBasis complement_subspace(const SubspaceBasis& S, int K, std::string label = {});

/// || (I - P_S) T P_S ||_2 and the adjoint analogue (via adjoint_apply).
ResidualReport reducing_residual(const SubspaceBasis& S, const BlaschkeProduct& phi,
                                 double tol_red = default_tol_red);

/// Orthonormal basis of ker M_phi* on the truncated space (spanned by the
/// reproducing kernels at the zeros of phi, with derivative kernels at
/// repeated zeros); dimension is always the order of phi.
SubspaceBasis adjoint_kernel_basis(const BlaschkeProduct& phi, Space space, int N,
                                   double tol_ker = 1e-6);

/// dim(S ominus phi S) for a reducing S, computed as dim(S ∩ ker M_phi*):
/// counts principal cosines between S and the adjoint kernel above 0.9;
/// values inside (0.1, 0.9) signal a truncation breakdown (for genuinely
/// reducing S the kernel splits cleanly across S and its complement).
int wandering_dim(const SubspaceBasis& S, const BlaschkeProduct& phi, double tol = 0.4);

/// Smallest singular values of A -> ([A,T], [A,T*]) on matrix space;
/// estimated_dimension counts those below eps.
CommutantProbeResult commutant_probe(const BlaschkeProduct& phi, Space space, int N,
                                     double eps = 1e-6);

/// Image of a Dirichlet subspace under f -> (zf)', re-orthonormalized.
SubspaceBasis u_pushforward(const SubspaceBasis& S);

/// || Q1^H Q2 ||_2 between two bases of the same space.
double cross_gram_norm(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace bpd

#endif
