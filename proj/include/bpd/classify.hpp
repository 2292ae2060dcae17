#ifndef BPD_CLASSIFY_HPP
#define BPD_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpd/blaschke.hpp"
#include "bpd/operators.hpp"

namespace bpd {

enum class Verdict {
    case_i,
    case_ii,
    case_iii,
    case_iv,
    case_v,
    reducible_zn,
    irreducible,
    reducible_partial,
    undetermined,
};

std::string verdict_name(Verdict v);

/// Asserts phi = e^{i phase} phi_lambda(b^n) where b = z for alpha = 0 and
/// b = phi_alpha otherwise.
struct EquivalenceWitness {
    cplx lambda;
    double phase;
    int n;
    double residual;  // max pointwise defect of the asserted identity
    cplx alpha{0.0, 0.0};
};

/// phi = outer(inner(z)) with the degree-2 inner factor normalized as
/// phi_c^2; rho is the deck involution z -> phi_c(-phi_c(z)).
struct Decomposition {
    BlaschkeProduct outer;
    BlaschkeProduct inner;
    cplx critical_point;
    double involution_residual;
    double residual;
};

struct ClassifiedSubspace {
    SubspaceBasis basis;
    ResidualReport report;
    int wandering = 0;
};

struct ClassificationResult {
    int order = 0;
    Verdict verdict = Verdict::undetermined;
    std::optional<EquivalenceWitness> witness;
    std::vector<Decomposition> decompositions;
    std::optional<std::pair<cplx, cplx>> gamma_mu;  // case (iii) fiber data
    std::vector<ClassifiedSubspace> subspaces;      // minimal unless noted
    bool subspaces_minimal = true;                  // reducible_partial emits non-certified ones
    double max_pairwise_cross_gram = 0.0;
    long lattice_count = 0;  // 2^n - 2 when equivalent to z^n
    std::vector<std::string> inconsistencies;  // classification vs numerics disagreements
    int truncation = 0;
};

struct ClassifyOptions {
    int truncation = 0;  // 0 = automatic from the coefficient decay
    double tol_red = default_tol_red;
};

/// Rotation-orbit test on the zero multiset; on success the witness
/// identity phi = e^{i phase} phi_lambda(z^n) is verified pointwise.
std::optional<EquivalenceWitness> is_equivalent_to_zn(const BlaschkeProduct& phi);

/// All decompositions of an order-4 product through a degree-2 inner
/// factor, one per critical point whose deck involution fixes phi.
std::vector<Decomposition> decompose_order4(const BlaschkeProduct& phi);

/// Tests equivalence to (z phi_gamma)^2: returns (gamma, mu) with
/// mu = phi(0) and fiber pattern {0,0,gamma,gamma}, gamma != 0.
std::optional<std::pair<cplx, cplx>> is_equiv_z_phi_gamma_sq(const BlaschkeProduct& phi);

ClassificationResult classify(const BlaschkeProduct& phi, const ClassifyOptions& opt = {});

/// All 2^n - 2 proper reducing subspaces of M_{z^n} on the Dirichlet
/// space: direct sums of nonempty proper subsets of the monomial classes.
std::vector<SubspaceBasis> enumerate_zn_lattice(int n, int N = 96);

struct JointNormScan {
    int n = 0;
    double min_joint_residual = 0.0;
    double argmin_x = 0.0;
};

/// With x = |alpha|^{2n}: A(x) = sum_{k>=0} x^k/(nk+2) and
/// B(x) = A(x) - 1/2; reports min over the grid of
/// max(|A(x)-1|, |B(x)-x/2|).  Joint feasibility would force x = 1.
JointNormScan check_joint_norm_infeasible(int n, const std::vector<double>& grid);

/// sum_{k>=0} x^k/(nk+2), 0 <= x < 1.
double joint_norm_series(int n, double x);

}  // namespace bpd

#endif
