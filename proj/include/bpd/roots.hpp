#ifndef BPD_ROOTS_HPP
#define BPD_ROOTS_HPP

#include <utility>
#include <vector>

#include "bpd/power_series.hpp"

namespace bpd {

struct RootCluster {
    cplx location;
    int multiplicity;
};

struct RootOptions {
    double tol_cluster = 1e-7;  // relative to max root modulus (floored at 1)
    double tol_root = 1e-10;    // residual acceptance relative to coeff norm
};

/// All complex roots of p with multiplicity, via companion-matrix
/// eigenvalues, one Newton polish per root, and distance clustering.
/// Throws std::domain_error for degree < 1 and numerical_failure when a
/// polished root fails the residual check.
std::vector<RootCluster> poly_roots(const Polynomial& p, const RootOptions& opt = {});

/// Re-cluster a point list at a caller-chosen absolute tolerance.  Used by
/// the structural pattern tests, which know their doublets are exact.
std::vector<RootCluster> cluster_points(const std::vector<cplx>& pts, double tol);

}  // namespace bpd

#endif
