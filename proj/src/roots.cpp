#include "bpd/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace bpd {

namespace {

// One guarded Newton step; skipped when the derivative is too small
// relative to the polynomial scale (multiple-root neighborhood).
cplx polish(const Polynomial& p, const Polynomial& dp, cplx r) {
    double scale = p.coeff_norm();
    for (int it = 0; it < 2; ++it) {
        cplx d = dp.eval(r);
        if (std::abs(d) < 1e-8 * scale) break;
        cplx step = p.eval(r) / d;
        if (!is_finite(step) || std::abs(step) > 0.5) break;
        r -= step;
    }
    return r;
}

}  // namespace

std::vector<RootCluster> cluster_points(const std::vector<cplx>& pts, double tol) {
    std::vector<RootCluster> out;
    std::vector<bool> used(pts.size(), false);
    for (size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) continue;
        // grow the cluster transitively
        std::vector<size_t> members{i};
        used[i] = true;
        for (size_t m = 0; m < members.size(); ++m) {
            for (size_t j = 0; j < pts.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(pts[j] - pts[members[m]]) <= tol) {
                    used[j] = true;
                    members.push_back(j);
                }
            }
        }
        cplx centroid{0.0, 0.0};
        for (size_t m : members) centroid += pts[m];
        centroid /= double(members.size());
        out.push_back({centroid, int(members.size())});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

std::vector<RootCluster> poly_roots(const Polynomial& raw, const RootOptions& opt) {
    if (raw.degree() < 1) throw std::domain_error("poly_roots: degree must be >= 1");

    // Deflate leading coefficients that are zero up to rounding (roots at
    // infinity); otherwise the companion matrix produces a huge spurious
    // eigenvalue that poisons the modulus-relative cluster tolerance.
    std::vector<cplx> cs = raw.coeffs();
    double cscale = raw.coeff_norm();
    while (cs.size() > 1 && std::abs(cs.back()) <= 1e-13 * cscale) cs.pop_back();
    Polynomial p(std::move(cs));
    int deg = p.degree();
    if (deg < 1) throw numerical_failure("poly_roots: polynomial is numerically constant");

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    cplx lead = p.leading();
    for (int k = 0; k < deg; ++k) companion(k, deg - 1) = -p.coeff(k) / lead;
    for (int k = 1; k < deg; ++k) companion(k, k - 1) = 1.0;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw numerical_failure("poly_roots: eigensolver failed");

    Polynomial dp = p.derivative();
    std::vector<cplx> roots(static_cast<size_t>(deg));
    double maxmod = 0.0;
    for (int k = 0; k < deg; ++k) {
        roots[size_t(k)] = polish(p, dp, es.eigenvalues()(k));
        maxmod = std::max(maxmod, std::abs(roots[size_t(k)]));
    }

    double tol = opt.tol_cluster * std::max(1.0, maxmod);
    std::vector<RootCluster> clusters = cluster_points(roots, tol);

    // multiplicity-aware polish of cluster centroids
    double scale = p.coeff_norm();
    for (RootCluster& c : clusters) {
        if (c.multiplicity > 1) {
            for (int it = 0; it < 3; ++it) {
                cplx d = dp.eval(c.location);
                if (std::abs(d) < 1e-14 * scale) break;
                cplx step = double(c.multiplicity) * p.eval(c.location) / d;
                if (!is_finite(step) || std::abs(step) > tol * 10.0) break;
                c.location -= step;
            }
        }
        double residual = std::abs(p.eval(c.location));
        double bound = opt.tol_root * scale * std::pow(std::max(1.0, std::abs(c.location)), deg);
        // a cluster of m nearby eigenvalues carries residual ~ tol^m
        double cluster_allowance =
            c.multiplicity > 1 ? std::pow(tol * 4.0, c.multiplicity) * scale : 0.0;
        if (residual > std::max(bound, cluster_allowance))
            throw numerical_failure("poly_roots: root residual check failed");
    }
    return clusters;
}

}  // namespace bpd
