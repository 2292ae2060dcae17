#ifndef BPD_SPACES_HPP
#define BPD_SPACES_HPP

#include <functional>
#include <string>
#include <vector>

#include "bpd/blaschke.hpp"
#include "bpd/power_series.hpp"

namespace bpd {

/// The three coefficient-weighted Hilbert spaces: ||z^k||^2 = weight(k).
enum class Space { Hardy, Bergman, Dirichlet };

double space_weight(Space s, int k);
std::string space_name(Space s);

/// Element of one of the spaces as a truncated coefficient vector.
struct CoeffVector {
    PowerSeries coeffs;
    Space space = Space::Dirichlet;

    CoeffVector() = default;
    CoeffVector(PowerSeries c, Space s) : coeffs(std::move(c)), space(s) {}

    int truncation() const { return coeffs.truncation(); }
    cplx coeff(int k) const { return coeffs.coeff(k); }
    cplx eval(cplx z) const { return coeffs.eval(z); }
};

/// sum_k weight(k) f_k conj(g_k); spaces must match.
cplx inner(const CoeffVector& f, const CoeffVector& g);
double norm(const CoeffVector& f);
/// Bound on the inner-product error from the two coefficient tails.
double inner_tail_bound(const CoeffVector& f, const CoeffVector& g);

/// sum_k k |f_k|^2 (the energy part of the Dirichlet norm).
double dirichlet_energy(const CoeffVector& f);
/// Energy bilinear form sum_k k f_k conj(g_k).
cplx dirichlet_energy_pair(const CoeffVector& f, const CoeffVector& g);

/// Truncated reproducing kernel of the space at lambda.
CoeffVector kernel_vector(cplx lambda, Space space, int N);

/// Poisson kernel (1-|lambda|^2)/|zeta-lambda|^2 for |zeta| = 1.
double poisson_eval(cplx lambda, cplx zeta);

/// Trapezoidal (uniform-grid) quadrature of f * conj(g) over the unit
/// circle with M nodes.
cplx circle_pair_integral(const CoeffVector& f, const CoeffVector& g, int M);
cplx circle_pair_integral(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g,
                          int M);

/// Default node count for the instance: max(256, 8 * N_effective) where
/// N_effective is the first index with all later |coefficients| < 1e-14.
int default_quadrature_nodes(const PowerSeries& s);

/// The unitary D -> Bergman, f -> (zf)': coefficient map c_k -> (k+1) c_k.
CoeffVector u_map(const CoeffVector& f);
/// Inverse of u_map (Bergman -> Dirichlet).
CoeffVector u_map_inverse(const CoeffVector& f);

/// Bergman-space unitary f -> f(phi_alpha) q_alpha with
/// q_alpha = (1-|alpha|^2)/(1-conj(alpha) z)^2; computed by circle
/// sampling and coefficient extraction.
CoeffVector bergman_moebius_unitary(cplx alpha, const CoeffVector& f);

/// (f - f(0))/z realized as an exact coefficient shift when f(0) = 0
/// within tolerance; general helper for the subspace generators.
CoeffVector shift_down(const CoeffVector& f, double tol = 1e-12);

}  // namespace bpd

#endif
