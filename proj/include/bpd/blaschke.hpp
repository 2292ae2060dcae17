#ifndef BPD_BLASCHKE_HPP
#define BPD_BLASCHKE_HPP

#include <vector>

#include "bpd/power_series.hpp"
#include "bpd/roots.hpp"

namespace bpd {

/// Disc automorphism phi_lambda(z) = (lambda - z)/(1 - conj(lambda) z).
/// Self-inverse: phi_lambda(phi_lambda(z)) = z.
class Moebius {
public:
    explicit Moebius(cplx lambda);
    cplx lambda() const { return lambda_; }
    cplx eval(cplx z) const;

private:
    cplx lambda_;
};

class BlaschkeProduct;

struct CriticalSet {
    std::vector<RootCluster> points;  // inside the disc, total multiplicity order-1
};

/// Finite Blaschke product: unimodular constant (stored as an angle) times
/// a product of Moebius factors phi_{lambda_i}.  Zeros are kept as a
/// multiset; every |lambda_i| <= 1 - delta.
class BlaschkeProduct {
public:
    static constexpr double default_margin = 1e-3;

    BlaschkeProduct(double phase, std::vector<cplx> zeros, double margin = default_margin);

    /// z^n with optional phase.
    static BlaschkeProduct power(int n, double phase = 0.0);
    /// Single Moebius factor phi_lambda.
    static BlaschkeProduct factor(cplx lambda, double margin = default_margin);
    /// Product from a list of zeros, unit constant.
    static BlaschkeProduct from_zeros(std::vector<cplx> zeros, double margin = default_margin);

    int order() const { return static_cast<int>(zeros_.size()); }
    double phase() const { return phase_; }
    cplx unimodular() const { return unit(phase_); }
    const std::vector<cplx>& zeros() const { return zeros_; }
    double max_zero_modulus() const;
    double margin() const { return margin_; }

    cplx eval(cplx z) const;
    /// Numerator a * prod (lambda_i - z) as a polynomial.
    Polynomial numerator() const;
    /// Denominator prod (1 - conj(lambda_i) z).
    Polynomial denominator() const;

    /// First N+1 Taylor coefficients; decay base max |lambda_i|.
    PowerSeries taylor(int N) const;
    /// Truncation chosen so the geometric tail falls below tol.
    PowerSeries taylor_auto(double tol = 1e-12) const;

    /// Polynomial p with phi' = p / prod(1 - conj(lambda_i) z)^2, deg <= 2n-2.
    Polynomial derivative_numerator() const;
    cplx derivative_eval(cplx z) const;

private:
    double phase_;
    std::vector<cplx> zeros_;
    double margin_;
};

/// Zeros of phi' inside the disc; throws numerical_failure if the total
/// multiplicity after clustering is not order-1.
CriticalSet critical_points(const BlaschkeProduct& B, const RootOptions& opt = {});

/// The n solutions of B(z) = w in the disc, with multiplicity.
std::vector<RootCluster> preimages(const BlaschkeProduct& B, cplx w, const RootOptions& opt = {});

/// Blaschke product equal to outer(inner(z)); order multiplies.
BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner);

/// Blaschke product equal to phi_mu(B(z)).
BlaschkeProduct moebius_post_compose(const Moebius& mu, const BlaschkeProduct& B);

}  // namespace bpd

#endif
