#include "bpd/blaschke.hpp"

#include <algorithm>
#include <cmath>

namespace bpd {

Moebius::Moebius(cplx lambda) : lambda_(lambda) {
    require_in_disc(lambda, "Moebius lambda");
}

cplx Moebius::eval(cplx z) const {
    return (lambda_ - z) / (1.0 - std::conj(lambda_) * z);
}

BlaschkeProduct::BlaschkeProduct(double phase, std::vector<cplx> zeros, double margin)
    : phase_(std::fmod(phase, 2.0 * pi)), zeros_(std::move(zeros)), margin_(margin) {
    if (phase_ < 0.0) phase_ += 2.0 * pi;
    if (zeros_.empty()) throw std::domain_error("BlaschkeProduct: at least one zero required");
    for (const cplx& z : zeros_) {
        require_finite(z, "BlaschkeProduct zero");
        if (std::abs(z) > 1.0 - margin)
            throw std::domain_error("BlaschkeProduct: zero too close to the unit circle");
    }
}

BlaschkeProduct BlaschkeProduct::power(int n, double phase) {
    if (n < 1) throw std::domain_error("BlaschkeProduct::power: order must be >= 1");
    // z^n = (-1)^n phi_0^n
    std::vector<cplx> zeros(size_t(n), cplx{0.0, 0.0});
    return BlaschkeProduct(phase + (n % 2 ? pi : 0.0), std::move(zeros));
}

BlaschkeProduct BlaschkeProduct::factor(cplx lambda, double margin) {
    return BlaschkeProduct(0.0, {lambda}, margin);
}

BlaschkeProduct BlaschkeProduct::from_zeros(std::vector<cplx> zeros, double margin) {
    return BlaschkeProduct(0.0, std::move(zeros), margin);
}

double BlaschkeProduct::max_zero_modulus() const {
    double m = 0.0;
    for (const cplx& z : zeros_) m = std::max(m, std::abs(z));
    return m;
}

cplx BlaschkeProduct::eval(cplx z) const {
    require_finite(z, "BlaschkeProduct::eval argument");
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("BlaschkeProduct::eval: point outside the closed disc");
    cplx acc = unimodular();
    for (const cplx& lam : zeros_) acc *= (lam - z) / (1.0 - std::conj(lam) * z);
    return acc;
}

Polynomial BlaschkeProduct::numerator() const {
    Polynomial p = Polynomial::constant(unimodular());
    for (const cplx& lam : zeros_) p = p * Polynomial::linear(lam, {-1.0, 0.0});
    return p;
}

Polynomial BlaschkeProduct::denominator() const {
    Polynomial q = Polynomial::constant({1.0, 0.0});
    for (const cplx& lam : zeros_) q = q * Polynomial::linear({1.0, 0.0}, -std::conj(lam));
    return q;
}

PowerSeries BlaschkeProduct::taylor(int N) const {
    if (N < 0) throw std::domain_error("BlaschkeProduct::taylor: N must be >= 0");
    Polynomial num = numerator();
    std::vector<cplx> c(size_t(N) + 1, cplx{0.0, 0.0});
    for (int k = 0; k <= std::min(N, num.degree()); ++k) c[size_t(k)] = num.coeff(k);
    double rate = max_zero_modulus();
    PowerSeries s = rate > 0.0 ? PowerSeries::with_decay(std::move(c), rate)
                               : PowerSeries::polynomial(std::move(c));
    for (const cplx& lam : zeros_)
        if (lam != cplx{0.0, 0.0}) s = series_div_linear(s, lam);
    // |coefficients| of an inner function are <= 1; tighten the recorded bound
    if (rate > 0.0) {
        PowerSeries t = PowerSeries::with_decay(std::move(s.coeffs), rate);
        t.tail_bound = std::min(t.tail_bound, std::pow(rate, N + 1) / (1.0 - rate) *
                                                  std::max(1.0, t.growth));
        return t;
    }
    return s;
}

PowerSeries BlaschkeProduct::taylor_auto(double tol) const {
    int N = std::max(order(), default_truncation(max_zero_modulus(), tol));
    return taylor(N);
}

Polynomial BlaschkeProduct::derivative_numerator() const {
    Polynomial P = numerator();
    Polynomial Q = denominator();
    return P.derivative() * Q - P * Q.derivative();
}

cplx BlaschkeProduct::derivative_eval(cplx z) const {
    Polynomial Q = denominator();
    cplx q = Q.eval(z);
    return derivative_numerator().eval(z) / (q * q);
}

CriticalSet critical_points(const BlaschkeProduct& B, const RootOptions& opt) {
    if (B.order() < 2) throw std::domain_error("critical_points: order must be >= 2");
    std::vector<RootCluster> all = poly_roots(B.derivative_numerator(), opt);
    CriticalSet cs;
    int total = 0;
    for (const RootCluster& r : all) {
        if (std::abs(r.location) < 1.0) {
            cs.points.push_back(r);
            total += r.multiplicity;
        }
    }
    if (total != B.order() - 1)
        throw numerical_failure("critical_points: in-disc multiplicity count mismatch");
    return cs;
}

std::vector<RootCluster> preimages(const BlaschkeProduct& B, cplx w, const RootOptions& opt) {
    require_in_disc(w, "preimages target");
    Polynomial p = B.numerator() - (w * B.denominator());
    std::vector<RootCluster> roots = poly_roots(p, opt);
    int total = 0;
    for (const RootCluster& r : roots) total += r.multiplicity;
    if (total != B.order())
        throw numerical_failure("preimages: root count does not match the order");
    for (const RootCluster& r : roots) {
        if (std::abs(r.location) >= 1.0)
            throw numerical_failure("preimages: root escaped the open disc");
        if (r.multiplicity == 1 && std::abs(B.eval(r.location) - w) > 1e-8)
            throw numerical_failure("preimages: residual check failed");
    }
    return roots;
}

BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner) {
    std::vector<cplx> zeros;
    zeros.reserve(size_t(outer.order()) * size_t(inner.order()));
    for (const cplx& alpha : outer.zeros()) {
        for (const RootCluster& r : preimages(inner, alpha))
            for (int m = 0; m < r.multiplicity; ++m) zeros.push_back(r.location);
    }
    double margin = std::min(outer.margin(), inner.margin());
    BlaschkeProduct bare(0.0, zeros, margin);

    cplx z0{0.0, 0.0};
    if (std::abs(bare.eval(z0)) < 1e-8) z0 = cplx{0.5, 0.0};
    cplx target = outer.eval(inner.eval(z0));
    cplx a = target / bare.eval(z0);
    if (std::abs(std::abs(a) - 1.0) > 1e-8)
        throw numerical_failure("compose: phase normalization is not unimodular");
    a = normalize_unimodular(a);

    BlaschkeProduct result(std::arg(a), std::move(zeros), margin);
    // spot check
    for (int j = 0; j < 8; ++j) {
        cplx z = 0.7 * unit(2.0 * pi * j / 8.0 + 0.13);
        if (std::abs(result.eval(z) - outer.eval(inner.eval(z))) > 1e-8)
            throw numerical_failure("compose: residual check failed");
    }
    return result;
}

BlaschkeProduct moebius_post_compose(const Moebius& mu, const BlaschkeProduct& B) {
    std::vector<cplx> zeros;
    for (const RootCluster& r : preimages(B, mu.lambda()))
        for (int m = 0; m < r.multiplicity; ++m) zeros.push_back(r.location);
    BlaschkeProduct bare(0.0, zeros, B.margin());

    cplx z0{0.0, 0.0};
    if (std::abs(bare.eval(z0)) < 1e-8) z0 = cplx{0.5, 0.0};
    cplx target = mu.eval(B.eval(z0));
    cplx a = target / bare.eval(z0);
    if (std::abs(std::abs(a) - 1.0) > 1e-8)
        throw numerical_failure("moebius_post_compose: phase normalization failed");
    a = normalize_unimodular(a);
    return BlaschkeProduct(std::arg(a), std::move(zeros), B.margin());
}

}  // namespace bpd
