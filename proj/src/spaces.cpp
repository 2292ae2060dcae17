#include "bpd/spaces.hpp"

#include <cmath>

#include "bpd/kernels.hpp"

namespace bpd {

double space_weight(Space s, int k) {
    switch (s) {
        case Space::Hardy: return 1.0;
        case Space::Bergman: return 1.0 / double(k + 1);
        case Space::Dirichlet: return double(k + 1);
    }
    return 1.0;
}

std::string space_name(Space s) {
    switch (s) {
        case Space::Hardy: return "hardy";
        case Space::Bergman: return "bergman";
        case Space::Dirichlet: return "dirichlet";
    }
    return "?";
}

cplx inner(const CoeffVector& f, const CoeffVector& g) {
    if (f.space != g.space) throw std::invalid_argument("inner: space mismatch");
    int N = std::min(f.truncation(), g.truncation());
    cplx acc{0.0, 0.0};
    for (int k = 0; k <= N; ++k)
        acc += space_weight(f.space, k) * f.coeff(k) * std::conj(g.coeff(k));
    return acc;
}

double norm(const CoeffVector& f) {
    double acc = 0.0;
    for (int k = 0; k <= f.truncation(); ++k)
        acc += space_weight(f.space, k) * std::norm(f.coeff(k));
    return std::sqrt(acc);
}

double inner_tail_bound(const CoeffVector& f, const CoeffVector& g) {
    // weight(k) <= k+1 in all three spaces; bound the dropped terms by the
    // l-infinity coefficient bounds times the opposing tails
    int N = std::max(f.truncation(), g.truncation());
    double wf = double(N + 2);
    double fmax = std::max(f.coeffs.coeff_l1(), f.coeffs.growth);
    double gmax = std::max(g.coeffs.coeff_l1(), g.coeffs.growth);
    return wf * (fmax * g.coeffs.tail_bound + gmax * f.coeffs.tail_bound +
                 f.coeffs.tail_bound * g.coeffs.tail_bound);
}

double dirichlet_energy(const CoeffVector& f) {
    if (f.space != Space::Dirichlet)
        throw std::invalid_argument("dirichlet_energy: Dirichlet-space argument required");
    double acc = 0.0;
    for (int k = 1; k <= f.truncation(); ++k) acc += double(k) * std::norm(f.coeff(k));
    return acc;
}

cplx dirichlet_energy_pair(const CoeffVector& f, const CoeffVector& g) {
    if (f.space != Space::Dirichlet || g.space != Space::Dirichlet)
        throw std::invalid_argument("dirichlet_energy_pair: Dirichlet-space arguments required");
    cplx acc{0.0, 0.0};
    int N = std::min(f.truncation(), g.truncation());
    for (int k = 1; k <= N; ++k) acc += double(k) * f.coeff(k) * std::conj(g.coeff(k));
    return acc;
}

CoeffVector kernel_vector(cplx lambda, Space space, int N) {
    require_in_disc(lambda, "kernel_vector lambda");
    std::vector<cplx> c(size_t(N) + 1);
    cplx lb = std::conj(lambda);
    cplx p{1.0, 0.0};
    for (int k = 0; k <= N; ++k) {
        switch (space) {
            case Space::Hardy: c[size_t(k)] = p; break;
            case Space::Bergman: c[size_t(k)] = double(k + 1) * p; break;
            case Space::Dirichlet: c[size_t(k)] = p / double(k + 1); break;
        }
        p *= lb;
    }
    double rate = std::abs(lambda);
    PowerSeries s = rate > 0.0 ? PowerSeries::with_decay(std::move(c), rate)
                               : PowerSeries::polynomial(std::move(c));
    return CoeffVector(std::move(s), space);
}

double poisson_eval(cplx lambda, cplx zeta) {
    require_in_disc(lambda, "poisson_eval lambda");
    if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
        throw std::domain_error("poisson_eval: zeta must lie on the unit circle");
    return (1.0 - std::norm(lambda)) / std::norm(zeta - lambda);
}

namespace {
std::vector<cplx> circle_nodes(int M) {
    std::vector<cplx> nodes(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) nodes[size_t(j)] = unit(2.0 * pi * j / M);
    return nodes;
}
}  // namespace

cplx circle_pair_integral(const CoeffVector& f, const CoeffVector& g, int M) {
    std::vector<cplx> nodes = circle_nodes(M);
    std::vector<cplx> fv = kernels::eval_series_at_points(f.coeffs.coeffs, nodes);
    std::vector<cplx> gv = kernels::eval_series_at_points(g.coeffs.coeffs, nodes);
    cplx acc{0.0, 0.0};
    for (int j = 0; j < M; ++j) acc += fv[size_t(j)] * std::conj(gv[size_t(j)]);
    return acc / double(M);
}

cplx circle_pair_integral(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g,
                          int M) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < M; ++j) {
        cplx zeta = unit(2.0 * pi * j / M);
        acc += f(zeta) * std::conj(g(zeta));
    }
    return acc / double(M);
}

int default_quadrature_nodes(const PowerSeries& s) {
    int n_eff = 0;
    for (int k = 0; k <= s.truncation(); ++k)
        if (std::abs(s.coeff(k)) >= 1e-14) n_eff = k;
    return std::max(256, 8 * (n_eff + 1));
}

CoeffVector u_map(const CoeffVector& f) {
    if (f.space != Space::Dirichlet)
        throw std::invalid_argument("u_map: Dirichlet-space argument required");
    PowerSeries g = f.coeffs;
    for (int k = 0; k <= g.truncation(); ++k) g.coeffs[size_t(k)] *= double(k + 1);
    if (g.decay_rate > 0.0) {
        double r = g.decay_rate;
        g.tail_bound = f.coeffs.tail_bound * double(g.truncation() + 2) / (1.0 - r);
        g.growth *= double(g.truncation() + 1);
    }
    return CoeffVector(std::move(g), Space::Bergman);
}

CoeffVector u_map_inverse(const CoeffVector& f) {
    if (f.space != Space::Bergman)
        throw std::invalid_argument("u_map_inverse: Bergman-space argument required");
    PowerSeries g = f.coeffs;
    for (int k = 0; k <= g.truncation(); ++k) g.coeffs[size_t(k)] /= double(k + 1);
    g.tail_bound = f.coeffs.tail_bound;
    return CoeffVector(std::move(g), Space::Dirichlet);
}

CoeffVector bergman_moebius_unitary(cplx alpha, const CoeffVector& f) {
    require_in_disc(alpha, "bergman_moebius_unitary alpha");
    if (f.space != Space::Bergman)
        throw std::invalid_argument("bergman_moebius_unitary: Bergman-space argument required");
    const int N = f.truncation();
    // the composed function has a geometric tail with base |alpha| even for
    // polynomial input, with a polynomial-in-k factor from the pole of
    // order N+2 at 1/conj(alpha); triple the plain geometric window
    double rate = std::max(std::abs(alpha), f.coeffs.decay_rate);
    const int K = std::max(N, 3 * default_truncation(rate, 1e-13));
    const int M = std::max(default_quadrature_nodes(f.coeffs), 8 * (K + 1));
    Moebius phi(alpha);
    cplx ab = std::conj(alpha);
    double nf = 1.0 - std::norm(alpha);
    std::vector<cplx> samples(static_cast<size_t>(M));
    std::vector<cplx> nodes = circle_nodes(M);
    std::vector<cplx> mapped(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) mapped[size_t(j)] = phi.eval(nodes[size_t(j)]);
    std::vector<cplx> fv = kernels::eval_series_at_points(f.coeffs.coeffs, mapped);
    for (int j = 0; j < M; ++j) {
        cplx d = 1.0 - ab * nodes[size_t(j)];
        samples[size_t(j)] = fv[size_t(j)] * nf / (d * d);
    }
    std::vector<cplx> c = kernels::coefficients_from_circle(samples, K);
    PowerSeries s = rate > 0.0 ? PowerSeries::with_decay(std::move(c), rate)
                               : PowerSeries::polynomial(std::move(c));
    return CoeffVector(std::move(s), Space::Bergman);
}

CoeffVector shift_down(const CoeffVector& f, double tol) {
    return CoeffVector(series_shift_down(f.coeffs, tol), f.space);
}

}  // namespace bpd
