#include "bpd/power_series.hpp"

#include <algorithm>
#include <cmath>

namespace bpd {

namespace {
constexpr double kTrimTol = 0.0;  // exact trim; callers trim numerically themselves
}

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    for (const cplx& c : coeffs_) require_finite(c, "Polynomial coefficient");
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrimTol) coeffs_.pop_back();
}

cplx Polynomial::eval(cplx z) const {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = double(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

double Polynomial::coeff_norm() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s += std::abs(c);
    return s;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx{0.0, 0.0});
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(int(k)) + b.coeff(int(k));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx{0.0, 0.0});
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(int(k)) - b.coeff(int(k));
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx{0.0, 0.0});
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(cplx s, const Polynomial& p) {
    std::vector<cplx> c = p.coeffs_;
    for (cplx& x : c) x *= s;
    return Polynomial(std::move(c));
}

PowerSeries PowerSeries::polynomial(std::vector<cplx> c) {
    PowerSeries s;
    for (const cplx& x : c) require_finite(x, "PowerSeries coefficient");
    s.coeffs = std::move(c);
    if (s.coeffs.empty()) s.coeffs.push_back({0.0, 0.0});
    s.decay_rate = 0.0;
    s.growth = 0.0;
    for (const cplx& x : s.coeffs) s.growth = std::max(s.growth, std::abs(x));
    s.tail_bound = 0.0;
    return s;
}

PowerSeries PowerSeries::with_decay(std::vector<cplx> c, double decay_rate) {
    if (decay_rate < 0.0 || decay_rate >= 1.0)
        throw std::domain_error("PowerSeries decay_rate must lie in [0,1)");
    if (decay_rate == 0.0) return polynomial(std::move(c));
    PowerSeries s;
    for (const cplx& x : c) require_finite(x, "PowerSeries coefficient");
    s.coeffs = std::move(c);
    if (s.coeffs.empty()) s.coeffs.push_back({0.0, 0.0});
    s.decay_rate = decay_rate;
    double growth = 0.0, rk = 1.0;
    for (size_t k = 0; k < s.coeffs.size(); ++k) {
        growth = std::max(growth, std::abs(s.coeffs[k]) / rk);
        rk *= decay_rate;
    }
    s.growth = growth;
    // rk is now decay^(N+1)
    s.tail_bound = growth * rk / (1.0 - decay_rate);
    return s;
}

cplx PowerSeries::eval(cplx z) const {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double PowerSeries::coeff_l1() const {
    double s = 0.0;
    for (const cplx& c : coeffs) s += std::abs(c);
    return s;
}

double PowerSeries::coeff_l2() const {
    double s = 0.0;
    for (const cplx& c : coeffs) s += std::norm(c);
    return std::sqrt(s);
}

int default_truncation(double decay_rate, double tol, int cap) {
    if (decay_rate <= 0.0) return 0;
    // decay^(N+1)/(1-decay) < tol
    double n = std::log(tol * (1.0 - decay_rate)) / std::log(decay_rate) - 1.0;
    int N = static_cast<int>(std::ceil(std::max(0.0, n)));
    return std::min(N, cap);
}

PowerSeries series_resize(const PowerSeries& f, int n) {
    PowerSeries g = f;
    g.coeffs.resize(size_t(n) + 1, cplx{0.0, 0.0});
    if (n < f.truncation() && g.decay_rate > 0.0) {
        // tail grows when coefficients are dropped
        double rk = std::pow(g.decay_rate, n + 1);
        g.tail_bound = g.growth * rk / (1.0 - g.decay_rate);
    }
    return g;
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
    int N = std::max(f.truncation(), g.truncation());
    std::vector<cplx> c(size_t(N) + 1, cplx{0.0, 0.0});
    int nf = f.truncation(), ng = g.truncation();
    for (int i = 0; i <= nf; ++i) {
        if (f.coeffs[i] == cplx{0.0, 0.0}) continue;
        int jmax = std::min(ng, N - i);
        for (int j = 0; j <= jmax; ++j) c[i + j] += f.coeffs[i] * g.coeffs[size_t(j)];
    }
    PowerSeries h;
    h.coeffs = std::move(c);
    h.decay_rate = std::max(f.decay_rate, g.decay_rate);
    h.tail_bound = f.coeff_l1() * g.tail_bound + g.coeff_l1() * f.tail_bound +
                   f.tail_bound * g.tail_bound;
    // cross terms landing above N are covered by the l1 x tail products;
    // refresh the geometric constant when a decay base is available
    if (h.decay_rate > 0.0) {
        double growth = 0.0, rk = 1.0;
        for (size_t k = 0; k < h.coeffs.size(); ++k) {
            growth = std::max(growth, std::abs(h.coeffs[k]) / rk);
            rk *= h.decay_rate;
        }
        h.growth = growth;
    } else {
        h.growth = 0.0;
        for (const cplx& x : h.coeffs) h.growth = std::max(h.growth, std::abs(x));
    }
    return h;
}

PowerSeries series_div_linear(const PowerSeries& f, cplx lambda) {
    require_finite(lambda, "series_div_linear lambda");
    if (std::abs(lambda) >= 1.0)
        throw std::domain_error("series_div_linear: |lambda| must be < 1");
    PowerSeries g;
    g.coeffs.resize(f.coeffs.size());
    cplx lb = std::conj(lambda);
    cplx prev{0.0, 0.0};
    for (size_t k = 0; k < f.coeffs.size(); ++k) {
        prev = f.coeffs[k] + lb * prev;
        g.coeffs[k] = prev;
    }
    double rate = std::max(f.decay_rate, std::abs(lambda));
    if (rate > 0.0) {
        g = PowerSeries::with_decay(std::move(g.coeffs), rate);
        // the recurrence also forwards f's dropped tail through the geometric factor
        g.tail_bound += f.tail_bound / (1.0 - std::abs(lambda));
    } else {
        g = PowerSeries::polynomial(std::move(g.coeffs));
    }
    return g;
}

PowerSeries series_derivative(const PowerSeries& f) {
    PowerSeries g;
    size_t n = f.coeffs.size();
    g.coeffs.assign(n, cplx{0.0, 0.0});
    for (size_t k = 1; k < n; ++k) g.coeffs[k - 1] = double(k) * f.coeffs[k];
    g.decay_rate = f.decay_rate;
    if (f.decay_rate > 0.0) {
        double r = f.decay_rate;
        double rk = std::pow(r, double(n));
        // sum_{k>=N+1} k C r^(k-1) <= C r^N (N+1 + r/(1-r)) / (1-r)
        g.tail_bound = f.growth * rk / r * (double(n) + r / (1.0 - r)) / (1.0 - r);
        double growth = 0.0, p = 1.0;
        for (size_t k = 0; k < n; ++k) {
            growth = std::max(growth, std::abs(g.coeffs[k]) / p);
            p *= r;
        }
        g.growth = growth;
    }
    return g;
}

PowerSeries series_add(const PowerSeries& f, const PowerSeries& g) {
    int N = std::max(f.truncation(), g.truncation());
    std::vector<cplx> c(size_t(N) + 1);
    for (int k = 0; k <= N; ++k) c[size_t(k)] = f.coeff(k) + g.coeff(k);
    double rate = std::max(f.decay_rate, g.decay_rate);
    PowerSeries h = rate > 0.0 ? PowerSeries::with_decay(std::move(c), rate)
                               : PowerSeries::polynomial(std::move(c));
    h.tail_bound = f.tail_bound + g.tail_bound;
    return h;
}

PowerSeries series_scale(cplx s, const PowerSeries& f) {
    PowerSeries g = f;
    for (cplx& c : g.coeffs) c *= s;
    double m = std::abs(s);
    g.growth *= m;
    g.tail_bound *= m;
    return g;
}

PowerSeries series_shift_down(const PowerSeries& f, double tol) {
    if (std::abs(f.coeff(0)) > tol)
        throw std::domain_error("series_shift_down: constant term is not negligible");
    PowerSeries g = f;
    g.coeffs.erase(g.coeffs.begin());
    if (g.coeffs.empty()) g.coeffs.push_back({0.0, 0.0});
    // shifting indices down by one leaves the tail sum unchanged
    g.tail_bound = f.tail_bound;
    return g;
}

}  // namespace bpd
