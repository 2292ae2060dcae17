#ifndef BPD_POWER_SERIES_HPP
#define BPD_POWER_SERIES_HPP

#include <vector>

#include "bpd/complex_util.hpp"

namespace bpd {

/// Polynomial with complex coefficients, lowest degree first.
/// Trailing (near-)zero coefficients are trimmed so that the leading
/// coefficient is nonzero unless the polynomial is identically zero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<cplx> coeffs);

    static Polynomial constant(cplx c) { return Polynomial({c}); }
    /// b + a*z
    static Polynomial linear(cplx b, cplx a) { return Polynomial({b, a}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : cplx{0.0, 0.0};
    }
    cplx leading() const { return coeffs_.empty() ? cplx{0.0, 0.0} : coeffs_.back(); }

    cplx eval(cplx z) const;
    Polynomial derivative() const;
    /// Sum of coefficient magnitudes.
    double coeff_norm() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(cplx s, const Polynomial& p);

private:
    std::vector<cplx> coeffs_;
};

/// Truncated Taylor series with a geometric coefficient bound:
/// |c_k| <= growth * decay_rate^k, and tail_bound >= sum_{k>N} |c_k|.
/// A decay_rate of zero marks an exact polynomial (empty tail).
struct PowerSeries {
    std::vector<cplx> coeffs;  // length N+1
    double decay_rate = 0.0;
    double growth = 0.0;
    double tail_bound = 0.0;

    PowerSeries() = default;
    /// Exact polynomial, zero tail.
    static PowerSeries polynomial(std::vector<cplx> c);
    /// Series truncated at c.size()-1 with the given geometric decay base;
    /// growth and tail_bound are derived from the coefficients.
    static PowerSeries with_decay(std::vector<cplx> c, double decay_rate);

    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : cplx{0.0, 0.0};
    }
    cplx eval(cplx z) const;
    /// Sum of |c_k| over the stored coefficients.
    double coeff_l1() const;
    double coeff_l2() const;
};

/// Smallest N with decay^(N+1)/(1-decay) below the tolerance, capped.
int default_truncation(double decay_rate, double tol = 1e-12, int cap = 16384);

/// Cauchy product truncated at max of the operands' truncations.
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);
/// Solves g * (1 - conj(lambda) z) = f exactly on the stored coefficients.
/// Requires |lambda| < 1.
PowerSeries series_div_linear(const PowerSeries& f, cplx lambda);
PowerSeries series_derivative(const PowerSeries& f);
PowerSeries series_add(const PowerSeries& f, const PowerSeries& g);
PowerSeries series_scale(cplx s, const PowerSeries& f);
/// f/z for series with |c_0| <= tol; coefficient shift, not division.
PowerSeries series_shift_down(const PowerSeries& f, double tol = 1e-12);
/// Truncate or zero-pad to the given truncation index.
PowerSeries series_resize(const PowerSeries& f, int n);

}  // namespace bpd

#endif
