#ifndef BPD_COMPLEX_UTIL_HPP
#define BPD_COMPLEX_UTIL_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace bpd {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

/// Tolerance breakdown in a numerical procedure (root clustering,
/// preimage solves, borderline singular values).  Distinct from input
/// validation errors so the CLI can map it to its own exit code.
class numerical_failure : public std::runtime_error {
public:
    explicit numerical_failure(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(cplx z, const char* what) {
    if (!is_finite(z)) throw std::domain_error(std::string(what) + ": non-finite value");
}

inline void require_in_disc(cplx z, const char* what, double margin = 0.0) {
    require_finite(z, what);
    if (std::abs(z) >= 1.0 - margin)
        throw std::domain_error(std::string(what) + ": point not inside the unit disc");
}

/// e^{i t}
inline cplx unit(double t) { return {std::cos(t), std::sin(t)}; }

/// z/|z|; throws if z is too close to zero to carry a phase.
inline cplx normalize_unimodular(cplx z) {
    double m = std::abs(z);
    if (m < 1e-14) throw numerical_failure("cannot normalize near-zero value to unit modulus");
    return z / m;
}

}  // namespace bpd

#endif
