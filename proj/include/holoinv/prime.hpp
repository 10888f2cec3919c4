#pragma once

#include <stdexcept>

#include "holoinv/hyperbolic.hpp"

namespace holoinv {

/// The annulus A_r = { r < |xi| < 1 }, 0 < r < 1.
class Annulus {
public:
    explicit Annulus(double modulus);
    double r() const noexcept { return r_; }

private:
    double r_;
};

/// Stopping rule for the infinite products. `tol` is the certified
/// relative size of the dropped tail (>= 1e-15); `max_terms` caps the
/// truncation order.
struct TruncationPolicy {
    double tol = 1e-12;
    int max_terms = 10000;
};

/// Raised when the tail bound cannot be met within max_terms.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smallest N such that
///   r^(2(N+1)) * (|a/b| + |b/a| + 2) / (1 - r^2)  <=  tol,
/// clamped to max_terms. This bounds the relative error of truncating
/// the prime-function product after N factors.
int truncation_terms(const Annulus& domain, const Complex& xi1, const Complex& xi2,
                     double tol, int max_terms = TruncationPolicy{}.max_terms);

/// Prime function of the annulus,
///   omega(a, b) = (a - b) * prod_{n>=1} [(a - r^2n b)(b - r^2n a)]
///                                      / [(a - r^2n a)(b - r^2n b)],
/// truncated under `policy` with a safety factor of 4 on the tail
/// bound. Defined for any finite nonzero arguments; the zero at a == b
/// is exact (no rounding residue).
Complex prime_omega(const Annulus& domain, const Complex& xi1, const Complex& xi2,
                    const TruncationPolicy& policy = {});

namespace detail {

// Shared product kernel; instantiated at double for the public entry
// point and at long double by the metric pipeline.
template <typename Real>
std::complex<Real> omega_product(Real r, const std::complex<Real>& a,
                                 const std::complex<Real>& b, int terms) {
    std::complex<Real> acc = a - b;
    const Real q = r * r;
    Real qn = Real(1);
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        acc *= (a - qn * b) * (b - qn * a) / ((a - qn * a) * (b - qn * b));
    }
    return acc;
}

struct TermCount {
    int terms;
    bool certified;
};

TermCount certified_terms(double r, const Complex& a, const Complex& b,
                          double tol, int max_terms);

}  // namespace detail

}  // namespace holoinv
