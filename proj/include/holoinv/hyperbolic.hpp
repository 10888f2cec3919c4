#pragma once

#include <complex>
#include <stdexcept>

namespace holoinv {

using Complex = std::complex<double>;

bool is_finite(const Complex& z) noexcept;

/// A point strictly inside the unit disc; the constructor rejects
/// anything with |z| >= 1.
class DiscPoint {
public:
    explicit DiscPoint(Complex value);
    const Complex& value() const noexcept { return value_; }

private:
    Complex value_;
};

/// One radius, carried on both scales the disc metrics use:
/// `hyperbolic` is the Poincare-scale value rho, `tanh_scale` is
/// tanh(rho) in [0, 1).
struct RadiusPair {
    double hyperbolic = 0.0;
    double tanh_scale = 0.0;

    static RadiusPair from_hyperbolic(double rho);
    static RadiusPair from_tanh(double t);
};

/// mu(x) = (1/2) log((1+x)/(1-x)) on [0, 1) — the inverse of tanh.
/// Evaluated through log1p so it stays accurate as x -> 1.
double mu(double x);

/// The disc automorphism xi -> (xi - z) / (1 - conj(z) xi).
Complex disc_automorphism(const DiscPoint& z, const DiscPoint& xi);

/// Pseudo-hyperbolic distance |(w - z) / (1 - conj(z) w)|.
double pseudo_hyperbolic(const DiscPoint& z, const DiscPoint& w);

/// Poincare distance mu(pseudo_hyperbolic(z, w)).
double poincare_distance(const DiscPoint& z, const DiscPoint& w);

namespace detail {
// Extended-precision mu shared with the annulus metric internals.
long double mu_ld(long double x);
}

}  // namespace holoinv
