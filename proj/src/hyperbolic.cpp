#include "holoinv/hyperbolic.hpp"

#include <cmath>

namespace holoinv {

bool is_finite(const Complex& z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

DiscPoint::DiscPoint(Complex value) : value_(value) {
    if (!is_finite(value) || std::abs(value) >= 1.0)
        throw std::domain_error("DiscPoint: modulus must be finite and < 1");
}

namespace detail {
long double mu_ld(long double x) {
    return 0.5L * (std::log1p(x) - std::log1p(-x));
}
}

double mu(double x) {
    if (!(x >= 0.0) || x >= 1.0)  // the negated form also rejects NaN
        throw std::domain_error("mu: argument must lie in [0, 1)");
    return 0.5 * (std::log1p(x) - std::log1p(-x));
}

RadiusPair RadiusPair::from_hyperbolic(double rho) {
    if (!(rho >= 0.0) || !std::isfinite(rho))
        throw std::domain_error("RadiusPair: radius must be finite and >= 0");
    return {rho, std::tanh(rho)};
}

RadiusPair RadiusPair::from_tanh(double t) {
    return {mu(t), t};
}

Complex disc_automorphism(const DiscPoint& z, const DiscPoint& xi) {
    return (xi.value() - z.value()) / (1.0 - std::conj(z.value()) * xi.value());
}

double pseudo_hyperbolic(const DiscPoint& z, const DiscPoint& w) {
    // Ratio of moduli, not modulus of the quotient: the numerator and
    // denominator of the two argument orders then mirror componentwise,
    // so the distance is symmetric bit for bit.
    return std::abs(w.value() - z.value()) / std::abs(1.0 - std::conj(z.value()) * w.value());
}

double poincare_distance(const DiscPoint& z, const DiscPoint& w) {
    return mu(pseudo_hyperbolic(z, w));
}

}  // namespace holoinv
