#pragma once

#include "holoinv/prime.hpp"

namespace holoinv {

/// The annulus { 1/R < |xi| < R }, R > 1, on which Simha's product
/// formula for the Caratheodory distance lives.
class SimhaAnnulus {
public:
    explicit SimhaAnnulus(double outer);
    double R() const noexcept { return R_; }

private:
    double R_;
};

/// A distance, on the hyperbolic scale and the tanh scale.
using DistanceValue = RadiusPair;

struct NormalizedAnnulus {
    SimhaAnnulus domain;
    double scale;  // xi -> scale * xi maps {r < |xi| < 1} onto {1/R < |xi| < R}
};

/// Caratheodory distance on A_r through the prime function. Both
/// points must lie at least 1e-9 inside the open annulus. Internally
/// evaluated in extended precision so the hyperbolic-scale value stays
/// accurate even when tanh c is close to 1.
DistanceValue caratheodory_annulus(const Annulus& domain, const Complex& xi1,
                                   const Complex& xi2);

/// The same distance on { 1/R < |xi| < R } through Simha's formula.
DistanceValue simha_caratheodory(const SimhaAnnulus& domain, const Complex& xi1,
                                 const Complex& xi2);

/// R = scale = r^(-1/2). Distances are preserved: c_{A_r}(a, b) equals
/// the Simha distance between scale*a and scale*b.
NormalizedAnnulus normalize_annulus(const Annulus& domain);

/// Conformal map of A_r onto the unit disc slit along a concentric
/// circular arc,
///   f(z) = omega(z, -sqrt r) / (sqrt r * omega(z, -1/sqrt r)).
/// Accepts the closed annulus r <= |z| <= 1 (with a hair of slack for
/// rounding). f(-sqrt r) == 0 exactly; |f| == 1 on |z| = 1; |f| is
/// constant on |z| = r.
Complex slit_map(const Annulus& domain, const Complex& z);

/// tanh c_{A_r}(z, -sqrt r) = slit_map(z)^2 / z for real z in (r, 1).
double tanh_c_minus_sqrt_r(const Annulus& domain, double z);

}  // namespace holoinv
