#include "holoinv/annulus.hpp"

#include <cmath>
#include <string>

namespace holoinv {

namespace {

using CL = std::complex<long double>;

constexpr double kBoundarySlack = 1e-9;
// Internal tail tolerance of the metric paths. Tighter than any public
// tolerance so that atanh amplification near tanh c ~ 1 cannot eat the
// comparison budgets; long double keeps the extra digits real.
constexpr long double kInternalTol = 1e-17L;
constexpr int kInternalMaxTerms = 20000;

int certified_terms_ld(long double r, const CL& a, const CL& b) {
    const long double ma = std::abs(a), mb = std::abs(b);
    const long double coeff = ma / mb + mb / ma + 2.0L;
    const long double q = r * r;
    long double tail = q * coeff / (1.0L - q);
    int n = 0;
    while (tail > kInternalTol && n < kInternalMaxTerms) {
        tail *= q;
        ++n;
    }
    if (tail > kInternalTol)
        throw convergence_error("annulus metric: prime-function tail bound not met");
    return n;
}

CL omega_ld(long double r, const CL& a, const CL& b) {
    return detail::omega_product(r, a, b, certified_terms_ld(r, a, b));
}

// tanh of the Caratheodory distance, first argument positive real.
long double tanh_c_posreal(long double r, long double x1, const CL& x2) {
    const CL z1{x1, 0.0L};
    const long double t1 =
        std::abs(omega_ld(r, x2, z1) / (x1 * omega_ld(r, x2, CL{1.0L / x1, 0.0L})));
    const long double m2 = std::abs(x2);
    const long double rho = r / m2;
    const long double t2 = std::abs(omega_ld(r, z1, CL{-rho, 0.0L}) /
                                    (rho * omega_ld(r, z1, CL{-m2 / r, 0.0L})));
    return t1 * t2 / x1;
}

void require_in_annulus(const Annulus& domain, const Complex& xi, const char* who) {
    if (!is_finite(xi))
        throw std::domain_error(std::string(who) + ": point must be finite");
    const double m = std::abs(xi);
    if (!(m > domain.r() + kBoundarySlack) || !(m < 1.0 - kBoundarySlack))
        throw std::domain_error(std::string(who) +
                                ": point must lie at least 1e-9 inside the annulus");
}

DistanceValue pack_distance(long double tanh_c) {
    if (!(tanh_c >= 0.0L) || !(tanh_c < 1.0L))
        throw convergence_error("annulus metric: tanh-scale value left [0, 1)");
    return {static_cast<double>(detail::mu_ld(tanh_c)), static_cast<double>(tanh_c)};
}

// ---- Simha's formula on { 1/R < |xi| < R } ----

int simha_terms(long double R, long double m1, long double m2) {
    const long double m12 = m1 * m2;
    const long double coeff = m2 / m1 + m1 / m2 + R * R * (m12 + 1.0L / m12);
    const long double ratio = 1.0L / (R * R * R * R);
    long double tail = ratio * coeff / (1.0L - ratio);
    int n = 0;
    while (tail > kInternalTol && n < kInternalMaxTerms) {
        tail *= ratio;
        ++n;
    }
    if (tail > kInternalTol)
        throw convergence_error("simha_caratheodory: tail bound not met");
    return n;
}

CL simha_f(long double R, long double x1, const CL& x2) {
    const int terms = simha_terms(R, x1, std::abs(x2));
    CL acc = 1.0L - x2 / x1;
    const long double R2 = R * R;
    const long double R4 = R2 * R2;
    long double R4n = 1.0L;
    for (int n = 1; n <= terms; ++n) {
        R4n *= R4;                        // R^(4n)
        const long double Re2 = R4n / R2;  // R^(4n-2)
        acc *= (1.0L - x2 / (R4n * x1)) * (1.0L - x1 / (R4n * x2)) /
               ((1.0L - x1 * x2 / Re2) * (1.0L - 1.0L / (Re2 * x1 * x2)));
    }
    return acc;
}

}  // namespace

SimhaAnnulus::SimhaAnnulus(double outer) : R_(outer) {
    if (!(outer > 1.0) || !std::isfinite(outer))
        throw std::domain_error("SimhaAnnulus: outer radius must be finite and > 1");
}

DistanceValue caratheodory_annulus(const Annulus& domain, const Complex& xi1,
                                   const Complex& xi2) {
    require_in_annulus(domain, xi1, "caratheodory_annulus");
    require_in_annulus(domain, xi2, "caratheodory_annulus");
    if (xi1 == xi2) return {0.0, 0.0};
    const CL a{xi1.real(), xi1.imag()};
    const CL b{xi2.real(), xi2.imag()};
    const long double m1 = std::abs(a);
    // Rotate so the first argument is positive real; for real positive
    // xi1 the rotation is exactly 1 and b passes through unchanged.
    const CL rot = std::conj(a) / m1;
    return pack_distance(tanh_c_posreal(domain.r(), m1, b * rot));
}

DistanceValue simha_caratheodory(const SimhaAnnulus& domain, const Complex& xi1,
                                 const Complex& xi2) {
    const long double R = domain.R();
    const auto check = [&](const Complex& xi) {
        if (!is_finite(xi))
            throw std::domain_error("simha_caratheodory: point must be finite");
        const double m = std::abs(xi);
        if (!(m > 1.0 / static_cast<double>(R) + kBoundarySlack) ||
            !(m < static_cast<double>(R) - kBoundarySlack))
            throw std::domain_error(
                "simha_caratheodory: point must lie at least 1e-9 inside the annulus");
    };
    check(xi1);
    check(xi2);
    if (xi1 == xi2) return {0.0, 0.0};
    const CL a{xi1.real(), xi1.imag()};
    const CL b{xi2.real(), xi2.imag()};
    const long double m1 = std::abs(a);
    const CL rot = std::conj(a) / m1;
    const CL x2 = b * rot;
    const long double m2 = std::abs(x2);
    const long double tanh_c = std::abs(simha_f(R, m1, x2)) *
                               std::abs(simha_f(R, 1.0L / m1, CL{-m2, 0.0L})) / (R * m2);
    return pack_distance(tanh_c);
}

NormalizedAnnulus normalize_annulus(const Annulus& domain) {
    const double scale = 1.0 / std::sqrt(domain.r());
    return {SimhaAnnulus{scale}, scale};
}

Complex slit_map(const Annulus& domain, const Complex& z) {
    if (!is_finite(z) || z == Complex{})
        throw std::domain_error("slit_map: point must be finite and nonzero");
    const double r = domain.r();
    const double m = std::abs(z);
    if (!(m >= r * (1.0 - 1e-12)) || !(m <= 1.0 + 1e-12))
        throw std::domain_error("slit_map: point must lie in the closed annulus");
    // sqrt taken in double then promoted: keeps the zero of the map
    // exact for callers passing -std::sqrt(r).
    const long double sr = static_cast<long double>(std::sqrt(r));
    const CL zl{z.real(), z.imag()};
    const CL v = omega_ld(r, zl, CL{-sr, 0.0L}) /
                 (sr * omega_ld(r, zl, CL{-1.0L / sr, 0.0L}));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double tanh_c_minus_sqrt_r(const Annulus& domain, double z) {
    const double r = domain.r();
    if (!(z > r) || !(z < 1.0))
        throw std::domain_error("tanh_c_minus_sqrt_r: need real z in (r, 1)");
    const long double sr = static_cast<long double>(std::sqrt(r));
    const CL zl{z, 0.0L};
    const CL f = omega_ld(r, zl, CL{-sr, 0.0L}) /
                 (sr * omega_ld(r, zl, CL{-1.0L / sr, 0.0L}));
    // f is real on the real axis (the imaginary part is exactly zero
    // through real-component arithmetic).
    return static_cast<double>(f.real() * f.real() / z);
}

}  // namespace holoinv
