#include "holoinv/prime.hpp"

#include <cmath>
#include <string>

namespace holoinv {

Annulus::Annulus(double modulus) : r_(modulus) {
    if (!(modulus > 0.0) || !(modulus < 1.0))
        throw std::domain_error("Annulus: modulus must lie in (0, 1)");
}

namespace detail {

TermCount certified_terms(double r, const Complex& a, const Complex& b,
                          double tol, int max_terms) {
    const double ma = std::abs(a), mb = std::abs(b);
    const double coeff = ma / mb + mb / ma + 2.0;
    const double q = r * r;
    double tail = q * coeff / (1.0 - q);  // tail bound for N = 0
    int n = 0;
    while (tail > tol && n < max_terms) {
        tail *= q;
        ++n;
    }
    return {n, tail <= tol};
}

}  // namespace detail

namespace {

void require_args(const Complex& a, const Complex& b, const char* who) {
    if (!is_finite(a) || !is_finite(b) || a == Complex{} || b == Complex{})
        throw std::domain_error(std::string(who) + ": arguments must be finite and nonzero");
}

void require_policy(const TruncationPolicy& policy) {
    if (!(policy.tol >= 1e-15) || policy.max_terms < 1)
        throw std::domain_error("TruncationPolicy: need tol >= 1e-15 and max_terms >= 1");
}

}  // namespace

int truncation_terms(const Annulus& domain, const Complex& xi1, const Complex& xi2,
                     double tol, int max_terms) {
    require_args(xi1, xi2, "truncation_terms");
    if (!(tol > 0.0))
        throw std::domain_error("truncation_terms: tol must be positive");
    if (max_terms < 1)
        throw std::domain_error("truncation_terms: max_terms must be >= 1");
    return detail::certified_terms(domain.r(), xi1, xi2, tol, max_terms).terms;
}

Complex prime_omega(const Annulus& domain, const Complex& xi1, const Complex& xi2,
                    const TruncationPolicy& policy) {
    require_args(xi1, xi2, "prime_omega");
    require_policy(policy);
    // Safety factor of 4 between the requested tolerance and the certified tail.
    const auto plan =
        detail::certified_terms(domain.r(), xi1, xi2, policy.tol / 4.0, policy.max_terms);
    if (!plan.certified)
        throw convergence_error("prime_omega: tail bound not met within " +
                                std::to_string(policy.max_terms) + " terms");
    return detail::omega_product(domain.r(), xi1, xi2, plan.terms);
}

}  // namespace holoinv
