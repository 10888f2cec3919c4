#include "holoinv/invariants.hpp"

#include <chrono>
#include <cmath>

namespace holoinv {

namespace {

// Matches the metric operations' boundary slack.
constexpr double kMetricSlack = 1e-9;

bool in_metric_interior(const BaseDomain& base, const Complex& z) {
    if (!is_finite(z)) return false;
    const double m = std::abs(z);
    if (std::holds_alternative<UnitDisc>(base)) return m < 1.0;
    const double r = std::get<Annulus>(base).r();
    return m > r + kMetricSlack && m < 1.0 - kMetricSlack;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

PuncturedDomain::PuncturedDomain(BaseDomain base, std::vector<Complex> punctures)
    : base_(std::move(base)), punctures_(std::move(punctures)) {
    for (std::size_t i = 0; i < punctures_.size(); ++i) {
        if (!in_metric_interior(base_, punctures_[i]))
            throw std::domain_error("PuncturedDomain: puncture outside the base interior");
        for (std::size_t j = i + 1; j < punctures_.size(); ++j)
            if (punctures_[i] == punctures_[j])
                throw std::domain_error("PuncturedDomain: punctures must be pairwise distinct");
    }
}

bool PuncturedDomain::contains(const Complex& z) const {
    if (!in_metric_interior(base_, z)) return false;
    for (const Complex& p : punctures_)
        if (z == p) return false;
    return true;
}

MetricOracle metric_oracle(const BaseDomain& base) {
    if (std::holds_alternative<UnitDisc>(base)) {
        return [](const Complex& a, const Complex& b) {
            return RadiusPair::from_tanh(pseudo_hyperbolic(DiscPoint{a}, DiscPoint{b}));
        };
    }
    const Annulus dom = std::get<Annulus>(base);
    return [dom](const Complex& a, const Complex& b) {
        return caratheodory_annulus(dom, a, b);
    };
}

double squeezing_punctured_disc(const DiscPoint& z, std::span<const DiscPoint> punctures) {
    if (punctures.empty())
        throw std::domain_error("squeezing_punctured_disc: need at least one puncture");
    double best = 2.0;
    for (const DiscPoint& w : punctures) {
        if (w.value() == z.value())
            throw std::domain_error("squeezing_punctured_disc: z must avoid the punctures");
        best = std::min(best, pseudo_hyperbolic(z, w));
    }
    return best;
}

double fridman_injectivity_punctured_disc(const DiscPoint& z,
                                          std::span<const DiscPoint> punctures) {
    // On the punctured disc the Fridman invariant collapses to the
    // squeezing function: the extremal ball is the same Mobius image.
    return squeezing_punctured_disc(z, punctures);
}

double general_upper_bound(const Complex& z, std::span<const Complex> punctures,
                           const MetricOracle& metric) {
    if (punctures.empty())
        throw std::domain_error("general_upper_bound: need at least one puncture");
    double best = 2.0;
    for (const Complex& w : punctures) {
        if (w == z)
            throw std::domain_error("general_upper_bound: z must avoid the punctures");
        best = std::min(best, metric(z, w).tanh_scale);
    }
    return best;
}

double squeezing_annulus(const Annulus& domain, const Complex& z) {
    if (!is_finite(z))
        throw std::domain_error("squeezing_annulus: point must be finite");
    const double m = std::abs(z);
    if (!(m > domain.r()) || !(m < 1.0))
        throw std::domain_error("squeezing_annulus: point must lie in the open annulus");
    return std::max(m, domain.r() / m);
}

double fridman_h_from_H(double H) {
    if (!(H > 0.0) || !(H < 1.0))
        throw std::domain_error("fridman_h_from_H: need H in (0, 1)");
    return 1.0 / mu(H);
}

InvariantReport annulus_gap_report(const Annulus& domain, double z, double p, double tol) {
    const auto t0 = std::chrono::steady_clock::now();
    const double r = domain.r();
    if (!(z > r) || !(z < 1.0))
        throw std::domain_error("annulus_gap_report: need real z in (r, 1)");
    if (!(p > -1.0) || !(p < -r))
        throw std::domain_error("annulus_gap_report: need real p in (-1, -r)");
    if (!(tol > 0.0))
        throw std::domain_error("annulus_gap_report: tolerance must be positive");

    InvariantReport report;
    report.query = Complex{z, 0.0};
    report.tolerance = tol;

    const DistanceValue c = caratheodory_annulus(domain, {z, 0.0}, {p, 0.0});
    const double bound = c.tanh_scale;  // min over the single puncture
    const double squeeze = squeezing_annulus(domain, {z, 0.0});
    const double sqrt_r = std::sqrt(r);

    report.values.emplace_back("caratheodory.annulus.distance", c.hyperbolic);
    report.values.emplace_back("caratheodory.annulus.tanh", c.tanh_scale);
    report.values.emplace_back("upper-bound.min-tanh", bound);
    report.values.emplace_back("squeezing.annulus", squeeze);
    report.values.emplace_back("margin.bound-minus-squeezing", bound - squeeze);

    // Positivity is a theorem only on z in (r, sqrt r); outside, the
    // margins are reported without a claim.
    const bool assert_region = z < sqrt_r;
    if (assert_region)
        report.checks.emplace_back("bound-exceeds-squeezing", bound - squeeze > tol);

    if (std::abs(p + sqrt_r) <= 1e-12) {
        const double tc = tanh_c_minus_sqrt_r(domain, z);
        report.values.emplace_back("slit-map.tanh-c", tc);
        report.values.emplace_back("margin.tanh-c-minus-r-over-z", tc - r / z);
        report.checks.emplace_back("cross-path-agreement", std::abs(tc - c.tanh_scale) <= 1e-9);
        if (assert_region)
            report.checks.emplace_back("tanh-c-exceeds-r-over-z", tc - r / z > tol);
    }

    report.pass = true;
    for (const auto& [name, ok] : report.checks) report.pass = report.pass && ok;
    report.wall_time_s = elapsed_s(t0);
    return report;
}

}  // namespace holoinv
