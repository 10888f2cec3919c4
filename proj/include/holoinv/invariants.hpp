#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "holoinv/annulus.hpp"

namespace holoinv {

struct UnitDisc {};

using BaseDomain = std::variant<UnitDisc, Annulus>;

/// A base domain with finitely many punctures removed. Punctures must
/// be pairwise distinct and metrically valid points of the base; the
/// list may be empty (the unpunctured domain).
class PuncturedDomain {
public:
    PuncturedDomain(BaseDomain base, std::vector<Complex> punctures);

    const BaseDomain& base() const noexcept { return base_; }
    std::span<const Complex> punctures() const noexcept { return punctures_; }

    /// Strict (metric-valid) interior membership, punctures excluded.
    bool contains(const Complex& z) const;

private:
    BaseDomain base_;
    std::vector<Complex> punctures_;
};

/// Distance callback a generic bound can be built on. Must be the
/// Caratheodory/Poincare distance of the ambient domain.
using MetricOracle = std::function<RadiusPair(const Complex&, const Complex&)>;

/// The canonical oracle of a base domain: Poincare distance on the
/// disc, prime-function Caratheodory distance on the annulus.
MetricOracle metric_oracle(const BaseDomain& base);

/// Squeezing function of the disc punctured at K, evaluated at z:
///   min_{w in K} |(w - z) / (1 - conj(z) w)|.
/// K must be nonempty and z must avoid K.
double squeezing_punctured_disc(const DiscPoint& z, std::span<const DiscPoint> punctures);

/// Fridman invariant of the punctured disc; coincides with the
/// squeezing function there.
double fridman_injectivity_punctured_disc(const DiscPoint& z, std::span<const DiscPoint> punctures);

/// min_{w in K} tanh c_Omega(z, w) — an upper bound for both the
/// squeezing function and tanh of the Fridman invariant on Omega - K.
double general_upper_bound(const Complex& z, std::span<const Complex> punctures,
                           const MetricOracle& metric);

/// Closed form of the squeezing function of the annulus at z:
///   S(z) = max(|z|, r / |z|),   r < |z| < 1.
double squeezing_annulus(const Annulus& domain, const Complex& z);

/// Reciprocal-radius form of a tanh-scale bound: for H in (0, 1)
/// returns h = 1 / mu(H), i.e. the unique h > 0 with tanh(1/h) = H.
/// Large ball radius -> small h, matching the Fridman convention.
double fridman_h_from_H(double H);

/// One evaluated comparison bundle: values, margins, pass flags.
struct InvariantReport {
    Complex query{};
    std::vector<std::pair<std::string, double>> values;  // formula id -> value
    double tolerance = 0.0;
    std::vector<std::pair<std::string, bool>> checks;
    bool pass = true;
    double wall_time_s = 0.0;  // informational; never serialized to files
};

/// Compares, at real z in (r, 1) against a real puncture p in (-1, -r):
/// tanh c(z, p), the squeezing closed form, and their margin. When p is
/// -sqrt(r) the slit-map shortcut and its margin against r/z join the
/// report. Margin positivity is asserted (as pass flags, at `tol`) for
/// z in (r, sqrt r), where it is a theorem.
InvariantReport annulus_gap_report(const Annulus& domain, double z, double p,
                                   double tol = 1e-10);

}  // namespace holoinv
