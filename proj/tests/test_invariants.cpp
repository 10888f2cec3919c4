#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holoinv/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

using namespace holoinv;

namespace {

std::vector<DiscPoint> disc_points(const std::vector<Complex>& zs) {
    std::vector<DiscPoint> out;
    for (const Complex& z : zs) out.emplace_back(z);
    return out;
}

bool has_value(const InvariantReport& rep, const std::string& name) {
    return std::any_of(rep.values.begin(), rep.values.end(),
                       [&](const auto& kv) { return kv.first == name; });
}

double value_of(const InvariantReport& rep, const std::string& name) {
    for (const auto& kv : rep.values)
        if (kv.first == name) return kv.second;
    throw std::runtime_error("missing value: " + name);
}

bool check_of(const InvariantReport& rep, const std::string& name) {
    for (const auto& kv : rep.checks)
        if (kv.first == name) return kv.second;
    throw std::runtime_error("missing check: " + name);
}

}  // namespace

TEST_CASE("punctured-disc squeezing matches hand computations") {
    const auto K = disc_points({{0.5, 0.0}, {-0.5, 0.0}});
    // min(0.2/0.85, 0.8/1.15) = 4/17
    CHECK(squeezing_punctured_disc(DiscPoint{{0.3, 0.0}}, K) ==
          doctest::Approx(4.0 / 17.0).epsilon(1e-15));
    const auto single = disc_points({{0.5, 0.0}});
    CHECK(squeezing_punctured_disc(DiscPoint{{0.0, 0.0}}, single) == 0.5);
}

TEST_CASE("punctured-disc squeezing equals the explicit minimum") {
    const std::vector<Complex> K = {{0.5, 0.0}, {-0.2, 0.6}, {0.1, -0.85}, {-0.7, -0.1}};
    const auto pts = disc_points(K);
    for (const Complex z : {Complex{0.3, 0.1}, Complex{-0.4, -0.4}, Complex{0.0, 0.0}}) {
        double brute = 1.0;
        for (const Complex& w : K)
            brute = std::min(brute, pseudo_hyperbolic(DiscPoint{z}, DiscPoint{w}));
        CHECK(squeezing_punctured_disc(DiscPoint{z}, pts) == brute);
    }
}

TEST_CASE("punctured-disc squeezing is automorphism covariant") {
    const std::vector<Complex> K = {{0.5, 0.0}, {-0.2, 0.6}, {0.1, -0.85}};
    const DiscPoint a{{0.3, -0.25}};
    for (const Complex z : {Complex{0.2, 0.3}, Complex{-0.55, 0.0}}) {
        std::vector<Complex> moved;
        for (const Complex& w : K)
            moved.push_back(disc_automorphism(a, DiscPoint{w}));
        const double before = squeezing_punctured_disc(DiscPoint{z}, disc_points(K));
        const double after = squeezing_punctured_disc(
            DiscPoint{disc_automorphism(a, DiscPoint{z})}, disc_points(moved));
        CHECK(after == doctest::Approx(before).epsilon(1e-13));
    }
}

TEST_CASE("punctured-disc squeezing rejects degenerate input") {
    const auto K = disc_points({{0.5, 0.0}});
    CHECK_THROWS_AS(squeezing_punctured_disc(DiscPoint{{0.5, 0.0}}, K), std::domain_error);
    CHECK_THROWS_AS(squeezing_punctured_disc(DiscPoint{{0.3, 0.0}}, {}), std::domain_error);
}

TEST_CASE("Fridman invariant collapses onto squeezing on the punctured disc") {
    const auto K = disc_points({{0.5, 0.0}, {-0.2, 0.6}, {0.1, -0.85}});
    for (const Complex z : {Complex{0.3, 0.1}, Complex{-0.4, -0.4}, Complex{0.0, 0.0}}) {
        CHECK(fridman_injectivity_punctured_disc(DiscPoint{z}, K) ==
              squeezing_punctured_disc(DiscPoint{z}, K));
    }
}

TEST_CASE("generic upper bound specializes exactly on the disc") {
    const std::vector<Complex> K = {{0.5, 0.0}, {-0.2, 0.6}, {0.1, -0.85}};
    const MetricOracle oracle = metric_oracle(UnitDisc{});
    for (const Complex z : {Complex{0.3, 0.1}, Complex{-0.4, -0.4}}) {
        CHECK(general_upper_bound(z, K, oracle) ==
              squeezing_punctured_disc(DiscPoint{z}, disc_points(K)));
    }
}

TEST_CASE("generic upper bound on the annulus pins its frozen value") {
    const MetricOracle oracle = metric_oracle(Annulus{0.1});
    const std::vector<Complex> K = {{-0.5, 0.0}};
    CHECK(general_upper_bound({0.5, 0.0}, K, oracle) ==
          doctest::Approx(0.93017970542946097574807193).epsilon(1e-13));
}

TEST_CASE("generic upper bound never grows when punctures are added") {
    const MetricOracle oracle = metric_oracle(Annulus{0.2});
    const Complex z{0.5, 0.2};
    std::vector<Complex> K = {{-0.5, 0.0}};
    const double one = general_upper_bound(z, K, oracle);
    K.push_back({0.3, -0.4});
    const double two = general_upper_bound(z, K, oracle);
    K.push_back({0.62, 0.21});
    const double three = general_upper_bound(z, K, oracle);
    CHECK(two <= one);
    CHECK(three <= two);
    CHECK_THROWS_AS(general_upper_bound(z, {}, oracle), std::domain_error);
    CHECK_THROWS_AS(general_upper_bound(z, std::vector<Complex>{z}, oracle),
                    std::domain_error);
}

TEST_CASE("annulus squeezing closed form") {
    const Annulus dom{0.25};
    CHECK(squeezing_annulus(dom, {0.5, 0.0}) == 0.5);
    CHECK(squeezing_annulus(dom, {0.4, 0.0}) == 0.625);
    CHECK(squeezing_annulus(dom, {0.0, -0.9}) == 0.9);
    CHECK(squeezing_annulus(dom, {0.3, 0.4}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(squeezing_annulus(dom, {-0.8, 0.0}) == 0.8);
    // the two branches cross at sqrt r
    const double sr = std::sqrt(0.25);
    CHECK(squeezing_annulus(dom, {sr, 0.0}) == sr);
    CHECK_THROWS_AS(squeezing_annulus(dom, {0.25, 0.0}), std::domain_error);
    CHECK_THROWS_AS(squeezing_annulus(dom, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(squeezing_annulus(dom, {0.1, 0.0}), std::domain_error);
}

TEST_CASE("reciprocal-radius conversion") {
    CHECK(fridman_h_from_H(0.5) == doctest::Approx(1.8204784532536747872).epsilon(1e-14));
    // round trip: tanh(1 / h) recovers H
    for (const double H : {0.1, 0.5, 0.9, 0.99}) {
        CHECK(std::tanh(1.0 / fridman_h_from_H(H)) == doctest::Approx(H).epsilon(1e-14));
    }
    // smaller H (smaller balls) means larger h
    CHECK(fridman_h_from_H(0.2) > fridman_h_from_H(0.8));
    CHECK_THROWS_AS(fridman_h_from_H(0.0), std::domain_error);
    CHECK_THROWS_AS(fridman_h_from_H(1.0), std::domain_error);
    CHECK_THROWS_AS(fridman_h_from_H(-0.3), std::domain_error);
}

TEST_CASE("punctured domains validate their punctures") {
    CHECK_NOTHROW(PuncturedDomain(UnitDisc{}, {{0.5, 0.0}, {-0.2, 0.1}}));
    CHECK_THROWS_AS(PuncturedDomain(UnitDisc{}, {{1.0, 0.0}}), std::domain_error);
    CHECK_THROWS_AS(PuncturedDomain(UnitDisc{}, {{0.5, 0.0}, {0.5, 0.0}}),
                    std::domain_error);
    CHECK_THROWS_AS(PuncturedDomain(Annulus{0.25}, {{0.1, 0.0}}), std::domain_error);
    CHECK_NOTHROW(PuncturedDomain(Annulus{0.25}, {{-0.5, 0.0}}));
    CHECK_NOTHROW(PuncturedDomain(UnitDisc{}, {}));

    const PuncturedDomain pd{UnitDisc{}, {{0.5, 0.0}}};
    CHECK(pd.contains({0.3, 0.0}));
    CHECK_FALSE(pd.contains({0.5, 0.0}));   // a puncture
    CHECK_FALSE(pd.contains({1.2, 0.0}));
    CHECK(pd.punctures().size() == 1);
}

TEST_CASE("metric oracles reproduce their base metrics") {
    const MetricOracle disc = metric_oracle(UnitDisc{});
    const RadiusPair d = disc({0.3, 0.0}, {0.5, 0.0});
    CHECK(d.tanh_scale == pseudo_hyperbolic(DiscPoint{{0.3, 0.0}}, DiscPoint{{0.5, 0.0}}));
    const MetricOracle ann = metric_oracle(Annulus{0.25});
    const RadiusPair a = ann({0.5, 0.0}, {-0.5, 0.0});
    CHECK(a.hyperbolic ==
          caratheodory_annulus(Annulus{0.25}, {0.5, 0.0}, {-0.5, 0.0}).hyperbolic);
}

TEST_CASE("gap report at the slit center carries both distance paths") {
    const InvariantReport rep = annulus_gap_report(Annulus{0.25}, 0.4, -0.5);
    CHECK(value_of(rep, "caratheodory.annulus.distance") ==
          doctest::Approx(2.9334162272928152084635358089).epsilon(1e-13));
    CHECK(value_of(rep, "squeezing.annulus") == 0.625);
    CHECK(value_of(rep, "margin.bound-minus-squeezing") > 0.0);
    // p = -sqrt r activates the slit-map shortcut and its margin
    CHECK(has_value(rep, "slit-map.tanh-c"));
    CHECK(has_value(rep, "margin.tanh-c-minus-r-over-z"));
    CHECK(check_of(rep, "cross-path-agreement"));
    CHECK(check_of(rep, "bound-exceeds-squeezing"));
    CHECK(check_of(rep, "tanh-c-exceeds-r-over-z"));
    CHECK(rep.pass);
    CHECK(rep.tolerance == 1e-10);

    const InvariantReport rep9 = annulus_gap_report(Annulus{0.09}, 0.5, -0.3);
    CHECK(value_of(rep9, "caratheodory.annulus.distance") ==
          doctest::Approx(1.4769664378018045584630165086).epsilon(1e-13));
    CHECK(rep9.pass);
}

TEST_CASE("gap report away from the slit center omits the shortcut") {
    const InvariantReport rep = annulus_gap_report(Annulus{0.25}, 0.4, -0.6);
    CHECK_FALSE(has_value(rep, "slit-map.tanh-c"));
    CHECK(has_value(rep, "upper-bound.min-tanh"));
    CHECK(check_of(rep, "bound-exceeds-squeezing"));
    CHECK(rep.pass);
}

TEST_CASE("gap report margin decays outside the inner band") {
    // z above sqrt r: the margin is not a theorem, so no pass flag is
    // asserted for it, but the report still carries the values
    const InvariantReport rep = annulus_gap_report(Annulus{0.25}, 0.9, -0.5);
    CHECK(has_value(rep, "margin.bound-minus-squeezing"));
    CHECK(rep.pass);
    // the margin thins as z approaches the outer boundary
    const double inner = value_of(annulus_gap_report(Annulus{0.25}, 0.4, -0.5),
                                  "margin.bound-minus-squeezing");
    const double outer = value_of(rep, "margin.bound-minus-squeezing");
    CHECK(inner > outer);
}

TEST_CASE("gap report validates its scalar inputs") {
    CHECK_THROWS_AS(annulus_gap_report(Annulus{0.25}, 0.2, -0.5), std::domain_error);
    CHECK_THROWS_AS(annulus_gap_report(Annulus{0.25}, 1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(annulus_gap_report(Annulus{0.25}, 0.4, -0.2), std::domain_error);
    CHECK_THROWS_AS(annulus_gap_report(Annulus{0.25}, 0.4, -1.0), std::domain_error);
    CHECK_THROWS_AS(annulus_gap_report(Annulus{0.25}, 0.4, 0.5), std::domain_error);
    CHECK_THROWS_AS(annulus_gap_report(Annulus{0.25}, 0.4, -0.5, 0.0), std::domain_error);
}
