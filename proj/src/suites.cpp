#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numbers>

#include "holoinv/harness.hpp"

namespace holoinv {

namespace {

constexpr double kPi = std::numbers::pi;

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void add_case(SuiteResult& res, std::vector<CaseRow>* rows, CaseRow row) {
    ++res.cases_run;
    if (row.pass) ++res.cases_passed;
    if (std::isfinite(row.error)) res.max_error = std::max(res.max_error, row.error);
    if (rows) rows->push_back(std::move(row));
}

double rel_err(const Complex& a, const Complex& b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string num(double v) { return format_double(v); }

// ---------------------------------------------------------------- identities

SuiteResult suite_prime_identities(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "prime-identities"};
    const double tol = 1e-10;
    Rng rng(cfg.seed);
    for (int i = 0; i < 1000; ++i) {
        const double r = rng.uniform(0.05, 0.8);
        const Annulus dom{r};
        const auto point = [&] {
            return std::polar(rng.uniform(0.5 * r, 2.0), rng.uniform(0.0, 2.0 * kPi));
        };
        const Complex a = point(), b = point();
        const Complex w = prime_omega(dom, a, b);
        const std::string input = "i=" + std::to_string(i) + ";r=" + num(r) +
                                  ";a=" + format_complex(a) + ";b=" + format_complex(b);
        const auto check = [&](const char* formula, const Complex& lhs, const Complex& rhs) {
            const double err = rel_err(lhs, rhs);
            add_case(res, rows,
                     {res.suite, formula, input, 0.0, err, err, tol, err <= tol});
        };
        check("antisymmetry", prime_omega(dom, b, a), -w);
        check("conjugation", prime_omega(dom, std::conj(a), std::conj(b)), std::conj(w));
        check("inversion", prime_omega(dom, 1.0 / a, 1.0 / b), -w / (a * b));
        check("quasi-periodicity", prime_omega(dom, r * r * a, b), -b * w / a);
    }
    return res;
}

SuiteResult suite_cross_formula(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "cross-formula"};
    const double tol = 1e-8;
    Rng rng(cfg.seed);
    for (int i = 0; i < 200; ++i) {
        const double r = rng.uniform(0.05, 0.7);
        const Annulus dom{r};
        const Complex a = rng.in_annulus(r, 0.05), b = rng.in_annulus(r, 0.05);
        const double t1 = caratheodory_annulus(dom, a, b).tanh_scale;
        const auto norm = normalize_annulus(dom);
        const double t2 =
            simha_caratheodory(norm.domain, norm.scale * a, norm.scale * b).tanh_scale;
        const double err = std::abs(t1 - t2);
        add_case(res, rows,
                 {res.suite, "cross-formula.tanh",
                  "i=" + std::to_string(i) + ";r=" + num(r) + ";a=" + format_complex(a) +
                      ";b=" + format_complex(b),
                  t1, t2, err, tol, err <= tol});
    }
    return res;
}

SuiteResult suite_conjugation_symmetry(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "conjugation-symmetry"};
    const double tol = 1e-10;
    Rng rng(cfg.seed);
    for (int i = 0; i < 200; ++i) {
        const double r = rng.uniform(0.05, 0.7);
        const Annulus dom{r};
        const double z = rng.uniform(r + 0.02 * (1.0 - r), 1.0 - 0.02 * (1.0 - r));
        const Complex w = rng.in_annulus(r, 0.02);
        const double d1 = caratheodory_annulus(dom, {z, 0.0}, w).hyperbolic;
        const double d2 = caratheodory_annulus(dom, {z, 0.0}, std::conj(w)).hyperbolic;
        const double err = std::abs(d1 - d2);
        add_case(res, rows,
                 {res.suite, "conjugation-symmetry",
                  "i=" + std::to_string(i) + ";r=" + num(r) + ";z=" + num(z) +
                      ";w=" + format_complex(w),
                  d1, d2, err, tol, err <= tol});
    }
    return res;
}

SuiteResult suite_reflection_identity(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "reflection-identity"};
    const double tol = 1e-10;
    Rng rng(cfg.seed);
    for (const double r : {0.04, 0.09, 0.25}) {
        const Annulus dom{r};
        const double z = 0.5 * (r + 1.0);
        const double sr = std::sqrt(r);
        for (int i = 0; i < 100; ++i) {
            // Stay in the middle of the slit so both w and r/w keep a
            // comfortable distance to the boundary circles.
            const double w = -rng.uniform(0.5 * (r + sr), 0.5 * (1.0 + sr));
            const double d1 = caratheodory_annulus(dom, {z, 0.0}, {w, 0.0}).hyperbolic;
            const double d2 = caratheodory_annulus(dom, {z, 0.0}, {r / w, 0.0}).hyperbolic;
            const double err = std::abs(d1 - d2);
            add_case(res, rows,
                     {res.suite, "reflection-identity",
                      "r=" + num(r) + ";z=" + num(z) + ";w=" + num(w), d1, d2, err, tol,
                      err <= tol});
        }
    }
    return res;
}

SuiteResult suite_minimum_location(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    (void)cfg;
    SuiteResult res{.suite = "minimum-location"};
    constexpr int kGrid = 10000;
    for (const double r : {0.04, 0.09, 0.25}) {
        const Annulus dom{r};
        const double z = 0.5 * (r + 1.0);
        const double sr = std::sqrt(r);
        const double step = (1.0 - r) / kGrid;
        double best = 0.0, best_w = 0.0;
        const double at_sr = caratheodory_annulus(dom, {z, 0.0}, {-sr, 0.0}).hyperbolic;
        double min_margin = std::numeric_limits<double>::infinity();
        for (int k = 1; k < kGrid; ++k) {
            const double w = -1.0 + k * step;
            const double d = caratheodory_annulus(dom, {z, 0.0}, {w, 0.0}).hyperbolic;
            if (k == 1 || d < best) {
                best = d;
                best_w = w;
            }
            min_margin = std::min(min_margin, d - at_sr);
        }
        const std::string input = "r=" + num(r) + ";z=" + num(z);
        const double loc_err = std::abs(best_w + sr);
        add_case(res, rows,
                 {res.suite, "argmin-location", input, -sr, best_w, loc_err, step,
                  loc_err <= step});
        // Every sampled w must sit strictly above the value at -sqrt r.
        add_case(res, rows,
                 {res.suite, "strict-minimum", input, 0.0, min_margin, 0.0, 0.0,
                  min_margin > 0.0});
    }
    return res;
}

SuiteResult suite_squeezing_gap(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "squeezing-gap"};
    const double tol = 1e-10;
    Rng rng(cfg.seed);
    for (const double r : {0.04, 0.25, 0.5}) {
        const Annulus dom{r};
        const double sr = std::sqrt(r);
        const double inset = 0.01 * (sr - r);  // open interval, 1% inset
        for (int i = 0; i < 100; ++i) {
            const double z = rng.uniform(r + inset, sr - inset);
            const double tc = tanh_c_minus_sqrt_r(dom, z);
            const double margin_slit = tc - r / z;
            const double margin_squeeze = tc - squeezing_annulus(dom, {z, 0.0});
            const std::string input = "r=" + num(r) + ";z=" + num(z);
            add_case(res, rows,
                     {res.suite, "slit-gap", input, 0.0, margin_slit, 0.0, tol,
                      margin_slit > tol});
            add_case(res, rows,
                     {res.suite, "exceeds-squeezing", input, 0.0, margin_squeeze, 0.0, tol,
                      margin_squeeze > tol});
        }
    }
    return res;
}

SuiteResult suite_slit_map(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "slit-map"};
    Rng rng(cfg.seed);
    for (const double r : {0.04, 0.25, 0.5}) {
        const Annulus dom{r};
        const double sr = std::sqrt(r);
        const std::string input = "r=" + num(r);

        double boundary_dev = 0.0;
        for (int j = 0; j < 360; ++j) {
            const Complex z = std::polar(1.0, 2.0 * kPi * j / 360.0);
            boundary_dev = std::max(boundary_dev, std::abs(std::abs(slit_map(dom, z)) - 1.0));
        }
        add_case(res, rows,
                 {res.suite, "boundary-modulus", input, 0.0, boundary_dev, boundary_dev, 1e-8,
                  boundary_dev <= 1e-8});

        const double zero_residue = std::abs(slit_map(dom, {-std::sqrt(r), 0.0}));
        add_case(res, rows,
                 {res.suite, "zero-at-minus-sqrt-r", input, 0.0, zero_residue, zero_residue,
                  1e-10, zero_residue <= 1e-10});

        double inner_min = std::numeric_limits<double>::infinity();
        double inner_max = 0.0, inner_sum = 0.0;
        for (int j = 0; j < 360; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / 360.0);
            const double m = std::abs(slit_map(dom, z));
            inner_min = std::min(inner_min, m);
            inner_max = std::max(inner_max, m);
            inner_sum += m;
        }
        const double spread = inner_max - inner_min;
        add_case(res, rows,
                 {res.suite, "inner-circle-spread", input, 0.0, spread, spread, 1e-6,
                  spread <= 1e-6});
        const double inner_value = inner_sum / 360.0;
        add_case(res, rows,
                 {res.suite, "inner-circle-value", input, sr, inner_value,
                  std::abs(inner_value - sr), 1e-8, std::abs(inner_value - sr) <= 1e-8});

        double conj_dev = 0.0;
        for (int i = 0; i < 50; ++i) {
            const Complex z = std::polar(rng.uniform(r, 1.0), rng.uniform(0.0, 2.0 * kPi));
            conj_dev = std::max(
                conj_dev, std::abs(slit_map(dom, std::conj(z)) - std::conj(slit_map(dom, z))));
        }
        add_case(res, rows,
                 {res.suite, "map-conjugation", input, 0.0, conj_dev, conj_dev, 1e-10,
                  conj_dev <= 1e-10});
    }
    return res;
}

SuiteResult suite_punctured_disc(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "punctured-disc-closed-form"};
    const double tol = 1e-12;
    Rng rng(cfg.seed);
    const MetricOracle disc_metric = metric_oracle(UnitDisc{});
    for (int i = 0; i < 500; ++i) {
        const int k = 1 + static_cast<int>(rng.uniform(0.0, 20.0));
        std::vector<Complex> punctures;
        std::vector<DiscPoint> puncture_points;
        while (static_cast<int>(punctures.size()) < k) {
            const Complex w = rng.in_disc(0.95);
            if (std::find(punctures.begin(), punctures.end(), w) != punctures.end()) continue;
            punctures.push_back(w);
            puncture_points.emplace_back(w);
        }
        Complex z = rng.in_disc(0.95);
        while (std::find(punctures.begin(), punctures.end(), z) != punctures.end())
            z = rng.in_disc(0.95);
        const DiscPoint zp{z};

        // Independent brute force, written against the raw formula.
        double brute = 2.0;
        for (const Complex& w : punctures)
            brute = std::min(brute, std::abs((w - z) / (1.0 - std::conj(z) * w)));

        const double s = squeezing_punctured_disc(zp, puncture_points);
        const double f = fridman_injectivity_punctured_disc(zp, puncture_points);
        const double g = general_upper_bound(z, punctures, disc_metric);
        const std::string input =
            "i=" + std::to_string(i) + ";k=" + std::to_string(k) + ";z=" + format_complex(z);
        add_case(res, rows,
                 {res.suite, "squeezing-closed-form", input, brute, s, std::abs(s - brute), tol,
                  std::abs(s - brute) <= tol});
        add_case(res, rows,
                 {res.suite, "fridman-equals-squeezing", input, s, f, std::abs(f - s), tol,
                  std::abs(f - s) <= tol});
        add_case(res, rows,
                 {res.suite, "upper-bound-equality", input, s, g, std::abs(g - s), tol,
                  std::abs(g - s) <= tol});
    }
    return res;
}

SuiteResult suite_upper_bound(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "upper-bound"};
    Rng rng(cfg.seed);

    // Disc: the generic bound collapses to the closed form.
    const MetricOracle disc_metric = metric_oracle(UnitDisc{});
    for (int i = 0; i < 100; ++i) {
        std::vector<Complex> punctures{rng.in_disc(0.9), rng.in_disc(0.9), rng.in_disc(0.9)};
        const Complex z = rng.in_disc(0.9);
        std::vector<DiscPoint> pts;
        for (const Complex& w : punctures) pts.emplace_back(w);
        const double s = squeezing_punctured_disc(DiscPoint{z}, pts);
        const double g = general_upper_bound(z, punctures, disc_metric);
        add_case(res, rows,
                 {res.suite, "disc-equality", "i=" + std::to_string(i) + ";z=" + format_complex(z),
                  s, g, std::abs(g - s), 1e-12, std::abs(g - s) <= 1e-12});
    }

    // Annulus: pinned value, evaluated through the generic bound.
    {
        const double expected = 0.93017970542946098;  // tanh c_{A_0.1}(0.5, -0.5)
        const double g =
            general_upper_bound({0.5, 0.0}, std::vector<Complex>{{-0.5, 0.0}},
                                metric_oracle(Annulus{0.1}));
        add_case(res, rows,
                 {res.suite, "annulus-pinned-value", "r=0.1;z=0.5;p=-0.5", expected, g,
                  std::abs(g - expected), 1e-10, std::abs(g - expected) <= 1e-10});
    }

    // Adding punctures can only sharpen the bound.
    for (int i = 0; i < 50; ++i) {
        std::vector<Complex> punctures{rng.in_disc(0.9), rng.in_disc(0.9)};
        const Complex z = rng.in_disc(0.9);
        const double g1 = general_upper_bound(z, punctures, disc_metric);
        punctures.push_back(rng.in_disc(0.9));
        const double g2 = general_upper_bound(z, punctures, disc_metric);
        add_case(res, rows,
                 {res.suite, "monotone-in-punctures",
                  "i=" + std::to_string(i) + ";z=" + format_complex(z), g1, g2, 0.0, 0.0,
                  g2 <= g1 + 1e-15});
    }
    return res;
}

// ---------------------------------------------------------------- grid balls

SuiteResult suite_ball_threshold_disc(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "ball-threshold-disc"};
    Rng rng(cfg.seed);
    const GridSpec grid = cfg.grid;
    constexpr int kSteps = 14;
    for (int i = 0; i < 10; ++i) {
        const Complex z = rng.in_disc(0.5);
        Complex w = rng.in_disc(0.6);
        while (pseudo_hyperbolic(DiscPoint{z}, DiscPoint{w}) < 0.15) w = rng.in_disc(0.6);
        const double rho = pseudo_hyperbolic(DiscPoint{z}, DiscPoint{w});
        const double expected = mu(rho);
        const PuncturedDomain domain{UnitDisc{}, {w}};
        const double lo = 0.25 * expected;
        const double hi = expected + 0.7;
        const double thr = simple_connectivity_threshold(domain, z, grid, lo, hi, kSteps);
        // Slack: two cell diagonals at the puncture's hyperbolic
        // density, plus the bisection resolution.
        const double slack = 2.0 * grid.cell_diagonal() / (1.0 - std::norm(w)) +
                             (hi - lo) / (1 << kSteps);
        const double err = std::abs(thr - expected);
        add_case(res, rows,
                 {res.suite, "threshold-vs-distance",
                  "i=" + std::to_string(i) + ";z=" + format_complex(z) +
                      ";w=" + format_complex(w),
                  expected, thr, err, slack, err <= slack});
    }
    return res;
}

SuiteResult run_wrap_suite(const char* name, double p_re, const RunConfig& cfg,
                           std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = name};
    Stopwatch sw;
    const Annulus dom{0.25};
    const Complex z{0.5, 0.0};
    const Complex p{p_re, 0.0};
    const double sr = std::sqrt(0.25);
    const double dist_p = caratheodory_annulus(dom, z, p).hyperbolic;
    const double dist_wrap = caratheodory_annulus(dom, z, {-sr, 0.0}).hyperbolic;
    const double radius = 0.99 * dist_p;
    const std::string input = "r=0.25;z=0.5;p=" + num(p_re) + ";radius=" + num(radius);

    const PuncturedDomain domain{dom, {p}};
    const GridMask mask = sample_metric_ball(domain, z, radius, cfg.grid);
    const TopologySummary topo = classify_topology(mask);

    const GridSpec& g = mask.spec();
    const int ix = std::clamp(static_cast<int>(std::floor((-sr - g.xmin) / g.dx())), 0, g.nx - 1);
    const int iy = std::clamp(static_cast<int>(std::floor((0.0 - g.ymin) / g.dy())), 0, g.ny - 1);
    const bool contains = mask.at(ix, iy);

    add_case(res, rows,
             {res.suite, "radius-exceeds-wrap-distance", input, 1.0,
              radius > dist_wrap ? 1.0 : 0.0, 0.0, 0.0, radius > dist_wrap});
    add_case(res, rows,
             {res.suite, "contains-minus-sqrt-r-cell", input, 1.0, contains ? 1.0 : 0.0, 0.0,
              0.0, contains});
    add_case(res, rows,
             {res.suite, "single-component", input, 1.0,
              static_cast<double>(topo.components), 0.0, 0.0, topo.components == 1});
    add_case(res, rows,
             {res.suite, "not-simply-connected", input, 1.0,
              topo.simply_connected ? 0.0 : 1.0, 0.0, 0.0, !topo.simply_connected});
    const double secs = sw.elapsed();
    add_case(res, rows,
             {res.suite, "runtime-under-60s", input, 60.0, secs, 0.0, 0.0, secs < 60.0});
    return res;
}

SuiteResult suite_ball_annulus_wrap(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    // p sits exactly at -sqrt r, where c(z, .) attains its minimum on
    // the slit: at radius 0.99 c(z,p) the ball cannot reach the axis,
    // so the wrap checks are expected to come out red. The -interior
    // variant below moves p strictly inside (-1, -sqrt r), where the
    // wrap genuinely occurs.
    return run_wrap_suite("ball-annulus-wrap", -0.5, cfg, rows);
}

SuiteResult suite_ball_annulus_wrap_interior(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    return run_wrap_suite("ball-annulus-wrap-interior", -0.6, cfg, rows);
}

SuiteResult suite_annulus_squeezing(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "annulus-squeezing"};
    const double tol = 1e-12;
    const double r = cfg.r.value_or(0.25);
    const Annulus dom{r};
    const double sr = std::sqrt(r);
    const double lo = r + 0.01 * (1.0 - r), hi = 1.0 - 0.01 * (1.0 - r);

    // 50 moduli below sqrt r, the exact sqrt r, 50 above: 101 samples.
    std::vector<double> moduli;
    for (int k = 0; k < 50; ++k) moduli.push_back(lo + (sr - lo) * k / 50.0);
    moduli.push_back(sr);
    for (int k = 1; k <= 50; ++k) moduli.push_back(sr + (hi - sr) * k / 50.0);

    double max_err = 0.0, min_value = std::numeric_limits<double>::infinity();
    std::size_t argmin = 0;
    std::vector<double> values;
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        const Complex z = std::polar(moduli[k], 2.0 * kPi * static_cast<double>(k) / 101.0);
        const double s = squeezing_annulus(dom, z);
        const double closed = std::max(std::abs(z), r / std::abs(z));
        max_err = std::max(max_err, std::abs(s - closed));
        values.push_back(s);
        if (s < min_value) {
            min_value = s;
            argmin = k;
        }
    }
    const std::string input = "r=" + num(r);
    add_case(res, rows,
             {res.suite, "closed-form", input, 0.0, max_err, max_err, tol, max_err <= tol});
    add_case(res, rows,
             {res.suite, "minimum-at-sqrt-r", input, sr, min_value, std::abs(min_value - sr),
              tol, argmin == 50 && std::abs(min_value - sr) <= tol});
    bool v_shape = true;
    double min_step = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const double d = values[k + 1] - values[k];
        if (k + 1 <= 50) v_shape = v_shape && d < 0.0;
        else v_shape = v_shape && d > 0.0;
        min_step = std::min(min_step, std::abs(d));
    }
    add_case(res, rows,
             {res.suite, "v-shape-monotone", input, 1.0, v_shape ? 1.0 : 0.0, 0.0, 0.0,
              v_shape});
    return res;
}

SuiteResult suite_determinism(const RunConfig& cfg, std::vector<CaseRow>* rows);

struct SuiteEntry {
    const char* name;
    SuiteResult (*fn)(const RunConfig&, std::vector<CaseRow>*);
};

constexpr SuiteEntry kSuites[] = {
    {"prime-identities", suite_prime_identities},
    {"cross-formula", suite_cross_formula},
    {"conjugation-symmetry", suite_conjugation_symmetry},
    {"reflection-identity", suite_reflection_identity},
    {"minimum-location", suite_minimum_location},
    {"squeezing-gap", suite_squeezing_gap},
    {"slit-map", suite_slit_map},
    {"punctured-disc-closed-form", suite_punctured_disc},
    {"upper-bound", suite_upper_bound},
    {"ball-threshold-disc", suite_ball_threshold_disc},
    {"ball-annulus-wrap", suite_ball_annulus_wrap},
    {"ball-annulus-wrap-interior", suite_ball_annulus_wrap_interior},
    {"annulus-squeezing", suite_annulus_squeezing},
    {"determinism", suite_determinism},
};

SuiteResult suite_determinism(const RunConfig& cfg, std::vector<CaseRow>* rows) {
    SuiteResult res{.suite = "determinism"};
    const auto stable = [&](const char* what, const std::string& x, const std::string& y) {
        const bool equal = x == y;
        add_case(res, rows,
                 {res.suite, what, "seed=" + std::to_string(cfg.seed), 0.0,
                  equal ? 0.0 : 1.0, 0.0, 0.0, equal});
    };

    std::vector<CaseRow> r1, r2;
    SuiteResult s1 = run_suite("conjugation-symmetry", cfg, &r1);
    SuiteResult s2 = run_suite("conjugation-symmetry", cfg, &r2);
    stable("verify-csv-stable", rows_to_csv(r1), rows_to_csv(r2));
    stable("verify-json-stable", rows_to_json(r1, std::span{&s1, 1}),
           rows_to_json(r2, std::span{&s2, 1}));

    std::vector<CaseRow> c1, c2;
    SuiteResult cs1 = run_suite("cross-formula", cfg, &c1);
    (void)cs1;
    SuiteResult cs2 = run_suite("cross-formula", cfg, &c2);
    (void)cs2;
    stable("seeded-suite-csv-stable", rows_to_csv(c1), rows_to_csv(c2));

    // Round trip through an actual file, binary-exact.
    const auto path =
        std::filesystem::temp_directory_path() / "holoinv-determinism-check.csv";
    const std::string csv = rows_to_csv(r1);
    write_text_file(path.string(), csv);
    stable("file-round-trip-stable", csv, read_text_file(path.string()));
    std::filesystem::remove(path);

    GridSpec small;
    small.nx = small.ny = 64;
    const PuncturedDomain domain{UnitDisc{}, {Complex{0.5, 0.0}}};
    const GridMask m1 = sample_metric_ball(domain, Complex{0.0, 0.0}, 1.0, small);
    const GridMask m2 = sample_metric_ball(domain, Complex{0.0, 0.0}, 1.0, small);
    stable("mask-rle-stable", encode_mask(m1), encode_mask(m2));
    stable("mask-svg-stable", write_mask_svg(m1), write_mask_svg(m2));
    return res;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const SuiteEntry& e : kSuites) names.emplace_back(e.name);
    return names;
}

bool is_suite_name(const std::string& name) {
    for (const SuiteEntry& e : kSuites)
        if (name == e.name) return true;
    return false;
}

SuiteResult run_suite(const std::string& name, const RunConfig& config,
                      std::vector<CaseRow>* rows) {
    for (const SuiteEntry& e : kSuites) {
        if (name != e.name) continue;
        Stopwatch sw;
        SuiteResult res = e.fn(config, rows);
        res.wall_time_s = sw.elapsed();
        return res;
    }
    throw std::domain_error("unknown suite: " + name);
}

}  // namespace holoinv
