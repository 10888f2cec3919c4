#include "holoinv/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "json.hpp"

namespace holoinv {

namespace {

double parse_real(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
        throw std::domain_error("bad number: '" + s + "'");
    return v;
}

std::string line(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (const char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::domain_error("parse_complex: empty input");
    if (s.back() != 'i') return {parse_real(s), 0.0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;
    if (split == std::string::npos) return {0.0, parse_real(s)};
    return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_complex(text.substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void parse_grid_dims(const std::string& text, GridSpec& grid) {
    const std::size_t x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= text.size())
        throw std::domain_error("grid must look like 1024x1024");
    const auto parse_count = [](const std::string& s) {
        for (const char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::domain_error("grid must look like 1024x1024");
        const long v = std::strtol(s.c_str(), nullptr, 10);
        if (v < 16 || v > 8192) throw std::domain_error("grid cells per axis must lie in [16, 8192]");
        return static_cast<int>(v);
    };
    grid.nx = parse_count(text.substr(0, x));
    grid.ny = parse_count(text.substr(x + 1));
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    if (text == "svg") return OutputFormat::svg;
    throw std::domain_error("format must be csv, json or svg");
}

double Rng::uniform(double lo, double hi) {
    // Hand-rolled so byte-determinism never depends on a standard
    // library's distribution internals.
    const std::uint64_t bits = gen_() >> 11;  // 53 bits
    return lo + (hi - lo) * (static_cast<double>(bits) * 0x1.0p-53);
}

Complex Rng::in_annulus(double r, double margin_fraction) {
    const double lo = r + margin_fraction * (1.0 - r);
    const double hi = 1.0 - margin_fraction * (1.0 - r);
    return std::polar(uniform(lo, hi), uniform(0.0, 2.0 * 3.14159265358979323846));
}

Complex Rng::in_disc(double max_modulus) {
    return std::polar(max_modulus * std::sqrt(uniform(0.0, 1.0)),
                      uniform(0.0, 2.0 * 3.14159265358979323846));
}

namespace {

void write_report_file(const InvariantReport& report, const RunConfig& cfg) {
    if (cfg.out_path.empty()) return;
    switch (cfg.format) {
        case OutputFormat::csv: write_text_file(cfg.out_path, report_to_csv(report)); break;
        case OutputFormat::json: write_text_file(cfg.out_path, report_to_json(report)); break;
        case OutputFormat::svg:
            throw std::domain_error("this command cannot render svg; use csv or json");
    }
}

}  // namespace

CommandResult run_dist(const RunConfig& cfg) {
    if (!cfg.z || !cfg.w) throw std::domain_error("dist: needs --z and --w");
    InvariantReport report;
    report.query = *cfg.z;
    std::string head;
    RadiusPair d;
    if (cfg.r) {
        d = caratheodory_annulus(Annulus{*cfg.r}, *cfg.z, *cfg.w);
        head = "caratheodory distance, annulus r = " + format_double(*cfg.r);
        report.values.emplace_back("caratheodory.annulus.tanh", d.tanh_scale);
        report.values.emplace_back("caratheodory.annulus.distance", d.hyperbolic);
    } else {
        d = RadiusPair::from_tanh(pseudo_hyperbolic(DiscPoint{*cfg.z}, DiscPoint{*cfg.w}));
        head = "poincare distance, unit disc";
        report.values.emplace_back("poincare.tanh", d.tanh_scale);
        report.values.emplace_back("poincare.distance", d.hyperbolic);
    }
    write_report_file(report, cfg);
    std::string out = head + "\n";
    out += "z = " + format_complex(*cfg.z) + ", w = " + format_complex(*cfg.w) + "\n";
    out += "tanh scale = " + format_double(d.tanh_scale) + "\n";
    out += "distance   = " + format_double(d.hyperbolic) + "\n";
    return {0, out};
}

CommandResult run_squeeze(const RunConfig& cfg) {
    if (!cfg.z) throw std::domain_error("squeeze: needs --z");
    InvariantReport report;
    report.query = *cfg.z;
    std::string out;
    if (!cfg.r) {
        if (cfg.punctures.empty())
            throw std::domain_error("squeeze: the disc case needs --punctures");
        std::vector<DiscPoint> pts;
        pts.reserve(cfg.punctures.size());
        for (const Complex& p : cfg.punctures) pts.emplace_back(p);
        const double s = squeezing_punctured_disc(DiscPoint{*cfg.z}, pts);
        const double f = fridman_injectivity_punctured_disc(DiscPoint{*cfg.z}, pts);
        const double g = general_upper_bound(*cfg.z, cfg.punctures, metric_oracle(UnitDisc{}));
        report.values.emplace_back("squeezing.punctured-disc", s);
        report.values.emplace_back("fridman.punctured-disc", f);
        report.values.emplace_back("upper-bound.min-tanh", g);
        out += "punctured unit disc, " + std::to_string(cfg.punctures.size()) + " puncture(s)\n";
        out += "squeezing = " + format_double(s) + "\n";
        out += "fridman   = " + format_double(f) + "\n";
        out += "upper bound (min tanh distance) = " + format_double(g) + "\n";
    } else {
        const Annulus dom{*cfg.r};
        const double s = squeezing_annulus(dom, *cfg.z);
        report.values.emplace_back("squeezing.annulus", s);
        out += "annulus r = " + format_double(*cfg.r) + "\n";
        out += "squeezing (closed form) = " + format_double(s) + "\n";
        if (!cfg.punctures.empty()) {
            const double g =
                general_upper_bound(*cfg.z, cfg.punctures, metric_oracle(Annulus{*cfg.r}));
            report.values.emplace_back("upper-bound.min-tanh", g);
            out += "upper bound over punctures (min tanh distance) = " + format_double(g) + "\n";
        }
    }
    write_report_file(report, cfg);
    return {0, out};
}

CommandResult run_verify(const RunConfig& cfg) {
    std::vector<std::string> names;
    if (cfg.suite == "all") {
        names = suite_names();
    } else {
        if (!is_suite_name(cfg.suite)) throw std::domain_error("unknown suite: " + cfg.suite);
        names.push_back(cfg.suite);
    }
    std::vector<CaseRow> rows;
    std::vector<SuiteResult> results;
    std::string out;
    bool all_pass = true;
    for (const std::string& name : names) {
        const SuiteResult res = run_suite(name, cfg, &rows);
        all_pass = all_pass && res.passed();
        out += line("[%s] %-28s cases %4d/%-4d max_err %.3e  (%.2f s)\n",
                    res.passed() ? "PASS" : "FAIL", res.suite.c_str(), res.cases_passed,
                    res.cases_run, res.max_error, res.wall_time_s);
        results.push_back(res);
    }
    out += line("%zu suite(s), %s\n", results.size(), all_pass ? "all passed" : "FAILURES present");
    if (!cfg.out_path.empty()) {
        switch (cfg.format) {
            case OutputFormat::csv: write_text_file(cfg.out_path, rows_to_csv(rows)); break;
            case OutputFormat::json:
                write_text_file(cfg.out_path, rows_to_json(rows, results));
                break;
            case OutputFormat::svg:
                throw std::domain_error("verify cannot render svg; use csv or json");
        }
    }
    return {all_pass ? 0 : 1, out};
}

CommandResult run_ball(const RunConfig& cfg) {
    if (!cfg.z) throw std::domain_error("ball: needs --z");
    if (cfg.radius && cfg.radius_tanh)
        throw std::domain_error("ball: give --radius or --radius-tanh, not both");
    if (!cfg.radius && !cfg.radius_tanh)
        throw std::domain_error("ball: needs --radius or --radius-tanh");
    const double radius = cfg.radius ? *cfg.radius : mu(*cfg.radius_tanh);
    const BaseDomain base = cfg.r ? BaseDomain{Annulus{*cfg.r}} : BaseDomain{UnitDisc{}};
    const PuncturedDomain domain{base, cfg.punctures};
    const GridMask mask = sample_metric_ball(domain, *cfg.z, radius, cfg.grid);
    const TopologySummary topo = classify_topology(mask);

    InvariantReport report;
    report.query = *cfg.z;
    report.values.emplace_back("ball.radius", radius);
    report.values.emplace_back("ball.radius.tanh", std::tanh(radius));
    report.values.emplace_back("ball.cells-true", static_cast<double>(mask.count()));
    report.values.emplace_back("topology.components", static_cast<double>(topo.components));
    report.values.emplace_back("topology.holes", static_cast<double>(topo.holes));
    report.values.emplace_back("topology.simply-connected", topo.simply_connected ? 1.0 : 0.0);

    if (!cfg.mask_out.empty()) write_text_file(cfg.mask_out, encode_mask(mask));
    if (!cfg.out_path.empty()) {
        switch (cfg.format) {
            case OutputFormat::svg: write_text_file(cfg.out_path, write_mask_svg(mask)); break;
            case OutputFormat::csv: write_text_file(cfg.out_path, report_to_csv(report)); break;
            case OutputFormat::json: write_text_file(cfg.out_path, report_to_json(report)); break;
        }
    }
    std::string out;
    out += "center " + format_complex(*cfg.z) + ", radius " + format_double(radius) + "\n";
    out += line("grid %dx%d over [%g,%g]x[%g,%g]\n", cfg.grid.nx, cfg.grid.ny, cfg.grid.xmin,
                cfg.grid.xmax, cfg.grid.ymin, cfg.grid.ymax);
    out += line("cells true: %zu, components: %d, holes: %d, simply connected: %s\n",
                mask.count(), topo.components, topo.holes,
                topo.simply_connected ? "yes" : "no");
    return {0, out};
}

namespace {

struct SweepRow {
    double param;
    const char* name;
    double value;
};

void write_sweep_rows(const RunConfig& cfg, const std::vector<SweepRow>& rows) {
    if (cfg.out_path.empty()) return;
    if (cfg.format == OutputFormat::csv) {
        std::string csv = "target,r,param,name,value\n";
        const std::string rtxt = cfg.r ? format_double(*cfg.r) : std::string{};
        for (const SweepRow& row : rows) {
            csv += cfg.target + ',' + rtxt + ',' + format_double(row.param) + ',' + row.name +
                   ',' + format_double(row.value) + '\n';
        }
        write_text_file(cfg.out_path, csv);
    } else if (cfg.format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["target"] = cfg.target;
        if (cfg.r) doc["r"] = *cfg.r;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const SweepRow& row : rows)
            doc["rows"].push_back({{"param", row.param}, {"name", row.name}, {"value", row.value}});
        write_text_file(cfg.out_path, doc.dump(2) + "\n");
    }
}

}  // namespace

CommandResult run_sweep(const RunConfig& cfg) {
    if (cfg.target.empty()) throw std::domain_error("sweep: needs --target");
    if (cfg.samples < 2 || cfg.samples > 100000)
        throw std::domain_error("sweep: samples must lie in [2, 100000]");
    std::string out;

    if (cfg.target == "annulus-squeezing") {
        if (!cfg.r) throw std::domain_error("sweep annulus-squeezing: needs --r");
        const Annulus dom{*cfg.r};
        if (cfg.format == OutputFormat::svg) {
            if (cfg.out_path.empty())
                throw std::domain_error("sweep with svg output needs --out");
            const GridSpec& g = cfg.grid;
            g.validate();
            std::vector<double> values(static_cast<std::size_t>(g.nx) * g.ny,
                                       std::numeric_limits<double>::quiet_NaN());
            double vmin = std::numeric_limits<double>::infinity(), vmax = 0.0;
            for (int iy = 0; iy < g.ny; ++iy) {
                for (int ix = 0; ix < g.nx; ++ix) {
                    const Complex q = g.cell_center(ix, iy);
                    const double m = std::abs(q);
                    if (!(m > dom.r()) || !(m < 1.0)) continue;
                    const double s = squeezing_annulus(dom, q);
                    values[static_cast<std::size_t>(iy) * g.nx + ix] = s;
                    vmin = std::min(vmin, s);
                    vmax = std::max(vmax, s);
                }
            }
            if (!(vmax > vmin)) throw std::domain_error("sweep: grid misses the annulus");
            write_text_file(cfg.out_path, write_value_svg(g, values, vmin, vmax));
            out += line("squeezing heat map, %dx%d cells, value range [%.6f, %.6f]\n", g.nx,
                        g.ny, vmin, vmax);
            return {0, out};
        }
        const double lo = dom.r() + 0.01 * (1.0 - dom.r());
        const double hi = 1.0 - 0.01 * (1.0 - dom.r());
        std::vector<SweepRow> rows;
        double best = std::numeric_limits<double>::infinity(), best_m = lo;
        for (int k = 0; k < cfg.samples; ++k) {
            const double m = lo + (hi - lo) * k / (cfg.samples - 1);
            const double s = squeezing_annulus(dom, {m, 0.0});
            rows.push_back({m, "squeezing", s});
            if (s < best) {
                best = s;
                best_m = m;
            }
        }
        write_sweep_rows(cfg, rows);
        out += line("%d samples over |z| in [%.6f, %.6f]\n", cfg.samples, lo, hi);
        out += line("min squeezing %.17g at |z| = %.17g (sqrt r = %.17g)\n", best, best_m,
                    std::sqrt(dom.r()));
        return {0, out};
    }

    if (cfg.target == "gap-margin") {
        if (!cfg.r) throw std::domain_error("sweep gap-margin: needs --r");
        const Annulus dom{*cfg.r};
        const double sr = std::sqrt(dom.r());
        double p = -sr;
        if (cfg.w) {
            if (cfg.w->imag() != 0.0 || !(cfg.w->real() > -1.0) || !(cfg.w->real() < -dom.r()))
                throw std::domain_error("sweep gap-margin: --w must be real in (-1, -r)");
            p = cfg.w->real();
        }
        if (cfg.format == OutputFormat::svg)
            throw std::domain_error("sweep gap-margin cannot render svg");
        const double inset = 0.01 * (sr - dom.r());
        std::vector<SweepRow> rows;
        double min_margin = std::numeric_limits<double>::infinity();
        for (int k = 0; k < cfg.samples; ++k) {
            const double z =
                dom.r() + inset + (sr - dom.r() - 2.0 * inset) * k / (cfg.samples - 1);
            const double tc = caratheodory_annulus(dom, {z, 0.0}, {p, 0.0}).tanh_scale;
            const double s = squeezing_annulus(dom, {z, 0.0});
            rows.push_back({z, "tanh_c", tc});
            rows.push_back({z, "squeezing", s});
            rows.push_back({z, "margin", tc - s});
            min_margin = std::min(min_margin, tc - s);
        }
        write_sweep_rows(cfg, rows);
        out += line("%d samples over z in (r, sqrt r), p = %.17g\n", cfg.samples, p);
        out += line("min margin tanh_c - squeezing = %.17g\n", min_margin);
        return {0, out};
    }

    if (cfg.target == "threshold-disc") {
        if (cfg.format == OutputFormat::svg)
            throw std::domain_error("sweep threshold-disc cannot render svg");
        GridSpec grid = cfg.grid;
        if (!cfg.grid_given) grid.nx = grid.ny = 256;
        const int pairs = std::min(cfg.samples, 50);
        Rng rng(cfg.seed);
        std::vector<SweepRow> rows;
        double worst = 0.0;
        for (int i = 0; i < pairs; ++i) {
            const Complex z = rng.in_disc(0.5);
            Complex w = rng.in_disc(0.6);
            while (pseudo_hyperbolic(DiscPoint{z}, DiscPoint{w}) < 0.15) w = rng.in_disc(0.6);
            const double expected = mu(pseudo_hyperbolic(DiscPoint{z}, DiscPoint{w}));
            const PuncturedDomain domain{UnitDisc{}, {w}};
            const double thr = simple_connectivity_threshold(domain, z, grid, 0.25 * expected,
                                                             expected + 0.7, 14);
            const double slack = 2.0 * grid.cell_diagonal() / (1.0 - std::norm(w)) +
                                 (expected + 0.7 - 0.25 * expected) / (1 << 14);
            rows.push_back({static_cast<double>(i), "threshold", thr});
            rows.push_back({static_cast<double>(i), "closed_form", expected});
            rows.push_back({static_cast<double>(i), "difference", thr - expected});
            rows.push_back({static_cast<double>(i), "slack", slack});
            worst = std::max(worst, std::abs(thr - expected));
        }
        write_sweep_rows(cfg, rows);
        out += line("%d pair(s) on a %dx%d grid, worst |threshold - distance| = %.6g\n", pairs,
                    grid.nx, grid.ny, worst);
        return {0, out};
    }

    throw std::domain_error("unknown sweep target: " + cfg.target);
}

}  // namespace holoinv
