// Command-line front end: dist / squeeze / verify / ball / sweep.
// Exit codes: 0 success, 1 checks failed, 2 unusable configuration.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "holoinv/harness.hpp"

int main(int argc, char** argv) {
    using namespace holoinv;

    CLI::App app{"conformal invariants on the unit disc and the annulus"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string z_text, w_text, punctures_text, grid_text, format_text = "csv";
    bool list_suites = false;

    CLI::App* dist = app.add_subcommand("dist", "distance between two points");
    CLI::App* squeeze = app.add_subcommand("squeeze", "squeezing and related invariants at a point");
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    CLI::App* ball = app.add_subcommand("ball", "rasterize a metric ball, classify its topology");
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweeps to csv/json/svg");

    for (CLI::App* cmd : {dist, squeeze, verify, ball, sweep}) {
        cmd->add_option("--r", cfg.r, "annulus inner radius in (0,1); omit for the unit disc");
        cmd->add_option("--z", z_text, "query point, e.g. 0.5 or 0.3-0.2i");
        cmd->add_option("--out", cfg.out_path, "write results to this file");
        cmd->add_option("--format", format_text, "output format: csv, json or svg")
            ->capture_default_str();
        cmd->add_option("--tol", cfg.tol, "tolerance for report pass flags")
            ->capture_default_str();
        cmd->add_option("--seed", cfg.seed, "seed for every random stream")
            ->capture_default_str();
    }
    dist->add_option("--w", w_text, "second point");
    sweep->add_option("--w", w_text, "gap-margin only: the real puncture p in (-1, -r)");
    for (CLI::App* cmd : {squeeze, ball})
        cmd->add_option("--punctures", punctures_text,
                        "comma-separated points to remove, e.g. 0.5,-0.2+0.1i");
    ball->add_option("--radius", cfg.radius, "ball radius, hyperbolic scale");
    ball->add_option("--radius-tanh", cfg.radius_tanh, "ball radius, tanh scale in (0,1)");
    ball->add_option("--mask-out", cfg.mask_out, "write the run-length-encoded cell mask here");
    for (CLI::App* cmd : {verify, ball, sweep})
        cmd->add_option("--grid", grid_text, "grid cells as NxM, e.g. 1024x1024");
    verify->add_option("--suite", cfg.suite, "suite name, or 'all'")->capture_default_str();
    verify->add_flag("--list-suites", list_suites, "print the suite names and exit");
    for (CLI::App* cmd : {verify, sweep})
        cmd->add_option("--samples", cfg.samples, "sample count where a sweep honors it")
            ->capture_default_str();
    sweep->add_option("--target", cfg.target,
                      "annulus-squeezing | gap-margin | threshold-disc");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!z_text.empty()) cfg.z = parse_complex(z_text);
        if (!w_text.empty()) cfg.w = parse_complex(w_text);
        if (!punctures_text.empty()) cfg.punctures = parse_complex_list(punctures_text);
        if (!grid_text.empty()) {
            parse_grid_dims(grid_text, cfg.grid);
            cfg.grid_given = true;
        }
        cfg.format = parse_format(format_text);
        if (cfg.r && (!(*cfg.r > 0.0) || !(*cfg.r < 1.0)))
            throw std::domain_error("--r must lie strictly between 0 and 1");

        if (verify->parsed() && list_suites) {
            for (const std::string& name : suite_names()) std::printf("%s\n", name.c_str());
            return 0;
        }

        CommandResult res;
        if (dist->parsed()) res = run_dist(cfg);
        else if (squeeze->parsed()) res = run_squeeze(cfg);
        else if (verify->parsed()) res = run_verify(cfg);
        else if (ball->parsed()) res = run_ball(cfg);
        else res = run_sweep(cfg);
        std::fputs(res.summary.c_str(), stdout);
        return res.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
