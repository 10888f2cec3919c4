#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holoinv/grid.hpp"
#include "holoinv/report.hpp"

namespace holoinv {

enum class OutputFormat { csv, json, svg };

/// Everything a command run needs, already validated and typed.
struct RunConfig {
    std::optional<double> r;            // annulus modulus; absent -> unit disc
    std::vector<Complex> punctures;
    std::optional<Complex> z;
    std::optional<Complex> w;
    std::optional<double> radius;       // hyperbolic scale
    std::optional<double> radius_tanh;
    double tol = 1e-10;
    std::uint64_t seed = 42;
    int samples = 100;
    GridSpec grid{};
    bool grid_given = false;            // user overrode the grid dimensions
    std::string suite = "all";
    std::string target;                 // sweep target
    std::string out_path;
    std::string mask_out;               // ball: RLE mask destination
    OutputFormat format = OutputFormat::csv;
};

Complex parse_complex(const std::string& text);               // "a", "bi", "a+bi", "a-bi"
std::vector<Complex> parse_complex_list(const std::string& text);  // comma-separated
void parse_grid_dims(const std::string& text, GridSpec& grid);     // "NxM"
OutputFormat parse_format(const std::string& text);

/// Seeded uniform sampling used by every suite; one stream per suite
/// keeps runs reproducible and suites independent of execution order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi);
    Complex in_annulus(double r, double margin_fraction);  // modulus margin_fraction inside each edge
    Complex in_disc(double max_modulus);

private:
    std::mt19937_64 gen_;
};

/// Registered verification suites, in declaration order.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Run one suite; rows (when non-null) receives the per-case records.
SuiteResult run_suite(const std::string& name, const RunConfig& config,
                      std::vector<CaseRow>* rows);

struct CommandResult {
    int exit_code = 0;      // 0 ok, 1 checks failed, 2 unusable configuration
    std::string summary;    // human-readable text for stdout
};

CommandResult run_dist(const RunConfig& config);
CommandResult run_squeeze(const RunConfig& config);
CommandResult run_verify(const RunConfig& config);
CommandResult run_ball(const RunConfig& config);
CommandResult run_sweep(const RunConfig& config);

}  // namespace holoinv
