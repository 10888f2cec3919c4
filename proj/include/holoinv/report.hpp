#pragma once

#include <span>
#include <string>
#include <vector>

#include "holoinv/invariants.hpp"

namespace holoinv {

/// %.17g — shortest text that survives a strtod round trip.
std::string format_double(double v);

/// "a+bi" / "a-bi" with 17 significant digits; pure reals drop the
/// imaginary part. Never contains a comma, so it can sit in a CSV cell.
std::string format_complex(const Complex& z);

/// Aggregate outcome of one verification suite.
struct SuiteResult {
    std::string suite;
    int cases_run = 0;
    int cases_passed = 0;
    double max_error = 0.0;
    double wall_time_s = 0.0;  // informational; never serialized to files

    bool passed() const noexcept { return cases_run > 0 && cases_passed == cases_run; }
};

/// One verified case: what was computed, against what, how far off.
struct CaseRow {
    std::string suite;
    std::string formula;
    std::string input;  // semicolon-separated parameter list
    double expected = 0.0;
    double observed = 0.0;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

std::string rows_to_csv(std::span<const CaseRow> rows);
std::string rows_to_json(std::span<const CaseRow> rows, std::span<const SuiteResult> summaries);

std::string report_to_csv(const InvariantReport& report);
std::string report_to_json(const InvariantReport& report);

/// Binary write (LF endings preserved verbatim). Throws
/// std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace holoinv
