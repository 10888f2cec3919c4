#include "holoinv/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace holoinv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(const Complex& z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string out = format_double(z.real());
    out += z.imag() > 0.0 ? '+' : '-';
    out += format_double(std::fabs(z.imag()));
    out += 'i';
    return out;
}

static const char* kRowHeader = "suite,formula,input,expected,observed,error,tolerance,pass\n";

std::string rows_to_csv(std::span<const CaseRow> rows) {
    std::string out = kRowHeader;
    for (const CaseRow& r : rows) {
        out += r.suite;
        out += ',';
        out += r.formula;
        out += ',';
        out += r.input;
        out += ',';
        out += format_double(r.expected);
        out += ',';
        out += format_double(r.observed);
        out += ',';
        out += format_double(r.error);
        out += ',';
        out += format_double(r.tolerance);
        out += ',';
        out += r.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string rows_to_json(std::span<const CaseRow> rows, std::span<const SuiteResult> summaries) {
    nlohmann::ordered_json doc;
    doc["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& s : summaries) {
        // wall_time_s stays out of files: outputs must be byte-stable
        // across runs.
        doc["suites"].push_back({{"suite", s.suite},
                                 {"cases_run", s.cases_run},
                                 {"cases_passed", s.cases_passed},
                                 {"max_error", s.max_error},
                                 {"passed", s.passed()}});
    }
    doc["cases"] = nlohmann::ordered_json::array();
    for (const CaseRow& r : rows) {
        doc["cases"].push_back({{"suite", r.suite},
                                {"formula", r.formula},
                                {"input", r.input},
                                {"expected", r.expected},
                                {"observed", r.observed},
                                {"error", r.error},
                                {"tolerance", r.tolerance},
                                {"pass", r.pass}});
    }
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const InvariantReport& report) {
    std::string out = "kind,name,value\n";
    out += "query,," + format_complex(report.query) + '\n';
    out += "tolerance,," + format_double(report.tolerance) + '\n';
    for (const auto& [name, value] : report.values)
        out += "value," + name + ',' + format_double(value) + '\n';
    for (const auto& [name, ok] : report.checks)
        out += "check," + name + ',' + (ok ? std::string("true") : std::string("false")) + '\n';
    out += std::string("pass,,") + (report.pass ? "true" : "false") + '\n';
    return out;
}

std::string report_to_json(const InvariantReport& report) {
    nlohmann::ordered_json doc;
    doc["query"] = {{"re", report.query.real()}, {"im", report.query.imag()}};
    doc["tolerance"] = report.tolerance;
    doc["values"] = nlohmann::ordered_json::array();
    for (const auto& [name, value] : report.values)
        doc["values"].push_back({{"formula", name}, {"value", value}});
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& [name, ok] : report.checks)
        doc["checks"].push_back({{"name", name}, {"pass", ok}});
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace holoinv
