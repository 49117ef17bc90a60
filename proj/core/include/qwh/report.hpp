#ifndef QWH_REPORT_HPP
#define QWH_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qwh {

struct CheckRecord {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ConvergenceRow {
    int dim = 0;
    double deviation = 0.0;
};

struct ScanRow {
    long modes = 0;
    double overlap = 0.0;
};

using ParamValue = std::variant<long, double, std::string>;

/// Machine-readable run report.  JSON is the canonical form; CSV is a flat
/// projection with one row per check / convergence / scan record.
struct Report {
    std::string command;
    std::map<std::string, ParamValue> params;
    std::vector<CheckRecord> checks;
    std::vector<ConvergenceRow> convergence;
    std::vector<ScanRow> scan;
    std::uint64_t seed = 0;
    std::string version;
    double timing_seconds = 0.0;

    bool overall_pass() const;

    std::string to_json() const;
    std::string to_csv() const;
};

/// Writes content to path atomically (write-temp-then-rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qwh

#endif
