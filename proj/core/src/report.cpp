#include "qwh/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwh {

namespace {

// 17 significant digits: enough for doubles to round-trip exactly.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const ParamValue& v) {
    if (std::holds_alternative<long>(v))
        return std::to_string(std::get<long>(v));
    if (std::holds_alternative<double>(v)) return fmt(std::get<double>(v));
    return "\"" + std::get<std::string>(v) + "\"";
}

}  // namespace

bool Report::overall_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_json() const {
    std::ostringstream os;
    os << "{\n";
    os << "  \"command\": \"" << command << "\",\n";
    os << "  \"params\": {";
    bool first = true;
    for (const auto& [k, v] : params) {
        os << (first ? "" : ", ") << "\"" << k << "\": " << fmt(v);
        first = false;
    }
    os << "},\n";
    os << "  \"checks\": [";
    first = true;
    for (const auto& c : checks) {
        os << (first ? "\n" : ",\n");
        os << "    {\"name\": \"" << c.name << "\", \"deviation\": "
           << fmt(c.deviation) << ", \"tolerance\": " << fmt(c.tolerance)
           << ", \"pass\": " << (c.pass ? "true" : "false") << "}";
        first = false;
    }
    os << (first ? "]" : "\n  ]") << ",\n";
    os << "  \"convergence\": [";
    first = true;
    for (const auto& r : convergence) {
        os << (first ? "\n" : ",\n");
        os << "    {\"dim\": " << r.dim << ", \"deviation\": "
           << fmt(r.deviation) << "}";
        first = false;
    }
    os << (first ? "]" : "\n  ]") << ",\n";
    os << "  \"scan\": [";
    first = true;
    for (const auto& r : scan) {
        os << (first ? "\n" : ",\n");
        os << "    {\"M\": " << r.modes << ", \"overlap\": " << fmt(r.overlap)
           << "}";
        first = false;
    }
    os << (first ? "]" : "\n  ]") << ",\n";
    os << "  \"seed\": " << seed << ",\n";
    os << "  \"version\": \"" << version << "\",\n";
    os << "  \"timing\": " << fmt(timing_seconds) << "\n";
    os << "}\n";
    return os.str();
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "record,name,dim,modes,deviation,tolerance,pass,overlap\n";
    for (const auto& c : checks)
        os << "check," << c.name << ",,," << fmt(c.deviation) << ","
           << fmt(c.tolerance) << "," << (c.pass ? "true" : "false") << ",\n";
    for (const auto& r : convergence)
        os << "convergence,," << r.dim << ",," << fmt(r.deviation) << ",,,\n";
    for (const auto& r : scan)
        os << "scan,,," << r.modes << ",,,," << fmt(r.overlap) << "\n";
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

}  // namespace qwh
