#ifndef QWH_RUNNER_HPP
#define QWH_RUNNER_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwh/deformation.hpp"
#include "qwh/report.hpp"

namespace qwh::runner {

enum class Command {
    verify_qwh,
    verify_weyl,
    bogoliubov,
    foliation_scan,
};

enum class OutputFormat { json, csv };

const char* command_name(Command c);

/// Raised for invalid configurations; maps to exit status 1 at the CLI.
struct UsageError : Error {
    using Error::Error;
};

struct RunConfig {
    Command command = Command::verify_qwh;
    int dim = 64;
    // At most one of these may be set; the others are derived.
    std::optional<std::complex<double>> epsilon;
    std::optional<std::complex<double>> q;
    std::optional<double> rho;
    int cutoff_degree = 16;
    std::vector<long> mode_counts = {1, 10, 100};
    std::optional<double> tolerance;  ///< per-command default when unset
    OutputFormat format = OutputFormat::json;
    std::string output_path;  ///< empty means stdout
    std::uint64_t seed = 12345;

    /// Resolves the deformation bundle, applying the default epsilon = 0.3
    /// when none of epsilon/q/rho was given.  Throws UsageError on conflict.
    Deformation deformation() const;

    double tol_or(double fallback) const {
        return tolerance ? *tolerance : fallback;
    }
};

/// Validates the pieces shared by every command (dim, cutoff, tolerance,
/// parameter exclusivity).  Throws UsageError.
void validate(const RunConfig& cfg);

Report run_verify_qwh(const RunConfig& cfg);
Report run_verify_weyl(const RunConfig& cfg);
Report run_bogoliubov(const RunConfig& cfg);
Report run_foliation_scan(const RunConfig& cfg);

/// Dispatches on cfg.command.
Report run(const RunConfig& cfg);

/// Serializes per cfg.format and writes to cfg.output_path (atomically) or
/// to stdout when the path is empty.
void emit(const Report& report, const RunConfig& cfg);

/// Random battery behind acceptance of the q-commutator/dilation identity:
/// returns the max over the battery of
/// ||q_commutator(p) - dilation(p)||_inf / ||p||_inf.
double qwh_battery_deviation(int cutoff, int n_polys, int n_qs,
                             std::uint64_t seed);

}  // namespace qwh::runner

#endif
