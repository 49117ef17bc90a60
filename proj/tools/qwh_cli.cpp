#include <CLI11.hpp>

#include "qwh/runner.hpp"
#include "qwh/version.hpp"

#include <complex>
#include <cstdio>
#include <string>
#include <vector>

namespace {

using qwh::runner::Command;
using qwh::runner::OutputFormat;
using qwh::runner::RunConfig;

// Shared option block: every subcommand takes the same grammar.
struct Options {
    int dim = 64;
    double epsilon = 0.0;
    std::string q_pair;  // "RE,IM"
    double rho = 0.0;
    int cutoff = 16;
    std::vector<long> modes;
    double tol = 0.0;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 12345;

    bool has_epsilon = false, has_q = false, has_rho = false, has_tol = false;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--dim", o.dim, "Truncated Fock dimension");
    auto* e = sub->add_option("--epsilon", o.epsilon,
                              "Deformation parameter epsilon (real)");
    auto* q = sub->add_option("--q", o.q_pair,
                              "Deformation parameter q as RE,IM");
    auto* r = sub->add_option("--rho", o.rho,
                              "Bogoliubov scaling parameter rho");
    e->excludes(q)->excludes(r);
    q->excludes(r);
    sub->add_option("--cutoff", o.cutoff, "Polynomial cutoff degree D");
    sub->add_option("--modes", o.modes, "Mode counts M1,M2,...")
        ->delimiter(',');
    auto* t = sub->add_option("--tol", o.tol, "Check tolerance");
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Report path (stdout when omitted)");
    sub->add_option("--seed", o.seed, "Seed for randomized batteries");

    sub->callback([&o, e, q, r, t] {
        o.has_epsilon = e->count() > 0;
        o.has_q = q->count() > 0;
        o.has_rho = r->count() > 0;
        o.has_tol = t->count() > 0;
    });
}

RunConfig to_config(Command cmd, const Options& o) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.dim = o.dim;
    cfg.cutoff_degree = o.cutoff;
    if (o.has_epsilon) cfg.epsilon = std::complex<double>(o.epsilon, 0.0);
    if (o.has_q) {
        double re = 0.0, im = 0.0;
        if (std::sscanf(o.q_pair.c_str(), "%lf,%lf", &re, &im) != 2)
            throw qwh::runner::UsageError("--q expects RE,IM");
        cfg.q = std::complex<double>(re, im);
    }
    if (o.has_rho) cfg.rho = o.rho;
    if (!o.modes.empty()) cfg.mode_counts = o.modes;
    if (o.has_tol) cfg.tolerance = o.tol;
    cfg.format = o.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    cfg.output_path = o.out;
    cfg.seed = o.seed;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed Weyl-Heisenberg algebra verification suite"};
    app.set_version_flag("--version", qwh::kVersion);
    app.require_subcommand(1);

    Options opt;
    std::pair<const char*, Command> cmds[] = {
        {"verify-qwh", Command::verify_qwh},
        {"verify-weyl", Command::verify_weyl},
        {"bogoliubov", Command::bogoliubov},
        {"foliation-scan", Command::foliation_scan},
    };
    for (auto& [name, cmd] : cmds) add_common(app.add_subcommand(name), opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    Command cmd = Command::verify_qwh;
    for (auto& [name, c] : cmds)
        if (app.get_subcommand(name)->parsed()) cmd = c;

    try {
        RunConfig cfg = to_config(cmd, opt);
        qwh::Report rep = qwh::runner::run(cfg);
        qwh::runner::emit(rep, cfg);
        return rep.overall_pass() ? 0 : 2;
    } catch (const qwh::runner::UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const qwh::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
