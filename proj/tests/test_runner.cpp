#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwh/runner.hpp"

#include <regex>
#include <string>

using namespace qwh;
using namespace qwh::runner;

namespace {

std::string strip_timing(std::string json) {
    return std::regex_replace(json,
                              std::regex("\"timing\": [0-9eE.+-]+"),
                              "\"timing\": 0");
}

RunConfig base(Command cmd) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.dim = 32;
    cfg.cutoff_degree = 8;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    auto cfg = base(Command::verify_qwh);
    cfg.dim = 1;
    CHECK_THROWS_AS(validate(cfg), UsageError);

    cfg = base(Command::verify_qwh);
    cfg.cutoff_degree = 0;
    CHECK_THROWS_AS(validate(cfg), UsageError);

    cfg = base(Command::verify_qwh);
    cfg.tolerance = -1.0;
    CHECK_THROWS_AS(validate(cfg), UsageError);

    cfg = base(Command::verify_qwh);
    cfg.epsilon = 0.3;
    cfg.rho = 2.0;
    CHECK_THROWS_AS(validate(cfg), UsageError);

    cfg = base(Command::verify_weyl);
    cfg.rho = 0.0;
    CHECK_THROWS_AS(validate(cfg), UsageError);

    cfg = base(Command::foliation_scan);
    cfg.mode_counts.clear();
    CHECK_THROWS_AS(validate(cfg), UsageError);
}

TEST_CASE("deformation derivation") {
    RunConfig cfg = base(Command::verify_qwh);
    cfg.q = std::complex<double>(2.0, 0.0);
    auto d = cfg.deformation();
    CHECK(d.rho == std::complex<double>(0.5, 0.0));
    CHECK(std::abs(d.epsilon.real() - std::log(2.0)) < 1e-15);

    cfg = base(Command::verify_qwh);
    cfg.rho = 0.5;
    d = cfg.deformation();
    CHECK(std::abs(d.q.real() - 2.0) < 1e-15);

    // Default parameter when none is given.
    cfg = base(Command::verify_qwh);
    CHECK(cfg.deformation().epsilon.real() == 0.3);
}

TEST_CASE("verify-qwh passes at defaults and rejects q = 1") {
    auto cfg = base(Command::verify_qwh);
    cfg.cutoff_degree = 16;
    auto rep = run_verify_qwh(cfg);
    CHECK(rep.overall_pass());
    CHECK(rep.command == "verify-qwh");

    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(run_verify_qwh(cfg), UsageError);

    cfg.epsilon.reset();
    cfg.q = std::complex<double>(1.0, 0.0);
    CHECK_THROWS_AS(run_verify_qwh(cfg), UsageError);
}

TEST_CASE("bogoliubov rejects complex epsilon") {
    auto cfg = base(Command::bogoliubov);
    cfg.epsilon = std::complex<double>(0.1, 0.2);
    CHECK_THROWS_AS(run_bogoliubov(cfg), UsageError);

    cfg.epsilon = std::complex<double>(0.3, 0.0);
    cfg.dim = 64;  // at dim 32 the block truncation error exceeds 1e-8
    auto rep = run_bogoliubov(cfg);
    CHECK(rep.overall_pass());
    CHECK(rep.convergence.size() >= 2);
}

TEST_CASE("foliation scan emits rows in input order") {
    auto cfg = base(Command::foliation_scan);
    cfg.epsilon = 0.5;
    cfg.dim = 32;
    cfg.mode_counts = {100, 1, 10};
    auto rep = run_foliation_scan(cfg);
    REQUIRE(rep.scan.size() == 3);
    CHECK(rep.scan[0].modes == 100);
    CHECK(rep.scan[1].modes == 1);
    CHECK(rep.scan[2].modes == 10);
    CHECK(rep.overall_pass());
}

TEST_CASE("reports are deterministic modulo timing") {
    auto cfg = base(Command::verify_qwh);
    cfg.seed = 99;
    auto a = strip_timing(run(cfg).to_json());
    auto b = strip_timing(run(cfg).to_json());
    CHECK(a == b);

    cfg.seed = 100;
    CHECK(strip_timing(run(cfg).to_json()) != a);
}

TEST_CASE("csv projection carries all record kinds") {
    auto cfg = base(Command::foliation_scan);
    cfg.epsilon = 0.5;
    cfg.dim = 32;
    auto rep = run(cfg);
    std::string csv = rep.to_csv();
    CHECK(csv.rfind("record,name,dim,modes,deviation,tolerance,pass,overlap",
                    0) == 0);
    CHECK(csv.find("\ncheck,") != std::string::npos);
    CHECK(csv.find("\nconvergence,") != std::string::npos);
    CHECK(csv.find("\nscan,") != std::string::npos);
}

TEST_CASE("verify-weyl passes at a small dimension") {
    auto cfg = base(Command::verify_weyl);
    cfg.dim = 128;
    auto rep = run_verify_weyl(cfg);
    CHECK(rep.overall_pass());
    // Convergence rows are nonincreasing over the dimension ladder.
    REQUIRE(rep.convergence.size() == 3);
    CHECK(rep.convergence[2].deviation <= rep.convergence[0].deviation);
}
