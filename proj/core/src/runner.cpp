#include "qwh/runner.hpp"

#include "qwh/bargmann.hpp"
#include "qwh/fock.hpp"
#include "qwh/foliation.hpp"
#include "qwh/version.hpp"
#include "qwh/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>

namespace qwh::runner {

namespace {

using bargmann::BargmannPoly;

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

BargmannPoly random_poly(int cutoff, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> deg(1, cutoff);
    const int d = deg(rng);
    BargmannPoly p;
    p.coeffs.assign(cutoff + 1, Complex(0.0));
    for (int k = 0; k <= d; ++k) {
        // Uniform in the unit disc.
        double r = std::sqrt(unit(rng));
        double th = 2.0 * M_PI * unit(rng);
        p.coeffs[k] = std::polar(r, th);
    }
    return p;
}

Complex random_q(std::mt19937_64& rng) {
    // |q - 1| log-uniform in [1e-3, 0.1]: close enough to 1 that q^k stays
    // O(1) over the degree-32 battery, far enough that the direct q-integer
    // formula is used.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double r = std::pow(10.0, -3.0 + 2.0 * unit(rng));
    double th = 2.0 * M_PI * unit(rng);
    return 1.0 + std::polar(r, th);
}

Complex random_unit_disc(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return std::polar(std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng));
}

void echo_deformation(Report& rep, const Deformation& d) {
    rep.params["epsilon_re"] = d.epsilon.real();
    rep.params["epsilon_im"] = d.epsilon.imag();
    rep.params["q_re"] = d.q.real();
    rep.params["q_im"] = d.q.imag();
    rep.params["rho_re"] = d.rho.real();
    rep.params["rho_im"] = d.rho.imag();
}

Report make_report(const RunConfig& cfg) {
    Report rep;
    rep.command = command_name(cfg.command);
    rep.seed = cfg.seed;
    rep.version = kVersion;
    rep.params["dim"] = long(cfg.dim);
    rep.params["cutoff"] = long(cfg.cutoff_degree);
    return rep;
}

double real_epsilon(const RunConfig& cfg) {
    Deformation d = cfg.deformation();
    if (!d.is_real())
        throw UsageError("this command requires a real epsilon");
    return d.epsilon.real();
}

std::vector<int> convergence_dims(int cap, std::initializer_list<int> ladder) {
    std::vector<int> dims;
    for (int n : ladder)
        if (n <= cap) dims.push_back(n);
    if (dims.empty()) dims.push_back(cap);
    return dims;
}

}  // namespace

const char* command_name(Command c) {
    switch (c) {
        case Command::verify_qwh: return "verify-qwh";
        case Command::verify_weyl: return "verify-weyl";
        case Command::bogoliubov: return "bogoliubov";
        case Command::foliation_scan: return "foliation-scan";
    }
    return "unknown";
}

Deformation RunConfig::deformation() const {
    int given = int(epsilon.has_value()) + int(q.has_value()) +
                int(rho.has_value());
    if (given > 1)
        throw UsageError("give at most one of --epsilon, --q, --rho");
    if (epsilon) return Deformation::from_epsilon(*epsilon);
    if (q) {
        try {
            return Deformation::from_q(*q);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    if (rho) {
        try {
            return Deformation::from_rho(*rho);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    return Deformation::from_epsilon(0.3);
}

void validate(const RunConfig& cfg) {
    if (cfg.dim < 2) throw UsageError("--dim must be >= 2");
    if (cfg.cutoff_degree < 1) throw UsageError("--cutoff must be >= 1");
    if (cfg.tolerance && *cfg.tolerance <= 0.0)
        throw UsageError("--tol must be > 0");
    cfg.deformation();  // checks exclusivity and rho != 0
    if (cfg.command == Command::foliation_scan && cfg.mode_counts.empty())
        throw UsageError("--modes must be nonempty");
    for (long m : cfg.mode_counts)
        if (m < 1) throw UsageError("mode counts must be >= 1");
}

double qwh_battery_deviation(int cutoff, int n_polys, int n_qs,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BargmannPoly> polys;
    polys.reserve(n_polys);
    for (int i = 0; i < n_polys; ++i) polys.push_back(random_poly(cutoff, rng));
    std::vector<Deformation> defs;
    defs.reserve(n_qs);
    for (int i = 0; i < n_qs; ++i)
        defs.push_back(Deformation::from_q(random_q(rng)));

    double worst = 0.0;
    for (const auto& d : defs)
        for (const auto& p : polys) {
            BargmannPoly qc = bargmann::q_commutator(p, d);
            BargmannPoly di = bargmann::dilation(p, d);
            double dev = 0.0;
            for (int k = 0; k <= cutoff; ++k)
                dev = std::max(dev, std::abs(qc.coeffs[k] - di.coeffs[k]));
            worst = std::max(worst, dev / p.inf_norm());
        }
    return worst;
}

Report run_verify_qwh(const RunConfig& cfg) {
    validate(cfg);
    Timer timer;
    Deformation d = cfg.deformation();
    if (d.is_degenerate() || std::abs(d.q - 1.0) < 1e-12)
        throw UsageError("verify-qwh requires q != 1 (epsilon != 0)");
    Report rep = make_report(cfg);
    echo_deformation(rep, d);

    const int D = cfg.cutoff_degree;

    {
        double dev = qwh_battery_deviation(D, 1000, 100, cfg.seed);
        double tol = cfg.tol_or(1e-12);
        rep.checks.push_back({"q_commutator_dilation_battery", dev, tol,
                              dev <= tol});
    }

    // Classical limit: the q-derivative approaches d/dzeta linearly in
    // h = q - 1; the bound is the second-order term of [k]_q.
    {
        std::mt19937_64 rng(cfg.seed + 1);
        BargmannPoly p = random_poly(D, rng);
        BargmannPoly cl = bargmann::apply_annihilation(p);
        for (double h : {1e-2, 1e-4, 1e-6}) {
            BargmannPoly qd =
                bargmann::q_derivative(p, Deformation::from_q(1.0 + h));
            double dev = 0.0;
            for (int k = 0; k <= D; ++k)
                dev = std::max(dev, std::abs(qd.coeffs[k] - cl.coeffs[k]));
            double bound = double(D) * double(D) * h * p.inf_norm();
            char name[64];
            std::snprintf(name, sizeof(name), "classical_limit_h=%g", h);
            rep.checks.push_back({name, dev, bound, dev <= bound});
        }
    }

    {
        auto id = bargmann::number_exponential_identity_check(
            std::max(D, 2), d, cfg.tol_or(1e-10));
        rep.checks.push_back({"number_exponential_identity", id.deviation,
                              id.tolerance, id.pass});
    }

    rep.timing_seconds = timer.seconds();
    return rep;
}

Report run_verify_weyl(const RunConfig& cfg) {
    validate(cfg);
    Timer timer;
    Deformation d = cfg.deformation();
    Report rep = make_report(cfg);
    echo_deformation(rep, d);

    const double tol = cfg.tol_or(1e-6);

    // Seeded grid of displacement labels inside the unit disc.
    std::mt19937_64 rng(cfg.seed);
    std::vector<Complex> z1s, z2s;
    for (int i = 0; i < 5; ++i) z1s.push_back(random_unit_disc(rng));
    for (int i = 0; i < 5; ++i) z2s.push_back(random_unit_disc(rng));

    auto grid_deviation = [&](int n) {
        double worst = 0.0;
        for (Complex z1 : z1s)
            for (Complex z2 : z2s)
                worst = std::max(
                    worst, weyl::composition_check(n, z1, z2, tol).deviation);
        return worst;
    };

    std::vector<int> dims = convergence_dims(cfg.dim, {32, 64, 128, 256});
    for (int n : dims) rep.convergence.push_back({n, grid_deviation(n)});

    const int n = dims.back();
    rep.checks.push_back({"composition_grid", rep.convergence.back().deviation,
                          tol, rep.convergence.back().deviation <= tol});

    {
        // Eq (5) relations at the largest dimension.
        const double a = 0.7, ap = -0.4, b = 0.55;
        double devU = block_deviation(
            Matrix(weyl::weyl_U(n, a).mat * weyl::weyl_U(n, ap).mat),
            weyl::weyl_U(n, a + ap).mat, n / 2);
        double devV = block_deviation(
            Matrix(weyl::weyl_V(n, a).mat * weyl::weyl_V(n, ap).mat),
            weyl::weyl_V(n, a + ap).mat, n / 2);
        Complex phase = std::exp(Complex(0.0, a * b));
        double devC = block_deviation(
            Matrix(weyl::weyl_U(n, a).mat * weyl::weyl_V(n, b).mat),
            Matrix(phase * weyl::weyl_V(n, b).mat * weyl::weyl_U(n, a).mat),
            n / 2);
        rep.checks.push_back({"U_additivity", devU, tol, devU <= tol});
        rep.checks.push_back({"V_additivity", devV, tol, devV <= tol});
        rep.checks.push_back({"UV_commutation_phase", devC, tol, devC <= tol});
    }

    {
        std::vector<double> rhos =
            cfg.rho ? std::vector<double>{*cfg.rho}
                    : std::vector<double>{0.5, 2.0};
        for (double rho : rhos) {
            double worst = 0.0;
            for (Complex z1 : z1s)
                for (Complex z2 : z2s)
                    worst = std::max(worst,
                                     weyl::scaled_composition_check(
                                         n, z1, z2, rho, tol)
                                         .deviation);
            char name[64];
            std::snprintf(name, sizeof(name), "scaled_family_rho=%g", rho);
            rep.checks.push_back({name, worst, tol, worst <= tol});
        }
    }

    {
        std::mt19937_64 rng2(cfg.seed + 2);
        std::uniform_real_distribution<double> lab(-2.0, 2.0);
        std::uniform_real_distribution<double> logr(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            Complex z1(lab(rng2), lab(rng2)), z2(lab(rng2), lab(rng2));
            double rho = std::pow(10.0, logr(rng2));
            worst = std::max(
                worst,
                weyl::symplectic_invariance_check(z1, z2, rho).deviation);
        }
        rep.checks.push_back(
            {"symplectic_invariance", worst, 1e-14, worst <= 1e-14});
    }

    rep.timing_seconds = timer.seconds();
    return rep;
}

Report run_bogoliubov(const RunConfig& cfg) {
    validate(cfg);
    Timer timer;
    const double eps = real_epsilon(cfg);
    Report rep = make_report(cfg);
    rep.params["epsilon_re"] = eps;
    rep.params["epsilon_im"] = 0.0;

    const double tol = cfg.tol_or(1e-8);

    std::vector<int> dims = convergence_dims(cfg.dim, {16, 32, 64, 128, 256});
    const int block = std::max(1, dims.front() / 4);
    for (int n : dims) {
        auto r = fock::generator_equivalence_check(n, eps, block, tol);
        rep.convergence.push_back({n, r.deviation});
    }

    {
        auto r = fock::generator_equivalence_check(cfg.dim, eps,
                                                   std::max(1, cfg.dim / 4),
                                                   tol);
        rep.checks.push_back(
            {"generator_equivalence", r.deviation, r.tolerance, r.pass});
    }

    {
        // u^2 - v^2 = 1 across a 61-point log grid of rho.
        double worst = 0.0;
        for (int i = 0; i <= 60; ++i) {
            double rho = std::pow(10.0, -3.0 + 0.1 * i);
            auto bc = fock::BogoliubovCoefficients::from_rho(rho);
            long double res = bc.u * bc.u - bc.v * bc.v - 1.0L;
            worst = std::max(worst, std::abs(static_cast<double>(res)));
        }
        double uv_tol = cfg.tol_or(1e-12);
        rep.checks.push_back(
            {"uv_symplectic_grid", worst, uv_tol, worst <= uv_tol});
    }

    {
        auto bc = fock::BogoliubovCoefficients::from_rho(1.0);
        double dev = std::max(std::abs(static_cast<double>(bc.u) - 1.0),
                              std::abs(static_cast<double>(bc.v)));
        rep.checks.push_back({"uv_identity_at_rho_1", dev, 0.0, dev == 0.0});
    }

    rep.timing_seconds = timer.seconds();
    return rep;
}

Report run_foliation_scan(const RunConfig& cfg) {
    validate(cfg);
    Timer timer;
    const double eps = real_epsilon(cfg);
    Report rep = make_report(cfg);
    rep.params["epsilon_re"] = eps;
    rep.params["epsilon_im"] = 0.0;

    const int n = std::max(16, cfg.dim);
    auto scan = foliation::foliation_scan(eps, cfg.mode_counts, n);
    for (std::size_t i = 0; i < scan.mode_counts.size(); ++i)
        rep.scan.push_back({scan.mode_counts[i], scan.products[i]});

    // Per-mode convergence evidence: the overlap at n vs 2n.
    double v1 = scan.per_mode_overlap;
    double v2 = foliation::per_mode_vacuum_overlap(eps, 2 * n);
    rep.convergence.push_back({n, 0.0});
    rep.convergence.push_back({2 * n, std::abs(v2 - v1)});
    double conv_tol = cfg.tol_or(1e-6);
    rep.checks.push_back({"per_mode_convergence", std::abs(v2 - v1), conv_tol,
                          std::abs(v2 - v1) <= conv_tol});

    {
        // Factorization: products[j] against an independently accumulated
        // repeated product.
        double worst = 0.0;
        for (std::size_t i = 0; i < scan.mode_counts.size(); ++i) {
            long double acc = 1.0L;
            for (long m = 0; m < scan.mode_counts[i]; ++m)
                acc *= static_cast<long double>(v1);
            double ref = static_cast<double>(acc);
            double rel = std::abs(scan.products[i] - ref) /
                         std::max(std::abs(ref), 1e-300);
            worst = std::max(worst, rel);
        }
        rep.checks.push_back(
            {"factorization", worst, 1e-12, worst <= 1e-12});
    }

    rep.params["per_mode_overlap"] = v1;
    rep.timing_seconds = timer.seconds();
    return rep;
}

Report run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::verify_qwh: return run_verify_qwh(cfg);
        case Command::verify_weyl: return run_verify_weyl(cfg);
        case Command::bogoliubov: return run_bogoliubov(cfg);
        case Command::foliation_scan: return run_foliation_scan(cfg);
    }
    throw UsageError("unknown command");
}

void emit(const Report& report, const RunConfig& cfg) {
    std::string body = cfg.format == OutputFormat::json ? report.to_json()
                                                        : report.to_csv();
    if (cfg.output_path.empty())
        std::cout << body;
    else
        write_file_atomic(cfg.output_path, body);
}

}  // namespace qwh::runner
