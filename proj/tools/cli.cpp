#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "rhzeta/design.hpp"
#include "rhzeta/errors.hpp"
#include "rhzeta/evolution.hpp"
#include "rhzeta/io.hpp"
#include "rhzeta/spectral.hpp"
#include "rhzeta/synthesis.hpp"
#include "rhzeta/verification.hpp"
#include "rhzeta/zeta.hpp"

namespace rhz::cli {

namespace {

using io::format_real;

struct RunConfig {
    SimulationParams params;
    TimeGrid grid;
    std::string method = "spectral";
    std::optional<double> step;
    std::optional<std::string> out_path;
    std::optional<std::string> format;
    std::optional<std::string> in_path;
    std::optional<double> tol_lambda;
    std::optional<double> tol_overlap;

    std::vector<double> sigmas;
    std::optional<double> sigma_min;
    std::optional<double> sigma_max;
    std::size_t sigma_points = 40;
    std::size_t n_cap = kDefaultLevelCap;

    FabricationConstants fab;
    double wavelength = 2.0 * std::numbers::pi * 1e-4;
    std::string target = "waveguide";
};

// Flag values are parsed with std::from_chars so the C++ locale never matters.
double parse_flag(const std::string& flag, const std::string& text) {
    try {
        return io::parse_real(text);
    } catch (const InvalidParameter&) {
        throw InvalidParameter(flag + ": expected a number, got '" + text + "'");
    }
}

template <typename Target>
CLI::Option* add_real(CLI::App* app, const std::string& flag, Target& target, const std::string& desc) {
    return app->add_option_function<std::string>(
        flag, [&target, flag](const std::string& s) { target = parse_flag(flag, s); }, desc);
}

void add_params(CLI::App* app, RunConfig& cfg) {
    app->add_option("--n", cfg.params.n_levels, "Number of levels N (>= 1)");
    add_real(app, "--a", cfg.params.a, "Hurwitz shift a in (0, 1]");
    add_real(app, "--sigma", cfg.params.sigma, "Real part sigma > 1");
    add_real(app, "--omega", cfg.params.omega, "Frequency scale omega > 0");
    app->add_option("--out", cfg.out_path, "Output file (default: standard output)");
    app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_grid(CLI::App* app, RunConfig& cfg) {
    add_real(app, "--t-start", cfg.grid.t_start, "First sample time");
    add_real(app, "--t-end", cfg.grid.t_end, "Last sample time");
    app->add_option("--points", cfg.grid.n_points, "Number of samples (>= 2)");
    add_real(app, "--t-coh", cfg.grid.t_coh, "Coherence time; later samples are dropped");
    app->add_option("--method", cfg.method, "Evolution method")->check(CLI::IsMember({"spectral", "ode"}));
    add_real(app, "--step", cfg.step, "RK4 step for --method ode (default 1e-3)");
}

void add_tolerances(CLI::App* app, RunConfig& cfg) {
    add_real(app, "--tol-lambda", cfg.tol_lambda, "Eigenvalue tolerance (default 1e-9 * N)");
    add_real(app, "--tol-overlap", cfg.tol_overlap, "Overlap tolerance (default 1e-9)");
}

void add_input(CLI::App* app, RunConfig& cfg) {
    app->add_option("--in", cfg.in_path, "Tridiagonal CSV (index,B,J_next) instead of synthesizing");
}

std::string require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed, const char* fallback) {
    const std::string f = cfg.format.value_or(fallback);
    for (const char* a : allowed) {
        if (f == a) return f;
    }
    throw InvalidParameter("conflicting flags: --format " + f + " is not available for this subcommand");
}

class Sink {
public:
    Sink(const std::optional<std::string>& path, std::ostream& fallback) : fallback_(fallback) {
        if (path) {
            file_.open(*path, std::ios::binary | std::ios::trunc);
            if (!file_) throw InvalidParameter("cannot open output file '" + *path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

SymmetricTridiagonal load_or_synthesize(const RunConfig& cfg) {
    if (!cfg.in_path) return synthesize(cfg.params);
    std::ifstream in(*cfg.in_path);
    if (!in) throw InvalidParameter("cannot open input file '" + *cfg.in_path + "'");
    return io::read_tridiagonal_csv(in);
}

SynthesisReport report_for(const SymmetricTridiagonal& tri, const RunConfig& cfg) {
    const double n = static_cast<double>(cfg.params.n_levels);
    return verify_synthesis(tri, cfg.params, cfg.tol_lambda.value_or(1e-9 * n), cfg.tol_overlap.value_or(1e-9));
}

void print_report(std::ostream& os, const SynthesisReport& rep, const char* prefix) {
    os << prefix << "max_eigenvalue_error=" << format_real(rep.max_eigenvalue_error)
       << " tol=" << format_real(rep.tol_lambda) << (rep.eigenvalues_passed ? " pass" : " FAIL") << '\n';
    os << prefix << "max_overlap_error=" << format_real(rep.max_overlap_error)
       << " tol=" << format_real(rep.tol_overlap) << (rep.overlaps_passed ? " pass" : " FAIL") << '\n';
}

int cmd_synth(const RunConfig& cfg, std::ostream& out) {
    const std::string format = require_format(cfg, {"csv", "json"}, "csv");
    cfg.params.validate();
    const SymmetricTridiagonal tri = synthesize(cfg.params);
    const SynthesisReport rep = report_for(tri, cfg);

    Sink sink(cfg.out_path, out);
    if (format == "json") {
        io::write_tridiagonal_json(sink.stream(), tri);
    } else {
        io::write_tridiagonal_csv(sink.stream(), tri);
    }
    print_report(out, rep, "# ");
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.params.validate();
    const SymmetricTridiagonal tri = load_or_synthesize(cfg);
    const SynthesisReport rep = report_for(tri, cfg);
    print_report(out, rep, "");
    if (!rep.passed()) {
        nlohmann::json line{{"error", "VerificationFailed"},
                            {"exit_code", static_cast<int>(kVerificationFailed)},
                            {"message", "synthesized Hamiltonian misses the requested tolerances"}};
        err << line.dump() << '\n';
        return kVerificationFailed;
    }
    return kOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv"}, "csv");
    if (cfg.step && cfg.method != "ode") throw InvalidParameter("conflicting flags: --step requires --method ode");
    cfg.params.validate();
    cfg.grid.validate();

    const auto& p = cfg.params;
    const Complex zeta_at_sigma = hurwitz_zeta(Complex(p.sigma, 0.0), p.a);
    const SymmetricTridiagonal tri = synthesize(p);
    const AutocorrelationSeries series = cfg.method == "ode"
                                             ? evolve_ode(tri, cfg.grid, cfg.step.value_or(kDefaultOdeStep), p.omega).autocorrelation
                                             : evolve_spectral(tri, cfg.grid, p.omega);
    const std::vector<ZetaSample> estimate = zeta_estimate(series, p, true);

    Sink sink(cfg.out_path, out);
    auto& os = sink.stream();
    os << "t,re_a,im_a,abs_a,re_zeta_norm_ref,im_zeta_norm_ref,abs_deviation\n";
    for (std::size_t i = 0; i < estimate.size(); ++i) {
        const Complex a = estimate[i].value;
        const Complex ref = hurwitz_zeta(estimate[i].s, p.a) / zeta_at_sigma;
        os << format_real(series.times[i]) << ',' << format_real(a.real()) << ',' << format_real(a.imag()) << ','
           << format_real(std::abs(a)) << ',' << format_real(ref.real()) << ',' << format_real(ref.imag()) << ','
           << format_real(std::abs(a - ref)) << '\n';
    }
    return kOk;
}

std::vector<double> sigma_grid(const RunConfig& cfg) {
    if (!cfg.sigmas.empty()) {
        if (cfg.sigma_min || cfg.sigma_max) {
            throw InvalidParameter("conflicting flags: --sigmas cannot be combined with --sigma-min/--sigma-max");
        }
        return cfg.sigmas;
    }
    const double lo = cfg.sigma_min.value_or(1.05);
    const double hi = cfg.sigma_max.value_or(3.0);
    if (!(lo < hi) || cfg.sigma_points < 2) {
        throw InvalidParameter("sigma grid needs --sigma-min < --sigma-max and --sigma-points >= 2");
    }
    std::vector<double> g(cfg.sigma_points);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = (i + 1 == g.size()) ? hi : lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(g.size() - 1));
    }
    return g;
}

int cmd_domain(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv"}, "csv");
    const std::vector<double> grid = sigma_grid(cfg);
    for (double s : grid) {
        if (!(s > 1.0)) throw InvalidParameter("sigma grid values must exceed 1 (got " + format_real(s) + ")");
    }
    const std::vector<DomainPoint> rows = accessible_domain(grid, cfg.grid.t_coh, cfg.n_cap);

    Sink sink(cfg.out_path, out);
    auto& os = sink.stream();
    os << "sigma,n_min,n_required,t_max,feasible\n";
    for (const auto& r : rows) {
        os << format_real(r.sigma) << ',' << format_real(r.n_min) << ',' << r.n_required << ','
           << format_real(r.t_max) << ',' << (r.feasible ? 1 : 0) << '\n';
    }
    return kOk;
}

int cmd_design(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.in_path) cfg.params.validate();
    const SymmetricTridiagonal tri = load_or_synthesize(cfg);

    if (cfg.target == "spin") {
        require_format(cfg, {"csv"}, "csv");
        Sink sink(cfg.out_path, out);
        io::write_spin_chain_csv(sink.stream(), spin_chain_params(tri));
        return kOk;
    }

    require_format(cfg, {"json"}, "json");
    FabricationConstants fab = cfg.fab;
    if (!(cfg.wavelength > 0.0)) throw InvalidParameter("--lambda must be positive");
    fab.lambda_bar = cfg.wavelength / (2.0 * std::numbers::pi);
    const WaveguideDesign design = waveguide_layout(tri, fab);
    Sink sink(cfg.out_path, out);
    io::write_waveguide_json(sink.stream(), design);
    return kOk;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const InfeasibleDesign*>(&e)) return kInfeasibleDesign;
    if (dynamic_cast<const OutOfDomain*>(&e)) return kOracleDomain;
    if (dynamic_cast<const NumericalError*>(&e)) return kNumericalBreakdown;
    return kInvalidInput;
}

int diagnose(std::ostream& err, const std::string& kind, int code, std::string message) {
    std::replace(message.begin(), message.end(), '\n', ' ');
    nlohmann::json line{{"error", kind}, {"exit_code", code}, {"message", message}};
    err << line.dump() << '\n';
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Tridiagonal Hamiltonians whose autocorrelation traces the Hurwitz zeta function", "rhzeta"};
    app.require_subcommand(1);

    auto* synth = app.add_subcommand("synth", "Synthesize the tridiagonal Hamiltonian (B, J)");
    add_params(synth, cfg);
    add_tolerances(synth, cfg);

    auto* verify = app.add_subcommand("verify", "Check spectrum and site-0 overlaps of a Hamiltonian");
    add_params(verify, cfg);
    add_tolerances(verify, cfg);
    add_input(verify, cfg);

    auto* simulate = app.add_subcommand("simulate", "Autocorrelation vs. normalized Hurwitz zeta along sigma + i omega t");
    add_params(simulate, cfg);
    add_grid(simulate, cfg);

    auto* domain = app.add_subcommand("domain", "N_min(sigma) and coherence window table");
    domain->add_option_function<std::string>(
        "--sigmas",
        [&cfg](const std::string& list) {
            std::stringstream ss(list);
            std::string item;
            while (std::getline(ss, item, ',')) cfg.sigmas.push_back(parse_flag("--sigmas", item));
        },
        "Comma-separated sigma values");
    add_real(domain, "--sigma-min", cfg.sigma_min, "Grid start (default 1.05)");
    add_real(domain, "--sigma-max", cfg.sigma_max, "Grid end (default 3)");
    domain->add_option("--sigma-points", cfg.sigma_points, "Grid size (default 40)");
    domain->add_option("--n-cap", cfg.n_cap, "Largest realizable N; larger N_min is flagged infeasible");
    add_real(domain, "--t-coh", cfg.grid.t_coh, "Coherence time (default unbounded)");
    domain->add_option("--out", cfg.out_path, "Output file (default: standard output)");
    domain->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* design = app.add_subcommand("design", "Export spin-chain or waveguide-array parameters");
    add_params(design, cfg);
    add_input(design, cfg);
    design->add_option("--target", cfg.target, "Hardware target")->check(CLI::IsMember({"waveguide", "spin"}));
    add_real(design, "--kappa", cfg.fab.kappa, "Coupling prefactor in J = kappa exp(-alpha d)");
    add_real(design, "--alpha", cfg.fab.alpha, "Coupling decay constant");
    add_real(design, "--radius", cfg.fab.radius, "Bend radius R");
    add_real(design, "--lambda", cfg.wavelength, "Optical wavelength (lambda_bar = lambda / 2 pi)");
    add_real(design, "--ns", cfg.fab.n_s, "Substrate refractive index");
    add_real(design, "--e0", cfg.fab.e0, "Straight-guide propagation constant (recorded only)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return diagnose(err, "UsageError", kInvalidInput, e.what());
    } catch (const Error& e) {
        return diagnose(err, e.kind(), exit_code_for(e), e.what());
    }

    try {
        if (synth->parsed()) return cmd_synth(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (simulate->parsed()) return cmd_simulate(cfg, out);
        if (domain->parsed()) return cmd_domain(cfg, out);
        if (design->parsed()) return cmd_design(cfg, out);
    } catch (const Error& e) {
        return diagnose(err, e.kind(), exit_code_for(e), e.what());
    } catch (const std::exception& e) {
        return diagnose(err, "InternalError", kNumericalBreakdown, e.what());
    }
    return diagnose(err, "UsageError", kInvalidInput, "no subcommand given");
}

}  // namespace rhz::cli
