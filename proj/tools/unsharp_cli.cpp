// Command-line front end: POVM validation, single-scenario reports,
// the angle and damping sweeps, and the randomized property suites.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unsharp/bounds.hpp"
#include "unsharp/entropy.hpp"
#include "unsharp/io.hpp"
#include "unsharp/suites.hpp"
#include "unsharp/sweep.hpp"

namespace {

using nlohmann::json;
using namespace unsharp;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_fixed4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::ConfigError:
        case ErrorCode::UnknownSuite:
            return kExitUsage;
        default:
            return kExitFailure;
    }
}

struct Options {
    bool json_errors = false;
};

int report_error(const Options& opts, const Error& e) {
    if (opts.json_errors) {
        json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
        if (e.index()) j["index"] = *e.index();
        if (e.magnitude()) j["magnitude"] = *e.magnitude();
        std::cout << j.dump() << "\n";
    } else {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
}

// Sweep output goes to a file when --out is given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorCode::ConfigError, "cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path) {
    const auto povm = io::load_povm(path);
    json effects = json::array();
    for (std::size_t i = 0; i < povm.size(); ++i) {
        effects.push_back({{"index", i}, {"eigenvalues", povm.spectrum(i).eigenvalues}});
    }
    json out{{"valid", true},
             {"dim", povm.dim()},
             {"outcomes", povm.size()},
             {"completeness_residual", povm.completeness_residual()},
             {"effects", std::move(effects)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_analyze(const std::string& povm_path, const std::string& state_path, const std::string& format) {
    const auto povm = io::load_povm(povm_path);
    const auto rho = io::load_state(state_path);
    const double entropy = shannon_entropy(outcome_probs(rho, povm));
    const double dev = device_uncertainty(rho, povm);
    const double q = entropy - dev;
    const double krishna = krishna_bound(povm);
    const double min_dev = min_device_uncertainty(povm);
    if (format == "csv") {
        std::cout << "H,D,Q,krishna,minD\n"
                  << fmt_num(entropy) << "," << fmt_num(dev) << "," << fmt_num(q) << "," << fmt_num(krishna) << ","
                  << fmt_num(min_dev) << "\n";
    } else {
        json out{{"H", entropy}, {"D", dev}, {"Q", q}, {"krishna", krishna}, {"minD", min_dev},
                 {"probabilities", outcome_probs(rho, povm).probs}};
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_bounds(const std::string& a_path, const std::string& b_path, const std::string& state_path) {
    const auto a = io::load_povm(a_path);
    const auto b = io::load_povm(b_path);
    std::optional<DensityMatrix> rho;
    if (!state_path.empty()) rho = io::load_state(state_path);
    const auto report = bound_report(a, b, rho ? &*rho : nullptr);
    const bool ok = report.consistent();
    json out{{"bounds", report.values}, {"metadata", report.metadata}, {"notes", report.notes}};
    if (rho) out["consistent"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? kExitOk : kExitFailure;
}

struct SweepOptions {
    double eta = 1.0;
    double zeta = 1.0;
    int steps = 0;
    std::optional<double> start;
    std::optional<double> stop;
    std::uint64_t seed = 0;
    std::string out;
};

void require_range(double value, double lo, double hi, const char* name) {
    if (!(value >= lo && value <= hi)) {
        std::ostringstream os;
        os << name << " = " << value << " lies outside [" << lo << ", " << hi << "]";
        throw Error(ErrorCode::ConfigError, os.str());
    }
}

void emit_summary(const Sink& sink, const SweepOptions& o, std::size_t rows, const json& crossovers) {
    if (!sink.to_file()) return;
    json summary{{"out", o.out}, {"rows", rows}, {"crossovers", crossovers}, {"seed", o.seed}};
    std::cout << summary.dump(2) << "\n";
}

int cmd_sweep_theta(const SweepOptions& o) {
    require_range(o.eta, 0.0, 1.0, "eta");
    require_range(o.zeta, 0.0, 1.0, "zeta");
    const double start = o.start.value_or(0.0);
    const double stop = o.stop.value_or(std::numbers::pi);
    require_range(start, 0.0, std::numbers::pi, "start");
    require_range(stop, 0.0, std::numbers::pi, "stop");
    if (!(start < stop)) throw Error(ErrorCode::ConfigError, "start must be below stop");
    const int steps = o.steps > 0 ? o.steps : 181;
    const auto grid = linear_grid(start, stop, steps);
    const auto rows = sweep_theta(o.eta, o.zeta, grid);

    struct Pair {
        const char* name;
        std::function<double(const ThetaRow&)> diff;
    };
    const std::vector<Pair> pairs{
        {"B2-B1", [](const ThetaRow& r) { return r.b2 - r.b1; }},
        {"D_WN-logC", [](const ThetaRow& r) { return r.d_wn - r.log_c; }},
        {"D_WN-B1", [](const ThetaRow& r) { return r.d_wn - r.b1; }},
        {"B2-D_WN", [](const ThetaRow& r) { return r.b2 - r.d_wn; }},
    };
    json crossovers = json::array();
    for (const auto& p : pairs) {
        const auto g = [&](double t) { return p.diff(theta_point(t, o.eta, o.zeta)); };
        for (const auto& c : find_crossovers(g, grid)) {
            crossovers.push_back({{"pair", p.name},
                                  {"theta", std::round(c.at * 1e4) / 1e4},
                                  {"distance_from_pi_2", std::round(std::abs(std::numbers::pi / 2 - c.at) * 1e4) / 1e4},
                                  {"direction", c.upward ? "up" : "down"}});
        }
    }

    Sink sink(o.out);
    auto& os = sink.stream();
    os << "# sweep = theta\n# eta = " << fmt_num(o.eta) << "\n# zeta = " << fmt_num(o.zeta) << "\n# start = "
       << fmt_num(start) << "\n# stop = " << fmt_num(stop) << "\n# steps = " << steps << "\n# seed = " << o.seed
       << "\n# dim = 2\n";
    for (const auto& c : crossovers) {
        os << "# crossover " << c["pair"].get<std::string>() << " theta=" << fmt_fixed4(c["theta"].get<double>())
           << " |pi/2-theta|=" << fmt_fixed4(c["distance_from_pi_2"].get<double>()) << " "
           << c["direction"].get<std::string>() << "\n";
    }
    os << "theta,B1,B2,logC,D_WN,HW,QW\n";
    for (const auto& r : rows) {
        os << fmt_num(r.theta) << "," << fmt_num(r.b1) << "," << fmt_num(r.b2) << "," << fmt_num(r.log_c) << ","
           << fmt_num(r.d_wn) << "," << fmt_num(r.hw) << "," << fmt_num(r.qw) << "\n";
    }
    emit_summary(sink, o, rows.size(), crossovers);
    return kExitOk;
}

int cmd_sweep_damping(const SweepOptions& o) {
    const double start = o.start.value_or(0.0);
    const double stop = o.stop.value_or(1.0);
    require_range(start, 0.0, 1.0, "start");
    require_range(stop, 0.0, 1.0, "stop");
    if (!(start < stop)) throw Error(ErrorCode::ConfigError, "start must be below stop");
    const int steps = o.steps > 0 ? o.steps : 101;
    const auto grid = linear_grid(start, stop, steps);
    const auto rows = sweep_damping(grid);

    const auto g = [](double e) {
        const auto row = damping_point(e);
        return row.d_ad - row.log_c_numeric;
    };
    json crossovers = json::array();
    if (const auto at = first_upcrossing(g, grid)) {
        crossovers.push_back({{"pair", "D_AD-logC"}, {"e", std::round(*at * 1e4) / 1e4}, {"direction", "up"}});
    }

    Sink sink(o.out);
    auto& os = sink.stream();
    os << "# sweep = damping\n# start = " << fmt_num(start) << "\n# stop = " << fmt_num(stop)
       << "\n# steps = " << steps << "\n# seed = " << o.seed << "\n# dim = 3\n";
    for (const auto& c : crossovers) {
        os << "# crossover D_AD-logC e=" << fmt_fixed4(c["e"].get<double>()) << " up\n";
    }
    os << "e,logC_numeric,logC_closed,D_AD\n";
    for (const auto& r : rows) {
        os << fmt_num(r.e) << "," << fmt_num(r.log_c_numeric) << "," << fmt_num(r.log_c_closed) << ","
           << fmt_num(r.d_ad) << "\n";
    }
    emit_summary(sink, o, rows.size(), crossovers);
    return kExitOk;
}

int cmd_verify(const std::string& suite, long trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::ConfigError, "trials must be at least 1");
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
    } else {
        names.push_back(suite);
    }
    bool all_passed = true;
    json results = json::array();
    for (const auto& name : names) {
        const auto r = run_suite(name, trials, RngSeed{seed});
        all_passed = all_passed && r.passed();
        results.push_back({{"suite", r.name},
                           {"passed", r.passed()},
                           {"trials", r.trials},
                           {"checks", r.checks},
                           {"violations", r.violations},
                           {"worst_slack", r.worst_slack},
                           {"max_deviation", r.max_deviation},
                           {"failures", r.failures}});
    }
    json out{{"seed", seed}, {"trials", trials}, {"passed", all_passed}, {"suites", std::move(results)}};
    std::cout << out.dump(2) << "\n";
    return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Device uncertainty and entropic uncertainty-relation bounds for POVMs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "INI/TOML file with option defaults (flags override it)");

    Options opts;
    app.add_flag("--json-errors", opts.json_errors, "Report errors as JSON on stdout");

    std::function<int()> action;

    std::string povm_path;
    auto* validate = app.add_subcommand("validate", "Validate a POVM file and print its spectra");
    validate->add_option("povm", povm_path, "POVM JSON file")->required();
    validate->callback([&] { action = [&] { return cmd_validate(povm_path); }; });

    std::string state_path;
    std::string format = "json";
    auto* analyze = app.add_subcommand("analyze", "Entropy, device and quantum uncertainty for one state");
    analyze->add_option("povm", povm_path, "POVM JSON file")->required();
    analyze->add_option("--state", state_path, "State JSON file")->required();
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    analyze->callback([&] { action = [&] { return cmd_analyze(povm_path, state_path, format); }; });

    std::string a_path, b_path;
    auto* bounds = app.add_subcommand("bounds", "All lower bounds for a POVM pair");
    bounds->add_option("A", a_path, "First POVM JSON file")->required();
    bounds->add_option("B", b_path, "Second POVM JSON file")->required();
    bounds->add_option("--state", state_path, "Optional state JSON file for entropies and a validity check");
    bounds->callback([&] { action = [&] { return cmd_bounds(a_path, b_path, state_path); }; });

    SweepOptions sweep;
    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--steps", sweep.steps, "Grid points (>= 2)")->check(CLI::Range(2, 1000000));
        cmd->add_option("--start", sweep.start, "Grid start");
        cmd->add_option("--stop", sweep.stop, "Grid stop");
        cmd->add_option("--seed", sweep.seed, "Seed recorded in the output header");
        cmd->add_option("--out", sweep.out, "Output CSV path (stdout if omitted)");
    };
    auto* theta = app.add_subcommand("sweep-theta", "Qubit bounds against the angle between X_eta and Z_zeta");
    theta->add_option("--eta", sweep.eta, "Sharpness of X")->required();
    theta->add_option("--zeta", sweep.zeta, "Sharpness of Z")->required();
    add_grid(theta);
    theta->callback([&] { action = [&] { return cmd_sweep_theta(sweep); }; });

    auto* damping = app.add_subcommand("sweep-damping", "Qutrit amplitude-damping pair against e");
    add_grid(damping);
    damping->callback([&] { action = [&] { return cmd_sweep_damping(sweep); }; });

    std::string suite;
    long trials = 0;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
    verify->add_option("--suite", suite, "Suite name, or 'all'")->required();
    verify->add_option("--trials", trials, "Random draws per configuration")->required();
    verify->add_option("--seed", seed, "Seed (recorded in the report)");
    verify->callback([&] { action = [&] { return cmd_verify(suite, trials, seed); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        return report_error(opts, e);
    } catch (const std::exception& e) {
        return report_error(opts, Error(ErrorCode::ParseError, e.what()));
    }
}
