#include "cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/interferogram_file.hpp"
#include "cli/number_format.hpp"
#include "cli/report_json.hpp"
#include "cli/svg_plot.hpp"
#include "curlicue/analysis.hpp"
#include "curlicue/errors.hpp"
#include "curlicue/interferometer.hpp"
#include "curlicue/oracle.hpp"
#include "curlicue/planner.hpp"

namespace curlicue::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw UsageError("failed writing " + path.string());
}

void print_json(std::ostream& out, const Json& json) { out << json.dump(2) << '\n'; }

std::vector<std::int64_t> parse_target_list(std::string_view text) {
    std::vector<std::int64_t> targets;
    std::string token;
    auto flush = [&] {
        if (trim(token).empty()) {
            token.clear();
            return;
        }
        auto value = parse_int64(token);
        if (!value) throw UsageError("invalid target '" + std::string(trim(token)) + "'");
        targets.push_back(*value);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == '\n' || ch == ' ' || ch == '\t' || ch == '\r') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    return targets;
}

struct SimulateArgs {
    double x_nm = 0.0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int pixels = 2048;
    int paths = 3;
    int order = 2;
    double reference_nm = 0.0;
    double mirror_sigma = 0.0;
    double detector_sigma = 0.0;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string plot_path;
    bool allow_undersampled = false;
};

struct FactorArgs {
    std::string interferogram;
    std::int64_t n = 0;
    double threshold = kDefaultThreshold;
    double epsilon = kDefaultEpsilon;
    std::string format = "json";
};

struct ScanArgs {
    std::string interferogram;
    std::string targets;
    std::string targets_file;
    double threshold = kDefaultThreshold;
    double epsilon = kDefaultEpsilon;
    std::string format = "json";
};

struct PlanArgs {
    std::int64_t n = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    int digits = 0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int paths = 3;
    int order = 2;
    std::string emit_configs;
};

struct PlotArgs {
    std::string interferogram;
    std::vector<std::int64_t> targets;
    std::string out_path;
};

struct OracleArgs {
    std::int64_t n = 0;
    std::string window;
};

int do_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
    const InterferometerConfig config{a.reference_nm, a.x_nm, SumSpec(a.paths, a.order)};
    const SpectralWindow window{a.lambda_min, a.lambda_max, a.pixels};
    std::optional<NoiseModel> noise;
    if (a.mirror_sigma > 0.0 || a.detector_sigma > 0.0) {
        noise = NoiseModel{a.mirror_sigma, {}, a.detector_sigma, a.seed};
    }
    const Interferogram ig = simulate(config, window, noise, {a.allow_undersampled, 0});

    if (a.out_path.empty()) {
        write_interferogram(out, ig);
    } else {
        save_interferogram(a.out_path, ig);
        err << "wrote " << ig.samples.size() << " samples to " << a.out_path << '\n';
    }
    if (!a.plot_path.empty()) write_text_file(a.plot_path, render_interferogram_svg(ig, {}));
    return exit_code::kSuccess;
}

void check_format(const std::string& format) {
    if (format != "json" && format != "text") throw UsageError("--format must be json or text");
}

int do_factor(const FactorArgs& a, std::ostream& out) {
    check_format(a.format);
    const Interferogram ig = load_interferogram(a.interferogram);
    const FactorReport report = extract_factors(ig, a.n, a.threshold, a.epsilon);
    if (a.format == "json") {
        print_json(out, to_json(report));
    } else {
        out << to_text(report);
    }
    return report.factors.empty() ? exit_code::kNoFactors : exit_code::kSuccess;
}

int do_scan(const ScanArgs& a, std::ostream& out) {
    check_format(a.format);
    std::vector<std::int64_t> targets = parse_target_list(a.targets);
    if (!a.targets_file.empty()) {
        std::ifstream in(a.targets_file);
        if (!in) throw UsageError("cannot open " + a.targets_file);
        std::string line;
        while (std::getline(in, line)) {
            // '#' starts a comment; numbers may also be comma-separated within a line
            const auto more = parse_target_list(line.substr(0, line.find('#')));
            targets.insert(targets.end(), more.begin(), more.end());
        }
    }
    if (targets.empty()) throw UsageError("no targets given");

    const Interferogram ig = load_interferogram(a.interferogram);
    const auto reports = scan_targets(ig, targets, a.threshold, a.epsilon);
    if (a.format == "json") {
        print_json(out, to_json(reports));
    } else {
        for (const auto& r : reports) out << to_text(r) << '\n';
    }
    const bool any = std::any_of(reports.begin(), reports.end(),
                                 [](const FactorReport& r) { return !r.factors.empty(); });
    return any ? exit_code::kSuccess : exit_code::kNoFactors;
}

void emit_run_configs(const PlanArgs& a, const MeasurementPlan& plan, const SpectralWindow& window) {
    const std::filesystem::path dir(a.emit_configs);
    std::filesystem::create_directories(dir);
    const SumSpec spec(a.paths, a.order);
    for (std::size_t i = 0; i < plan.runs.size(); ++i) {
        const double x = plan.runs[i].displacement_unit_nm;
        const int pixels = std::max(window.pixel_count, min_pixels({0.0, x, spec}, window));
        std::ostringstream flags;
        flags << "--x " << format_double(x) << " --lambda-min " << format_double(window.lambda_min_nm)
              << " --lambda-max " << format_double(window.lambda_max_nm) << " --pixels " << pixels
              << " --paths " << a.paths << " --order " << a.order << '\n';
        std::ostringstream name;
        name << "run_" << std::setw(3) << std::setfill('0') << i << ".flags";
        write_text_file(dir / name.str(), flags.str());
    }
}

int do_plan(const PlanArgs& a, std::ostream& out) {
    const bool single = a.n != 0;
    const bool range = a.n_min != 0 || a.n_max != 0;
    const bool estimate = a.digits != 0;
    if (static_cast<int>(single) + static_cast<int>(range) + static_cast<int>(estimate) != 1) {
        throw UsageError("give exactly one of --n, --n-min/--n-max or --digits");
    }
    if (estimate) {
        print_json(out, to_json(displacement_estimate(a.digits, a.lambda_min), a.digits, a.lambda_min));
        return exit_code::kSuccess;
    }
    if (a.lambda_max == 0.0) throw UsageError("--lambda-max is required");
    const SpectralWindow window{a.lambda_min, a.lambda_max, 2048};
    const MeasurementPlan plan =
        single ? plan_single_number(a.n, window) : plan_number_range(a.n_min, a.n_max, window);
    print_json(out, to_json(plan, window));
    if (!a.emit_configs.empty()) emit_run_configs(a, plan, window);
    return exit_code::kSuccess;
}

int do_plot(const PlotArgs& a) {
    const Interferogram ig = load_interferogram(a.interferogram);
    write_text_file(a.out_path, render_interferogram_svg(ig, a.targets));
    return exit_code::kSuccess;
}

int do_oracle(const OracleArgs& a, std::ostream& out) {
    Json json = to_json(trial_division(a.n));
    if (!a.window.empty()) {
        const auto bounds = parse_target_list(a.window);
        if (bounds.size() != 2) throw UsageError("--window expects lo,hi");
        json["window"] = {{"lo", bounds[0]},
                          {"hi", bounds[1]},
                          {"divisors", divisors_in_window(a.n, bounds[0], bounds[1])}};
    }
    print_json(out, json);
    return exit_code::kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factor integers from simulated multi-path interferograms", "curlicue"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate an interferogram");
    simulate_cmd->add_option("--x", sim.x_nm, "Displacement unit x (nm)")->required();
    simulate_cmd->add_option("--lambda-min", sim.lambda_min, "Lower window edge (nm)")->required();
    simulate_cmd->add_option("--lambda-max", sim.lambda_max, "Upper window edge (nm)")->required();
    simulate_cmd->add_option("--pixels", sim.pixels, "CCD pixel count")->capture_default_str();
    simulate_cmd->add_option("--paths", sim.paths, "Interfering paths M")->capture_default_str();
    simulate_cmd->add_option("--order", sim.order, "Polynomial order d")->capture_default_str();
    simulate_cmd->add_option("--reference-nm", sim.reference_nm, "Reference arm length r (nm)");
    simulate_cmd->add_option("--mirror-sigma", sim.mirror_sigma, "Mirror placement error std (nm)");
    simulate_cmd->add_option("--detector-sigma", sim.detector_sigma, "Detector noise std");
    simulate_cmd->add_option("--seed", sim.seed, "Noise seed");
    simulate_cmd->add_option("--out", sim.out_path, "Output CSV (default stdout)");
    simulate_cmd->add_option("--plot", sim.plot_path, "Also write an SVG plot");
    simulate_cmd->add_flag("--allow-undersampled", sim.allow_undersampled,
                           "Skip the sampling guard");

    FactorArgs fac;
    auto* factor_cmd = app.add_subcommand("factor", "Factor one number from an interferogram");
    factor_cmd->add_option("--interferogram", fac.interferogram, "Interferogram CSV")->required();
    factor_cmd->add_option("--n", fac.n, "Number to factor")->required();
    factor_cmd->add_option("--threshold", fac.threshold, "Peak threshold")->capture_default_str();
    factor_cmd->add_option("--epsilon", fac.epsilon, "Integer residual gate")->capture_default_str();
    factor_cmd->add_option("--format", fac.format, "json or text")->capture_default_str();

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Factor many numbers from one interferogram");
    scan_cmd->add_option("--interferogram", scan.interferogram, "Interferogram CSV")->required();
    scan_cmd->add_option("--targets", scan.targets, "Comma-separated numbers");
    scan_cmd->add_option("--targets-file", scan.targets_file, "File of numbers");
    scan_cmd->add_option("--threshold", scan.threshold, "Peak threshold")->capture_default_str();
    scan_cmd->add_option("--epsilon", scan.epsilon, "Integer residual gate")->capture_default_str();
    scan_cmd->add_option("--format", scan.format, "json or text")->capture_default_str();

    PlanArgs plan;
    auto* plan_cmd = app.add_subcommand("plan", "Plan displacement units for a target");
    plan_cmd->add_option("--n", plan.n, "Single number to factor");
    plan_cmd->add_option("--n-min", plan.n_min, "Lower end of a number range");
    plan_cmd->add_option("--n-max", plan.n_max, "Upper end of a number range");
    plan_cmd->add_option("--digits", plan.digits, "Estimate x_0 for a number of this many digits");
    plan_cmd->add_option("--lambda-min", plan.lambda_min, "Lower window edge (nm)")->required();
    plan_cmd->add_option("--lambda-max", plan.lambda_max, "Upper window edge (nm)");
    plan_cmd->add_option("--paths", plan.paths, "Paths M for emitted configs")->capture_default_str();
    plan_cmd->add_option("--order", plan.order, "Order d for emitted configs")->capture_default_str();
    plan_cmd->add_option("--emit-configs", plan.emit_configs,
                         "Directory for one simulate flag file per run");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "Render an interferogram as SVG");
    plot_cmd->add_option("--interferogram", plot.interferogram, "Interferogram CSV")->required();
    plot_cmd->add_option("--n", plot.targets, "Target for a rescaled axis (up to 2)");
    plot_cmd->add_option("--out", plot.out_path, "Output SVG")->required();

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Trial-division factorization");
    oracle_cmd->add_option("--n", oracle.n, "Number to factor")->required();
    oracle_cmd->add_option("--window", oracle.window, "Divisor window lo,hi");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return exit_code::kUsage;
    }

    try {
        if (simulate_cmd->parsed()) return do_simulate(sim, out, err);
        if (factor_cmd->parsed()) return do_factor(fac, out);
        if (scan_cmd->parsed()) return do_scan(scan, out);
        if (plan_cmd->parsed()) return do_plan(plan, out);
        if (plot_cmd->parsed()) return do_plot(plot);
        if (oracle_cmd->parsed()) return do_oracle(oracle, out);
    } catch (const UnderSampled& e) {
        err << "error: " << e.what() << " (pass --allow-undersampled to override)\n";
        return exit_code::kUnderSampled;
    } catch (const PrecisionExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kPrecision;
    } catch (const InsufficientBandwidth& e) {
        err << "error: " << e.what() << " (minimum beta " << format_double(e.minimum_beta())
            << ")\n";
        return exit_code::kInsufficientBandwidth;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }
    return exit_code::kUsage;
}

}  // namespace curlicue::cli
