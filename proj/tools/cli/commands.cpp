#include "cli/commands.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "cli/manifest.hpp"
#include "cli/report.hpp"
#include "wignerbell/errors.hpp"
#include "wignerbell/exhaustive.hpp"
#include "wignerbell/version.hpp"

namespace wignerbell::cli {

std::filesystem::path resolve_output_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
    return kDefaultOutputDir;
}

std::vector<std::int64_t> parse_schedule(const std::string& text) {
    std::vector<std::int64_t> schedule;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw ConfigError("schedule has an empty entry: '" + text + "'");
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw ConfigError("schedule entry '" + item + "' is not an integer");
        schedule.push_back(v);
    }
    if (schedule.empty()) throw ConfigError("schedule is empty");
    return schedule;
}

int cmd_table(const std::string& format, std::ostream& out) {
    TableFormat f = TableFormat::Text;
    if (format == "csv") f = TableFormat::Csv;
    if (format == "json") f = TableFormat::Json;
    out << render_table(f);
    return kExitOk;
}

int cmd_check(const std::string& which, int max_sum, std::ostream& out, std::ostream& err) {
    if (max_sum < 1 || max_sum > kMaxExhaustiveSum) {
        err << "error: --max-sum must be in 1.." << kMaxExhaustiveSum << ", got " << max_sum << '\n';
        return kExitUsage;
    }
    const ExhaustiveCheckResult result = check_exhaustive(parse_inequality_kind(which), max_sum);
    out << which << " max-sum " << max_sum << ": checked " << result.checked << ", violations "
        << result.violations << '\n';
    if (result.kind == InequalityKind::Entropy) {
        out << "max |slack - ln(N2*N7)| = " << format_double(result.max_slack_deviation) << '\n';
    }
    return result.violations == 0 ? kExitOk : kExitRuntime;
}

int cmd_quantum_scan(int steps, std::ostream& out, std::ostream& err) {
    if (steps < 2) {
        err << "error: --steps must be >= 2, got " << steps << '\n';
        return kExitUsage;
    }
    out << render_scan_csv(coplanar_scan(steps));
    return kExitOk;
}

int cmd_simulate(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                 std::ostream& out, std::ostream&) {
    const LoadedConfig config = load_config(config_path);
    const EstimateReport report = estimate_wigner(config.experiment);

    RunManifest manifest;
    manifest.command = "simulate";
    manifest.config = config_to_json(config);
    manifest.seed = config.experiment.seed;
    manifest.timestamp = utc_timestamp();
    write_output(out_dir, "simulate_report.json", estimate_to_json(config, report).dump(2) + "\n",
                 manifest);
    write_output(out_dir, "simulate_report.csv", render_estimate_csv(report), manifest);
    write_manifest(out_dir, "simulate_manifest.json", manifest);

    out << "lhs " << format_double(report.empirical.lhs) << ", rhs "
        << format_double(report.empirical.rhs) << ", slack " << format_double(report.empirical.slack)
        << " (se " << format_double(report.slack_std_error) << ")\n"
        << "violated " << (report.violated ? "true" : "false") << ", significant "
        << (report.significant_violation ? "true" : "false") << '\n'
        << "wrote " << (out_dir / "simulate_report.json").string() << '\n';
    return kExitOk;
}

int cmd_violation_curve(const std::filesystem::path& config_path, const std::string& schedule_text,
                        const std::filesystem::path& out_dir, std::ostream& out, std::ostream&) {
    const std::vector<std::int64_t> schedule = parse_schedule(schedule_text);
    const LoadedConfig config = load_config(config_path);
    const ViolationCurve curve = violation_curve(config.experiment, schedule, config.threads);

    RunManifest manifest;
    manifest.command = "violation-curve --schedule " + schedule_text;
    manifest.config = config_to_json(config);
    manifest.seed = config.experiment.seed;
    manifest.timestamp = utc_timestamp();
    const std::string csv = render_curve_csv(curve);
    write_output(out_dir, "violation_curve.csv", csv, manifest);
    write_output(out_dir, "violation_curve.json", curve_to_json(config, curve).dump(2) + "\n",
                 manifest);
    write_output(out_dir, "violation_curve.svg", render_curve_svg(curve), manifest);
    write_manifest(out_dir, "violation_curve_manifest.json", manifest);

    out << csv << "wrote " << (out_dir / "violation_curve.csv").string() << '\n';
    return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wigner-form Bell inequality: population counting, entropy, and singlet sampling",
                 "wignerbell"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Print the eight hidden-variable pair types");
    table->add_option("--format", table_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string which;
    int max_sum = 0;
    auto* check = app.add_subcommand("check", "Exhaustively verify an inequality over populations");
    check->add_option("which", which, "eq1 (multiplicity), eq2 (Wigner), eq3 (entropy)")
        ->required()
        ->check(CLI::IsMember({"eq1", "eq2", "eq3"}));
    check->add_option("--max-sum", max_sum, "largest total population, 1..20")->required();

    int steps = 0;
    auto* scan = app.add_subcommand("quantum-scan", "Singlet Wigner inequality over a theta grid");
    scan->add_option("--steps", steps, "number of theta grid points in [0, pi]")->required();

    std::string config_path;
    std::optional<std::string> out_flag;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the Wigner inequality");
    simulate->add_option("--config", config_path, "JSON experiment config")->required();
    simulate->add_option("--out", out_flag, "output directory");

    std::string schedule;
    auto* curve = app.add_subcommand("violation-curve", "Apparent-violation rate versus sample size");
    curve->add_option("--config", config_path, "JSON experiment config")->required();
    curve->add_option("--schedule", schedule, "comma-separated increasing sample sizes")
        ->required();
    curve->add_option("--out", out_flag, "output directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table) return cmd_table(table_format, out);
        if (*check) return cmd_check(which, max_sum, out, err);
        if (*scan) return cmd_quantum_scan(steps, out, err);
        if (*simulate) return cmd_simulate(config_path, resolve_output_dir(out_flag), out, err);
        if (*curve) {
            return cmd_violation_curve(config_path, schedule, resolve_output_dir(out_flag), out,
                                       err);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace wignerbell::cli
