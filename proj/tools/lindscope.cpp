// lindscope.cpp: Command-line front end

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lindscope/cli.hpp"

namespace {

using lindscope::cli::Command;
using lindscope::cli::OutputFormat;
using lindscope::cli::RunConfig;
using lindscope::cli::SweepRange;

struct SweepOptions {
    std::string param;
    double from = 0.0;
    double to = 1.0;
    std::size_t points = 2;
    bool log = false;
};

void add_output_options(CLI::App* sub, RunConfig& config, std::string& format)
{
    sub->add_option("--out", config.output_path, "Output file ('-' for standard output)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_sweep_options(CLI::App* sub, SweepOptions& sweep)
{
    sub->add_option("--param", sweep.param, "Model parameter to vary")->required();
    sub->add_option("--from", sweep.from, "First value")->required();
    sub->add_option("--to", sweep.to, "Last value")->required();
    sub->add_option("--points", sweep.points, "Number of values")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--log", sweep.log, "Logarithmic spacing");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lindscope: structural metrics of Lindblad generators"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format;
    SweepOptions sweep;
    double t_end = 0.0;
    std::size_t steps = 0;

    app.add_option("--kappa-lo", config.thresholds.kappa_lo, "Upper kappa edge of the weakly nonnormal band");
    app.add_option("--kappa-hi", config.thresholds.kappa_hi, "Lower kappa edge of the strongly nonnormal band");
    app.add_option("--seed", config.seed, "Seed for the properties command");

    auto* analyze = app.add_subcommand("analyze", "Structural metrics and regime of one model");
    analyze->add_option("model", config.model_path, "Model JSON file")->required();
    add_output_options(analyze, config, format);

    auto* series = app.add_subcommand("series", "Propagator norm and amplification factors over a time grid");
    series->add_option("model", config.model_path, "Model JSON file")->required();
    auto* t_end_opt = series->add_option("--t-end", t_end, "End of the time grid")->check(CLI::PositiveNumber);
    auto* steps_opt = series->add_option("--steps", steps, "Number of grid intervals")->check(CLI::Range(1, 1000000));
    add_output_options(series, config, format);

    auto* sweep_cmd = app.add_subcommand("sweep", "Metrics while one named-model parameter varies");
    sweep_cmd->add_option("model", config.model_path, "Named model JSON file")->required();
    add_sweep_options(sweep_cmd, sweep);
    add_output_options(sweep_cmd, config, format);

    auto* regimes = app.add_subcommand("regimes", "(delta, eta, kappa, regime) table along a parameter sweep");
    regimes->add_option("model", config.model_path, "Named model JSON file")->required();
    add_sweep_options(regimes, sweep);
    add_output_options(regimes, config, format);

    auto* properties = app.add_subcommand("properties", "Seeded random-model property checks");
    properties->add_option("--count", config.count, "Number of random models")->check(CLI::PositiveNumber);
    properties->add_option("--seed", config.seed, "Random seed");
    add_output_options(properties, config, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lindscope::cli::kExitConfig;
    }

    if (analyze->parsed()) config.command = Command::Analyze;
    if (series->parsed()) config.command = Command::Series;
    if (sweep_cmd->parsed()) config.command = Command::Sweep;
    if (regimes->parsed()) config.command = Command::Regimes;
    if (properties->parsed()) config.command = Command::Properties;

    if (!format.empty()) config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (t_end_opt->count() > 0) config.t_end = t_end;
    if (steps_opt->count() > 0) config.steps = steps;
    if (sweep_cmd->parsed() || regimes->parsed()) {
        config.sweep = SweepRange{sweep.param, sweep.from, sweep.to, sweep.points, sweep.log};
    }

    return lindscope::cli::run(config, std::cout, std::cerr);
}
