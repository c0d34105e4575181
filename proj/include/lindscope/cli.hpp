// cli.hpp: Model-file parsing, report rendering and the command runner behind the CLI

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "lindscope/dynamics.hpp"
#include "lindscope/metrics.hpp"
#include "lindscope/models.hpp"

namespace lindscope::cli {

enum class Command { Analyze, Series, Sweep, Regimes, Properties };
enum class OutputFormat { Csv, Json };

// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;

struct SweepRange {
    std::string param;
    double from = 0.0;
    double to = 1.0;
    std::size_t points = 2;
    bool log = false;

    std::vector<double> values() const;
};

struct RunConfig {
    Command command = Command::Analyze;
    std::string model_path;
    std::optional<double> t_end;
    std::optional<std::size_t> steps;
    RegimeThresholds thresholds;
    std::string output_path = "-"; // "-" writes to standard output
    std::optional<OutputFormat> format;
    std::optional<SweepRange> sweep;
    std::uint64_t seed = 20260101;
    std::size_t count = 100;

    // csv for series/sweep/regimes/properties, json for analyze.
    OutputFormat effective_format() const;

    void validate() const;
};

// A parsed model file. `spec` is set when the file names a builder, which is
// what sweep and regimes need to vary a parameter.
struct ModelFile {
    LindbladModel model;
    std::optional<ModelSpec> spec;
};

// Accepts {"model": {"type": "<kind>", <param>: <number>...}} or the explicit
// form {"dim": d, "hamiltonian": [[[re, im], ...], ...], "jumps": [{"matrix": ..., "rate": r}]}.
// Syntax and schema problems raise ConfigError with line or field context.
ModelFile parse_model_json(std::string_view text, std::string_view source = "<input>");

// Throws IoError when the file cannot be read.
ModelFile load_model_file(const std::filesystem::path& path);

LindbladModel parse_model_file(const std::filesystem::path& path);

// 17 significant digits (%.17g); parsing the text back yields the same double.
std::string format_double(double value);

std::string render_analyze(const LindbladModel& model, const RegimeThresholds& thresholds, OutputFormat format);
std::string render_series(const LindbladModel& model, const AmplificationSeries& series, OutputFormat format);

// Executes the command and returns its report text; throws on any failure.
std::string execute(const RunConfig& config);

// Runs the command, writes the report atomically and maps failures to exit
// codes: 0 success, 1 model/config error, 2 I/O error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Writes via a temporary file in the destination directory, then renames.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

} // namespace lindscope::cli
