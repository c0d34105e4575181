// cli.cpp: Command execution and deterministic CSV/JSON reports

#include "lindscope/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "lindscope/errors.hpp"
#include "parallel.hpp"

namespace lindscope::cli {

namespace {

std::string quoted(std::string_view text)
{
    return nlohmann::json(std::string(text)).dump();
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string kappa_text(const std::optional<double>& kappa, OutputFormat format)
{
    if (kappa) return format_double(*kappa);
    return format == OutputFormat::Json ? "\"undefined\"" : "undefined";
}

std::string bool_text(bool value)
{
    return value ? "true" : "false";
}

std::string render_metrics_rows(const std::string& param, const std::vector<double>& values,
                                const std::vector<StructuralMetrics>& rows, OutputFormat format, bool regimes_only)
{
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << csv_field(param);
        out << (regimes_only ? ",delta,eta,kappa,regime\n"
                             : ",delta,eta,nd_norm,kappa,bound_margin,generator_norm,regime\n");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const StructuralMetrics& m = rows[i];
            out << format_double(values[i]) << ',' << format_double(m.delta) << ',' << format_double(m.eta) << ',';
            if (!regimes_only) out << format_double(m.nd_norm) << ',';
            out << kappa_text(m.kappa, format) << ',';
            if (!regimes_only) out << format_double(m.bound_margin) << ',' << format_double(m.generator_norm) << ',';
            out << to_string(m.regime) << '\n';
        }
        return out.str();
    }

    out << "{\n  \"param\": " << quoted(param) << ",\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const StructuralMetrics& m = rows[i];
        out << (i ? ",\n" : "\n") << "    {\"value\": " << format_double(values[i])
            << ", \"delta\": " << format_double(m.delta) << ", \"eta\": " << format_double(m.eta);
        if (!regimes_only) out << ", \"nd_norm\": " << format_double(m.nd_norm);
        out << ", \"kappa\": " << kappa_text(m.kappa, format);
        if (!regimes_only) {
            out << ", \"bound_margin\": " << format_double(m.bound_margin)
                << ", \"generator_norm\": " << format_double(m.generator_norm);
        }
        out << ", \"regime\": " << quoted(to_string(m.regime)) << "}";
    }
    out << "\n  ]\n}\n";
    return out.str();
}

std::string execute_sweep(const RunConfig& config, const ModelFile& file, bool regimes_only)
{
    if (!file.spec) {
        throw ConfigError("sweep and regimes need a named model file ({\"model\": {\"type\": ...}})");
    }
    const SweepRange& range = *config.sweep;
    const std::vector<double> values = range.values();
    std::vector<StructuralMetrics> rows(values.size());
    detail::parallel_for(values.size(), [&](std::size_t i) {
        ModelSpec spec = *file.spec;
        spec.params[range.param] = values[i];
        rows[i] = compute_metrics(liouvillian(build(spec)), config.thresholds);
    });
    return render_metrics_rows(range.param, values, rows, config.effective_format(), regimes_only);
}

std::string execute_properties(const RunConfig& config)
{
    std::mt19937_64 rng(config.seed);
    std::ostringstream out;
    const OutputFormat format = config.effective_format();
    if (format == OutputFormat::Csv) {
        out << "index,dim,jumps,delta,eta,nd_norm,bound_margin,no_flow_without_dissipation,eta_bound_holds,"
               "gronwall_min_rel_margin,nd_real_part_ratio\n";
    } else {
        out << "{\n  \"seed\": " << config.seed << ",\n  \"rows\": [";
    }
    for (std::size_t i = 0; i < config.count; ++i) {
        const LindbladModel model = random_model(rng);
        const Superoperator s = liouvillian(model);
        const StructuralMetrics m = compute_metrics(s, config.thresholds);
        const ZeroTolerances tol = zero_tolerances(m.generator_norm);
        const bool prop1 = !(m.delta <= tol.zero) || m.eta <= tol.eta;
        const bool eq8 = m.bound_margin >= -1e-9 * (1.0 + 2.0 * m.delta * m.nd_norm);

        const ComplexMatrix x = random_matrix(rng, model.dim());
        const ComplexMatrix nd_x = lindscope::apply(decompose(s).nondissipative, x);
        const double nd_ratio = std::abs(hs_inner(x, nd_x).real()) / (hs_norm(x) * hs_norm(x));

        ComplexMatrix rho = random_hermitian(rng, model.dim());
        rho /= hs_norm(rho);
        const TimeGrid grid = default_grid(m);
        const std::vector<double> margins = gronwall_margins(s, rho, grid);
        const std::vector<double> times = grid.times();
        double rel = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < margins.size(); ++k) {
            rel = std::min(rel, margins[k] / std::exp(times[k] * m.delta));
        }

        if (format == OutputFormat::Csv) {
            out << i << ',' << model.dim() << ',' << model.jumps().size() << ',' << format_double(m.delta) << ','
                << format_double(m.eta) << ',' << format_double(m.nd_norm) << ',' << format_double(m.bound_margin)
                << ',' << bool_text(prop1) << ',' << bool_text(eq8) << ',' << format_double(rel) << ','
                << format_double(nd_ratio) << '\n';
        } else {
            out << (i ? ",\n" : "\n") << "    {\"index\": " << i << ", \"dim\": " << model.dim()
                << ", \"jumps\": " << model.jumps().size() << ", \"delta\": " << format_double(m.delta)
                << ", \"eta\": " << format_double(m.eta) << ", \"nd_norm\": " << format_double(m.nd_norm)
                << ", \"bound_margin\": " << format_double(m.bound_margin)
                << ", \"no_flow_without_dissipation\": " << bool_text(prop1)
                << ", \"eta_bound_holds\": " << bool_text(eq8)
                << ", \"gronwall_min_rel_margin\": " << format_double(rel)
                << ", \"nd_real_part_ratio\": " << format_double(nd_ratio) << "}";
        }
    }
    if (format == OutputFormat::Json) out << "\n  ]\n}\n";
    return out.str();
}

} // namespace

std::vector<double> SweepRange::values() const
{
    if (points == 0) throw ConfigError("sweep: --points must be >= 1");
    if (!std::isfinite(from) || !std::isfinite(to)) throw ConfigError("sweep: range ends must be finite");
    if (log && (from <= 0.0 || to <= 0.0)) throw ConfigError("sweep: --log needs positive range ends");
    std::vector<double> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double f = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        out[i] = log ? std::exp(std::log(from) + f * (std::log(to) - std::log(from))) : from + f * (to - from);
    }
    out.front() = from;
    if (points > 1) out.back() = to;
    return out;
}

OutputFormat RunConfig::effective_format() const
{
    if (format) return *format;
    return command == Command::Analyze ? OutputFormat::Json : OutputFormat::Csv;
}

void RunConfig::validate() const
{
    if (command != Command::Properties && model_path.empty()) throw ConfigError("a model file is required");
    if (output_path.empty()) throw ConfigError("output path must not be empty");
    thresholds.validate();
    if ((command == Command::Sweep || command == Command::Regimes) && !sweep) {
        throw ConfigError("sweep and regimes need --param, --from, --to and --points");
    }
    if (command == Command::Properties && count == 0) throw ConfigError("--count must be >= 1");
}

std::string format_double(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string render_analyze(const LindbladModel& model, const RegimeThresholds& thresholds, OutputFormat format)
{
    const StructuralMetrics m = compute_metrics(liouvillian(model), thresholds);
    const StructuredDissipatorReport structured = structured_dissipator_report(model);
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "label,dim,delta,eta,nd_norm,kappa,bound_margin,generator_norm,regime,structured,structured_gamma,"
               "structured_shift_verified\n";
        out << csv_field(model.label()) << ',' << model.dim() << ',' << format_double(m.delta) << ','
            << format_double(m.eta) << ',' << format_double(m.nd_norm) << ',' << kappa_text(m.kappa, format) << ','
            << format_double(m.bound_margin) << ',' << format_double(m.generator_norm) << ',' << to_string(m.regime)
            << ',' << bool_text(structured.is_structured) << ',' << format_double(structured.gamma) << ','
            << bool_text(structured.shift_verified) << '\n';
        return out.str();
    }
    out << "{\n"
        << "  \"label\": " << quoted(model.label()) << ",\n"
        << "  \"dim\": " << model.dim() << ",\n"
        << "  \"delta\": " << format_double(m.delta) << ",\n"
        << "  \"eta\": " << format_double(m.eta) << ",\n"
        << "  \"nd_norm\": " << format_double(m.nd_norm) << ",\n"
        << "  \"kappa\": " << kappa_text(m.kappa, format) << ",\n"
        << "  \"bound_margin\": " << format_double(m.bound_margin) << ",\n"
        << "  \"generator_norm\": " << format_double(m.generator_norm) << ",\n"
        << "  \"regime\": " << quoted(to_string(m.regime)) << ",\n"
        << "  \"structured\": " << bool_text(structured.is_structured) << ",\n"
        << "  \"structured_gamma\": " << format_double(structured.gamma) << ",\n"
        << "  \"structured_shift_verified\": " << bool_text(structured.shift_verified) << ",\n"
        << "  \"jump_map_spectrum\": [";
    for (std::size_t i = 0; i < structured.jump_map_spectrum.size(); ++i) {
        const Complex& value = structured.jump_map_spectrum[i];
        out << (i ? ", " : "") << '[' << format_double(value.real()) << ", " << format_double(value.imag()) << ']';
    }
    out << "]\n}\n";
    return out.str();
}

std::string render_series(const LindbladModel& model, const AmplificationSeries& series, OutputFormat format)
{
    std::ostringstream out;
    const std::size_t n = series.times.size();
    if (format == OutputFormat::Csv) {
        out << "t,prop_norm,a_paper,a_spectral,gronwall_env,appg_env,appg_satisfied\n";
        for (std::size_t k = 0; k < n; ++k) {
            out << format_double(series.times[k]) << ',' << format_double(series.prop_norm[k]) << ','
                << format_double(series.a_paper[k]) << ',' << format_double(series.a_spectral[k]) << ','
                << format_double(series.gronwall_env[k]) << ',' << format_double(series.appg_env[k]) << ','
                << (series.appg_satisfied[k] ? 1 : 0) << '\n';
        }
        return out.str();
    }
    const auto column = [&](const char* name, const std::vector<double>& values) {
        out << "  \"" << name << "\": [";
        for (std::size_t k = 0; k < values.size(); ++k) out << (k ? ", " : "") << format_double(values[k]);
        out << "],\n";
    };
    out << "{\n  \"label\": " << quoted(model.label()) << ",\n"
        << "  \"delta\": " << format_double(series.delta) << ",\n"
        << "  \"alpha\": " << format_double(series.alpha) << ",\n"
        << "  \"nd_norm\": " << format_double(series.nd_norm) << ",\n"
        << "  \"eta\": " << format_double(series.eta) << ",\n";
    column("t", series.times);
    column("prop_norm", series.prop_norm);
    column("a_paper", series.a_paper);
    column("a_spectral", series.a_spectral);
    column("gronwall_env", series.gronwall_env);
    column("appg_env", series.appg_env);
    out << "  \"appg_satisfied\": [";
    for (std::size_t k = 0; k < n; ++k) out << (k ? ", " : "") << bool_text(series.appg_satisfied[k]);
    out << "]\n}\n";
    return out.str();
}

std::string execute(const RunConfig& config)
{
    config.validate();
    if (config.command == Command::Properties) return execute_properties(config);

    const ModelFile file = load_model_file(config.model_path);
    switch (config.command) {
    case Command::Analyze: return render_analyze(file.model, config.thresholds, config.effective_format());
    case Command::Series: {
        const Superoperator s = liouvillian(file.model);
        TimeGrid grid = default_grid(s);
        if (config.t_end) grid.t_end = *config.t_end;
        if (config.steps) grid.steps = *config.steps;
        return render_series(file.model, amplification_series(s, grid), config.effective_format());
    }
    case Command::Sweep: return execute_sweep(config, file, false);
    case Command::Regimes: return execute_sweep(config, file, true);
    case Command::Properties: break;
    }
    throw ConfigError("unsupported command");
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
    static std::atomic<unsigned> counter{0};
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot create '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const std::string report = execute(config);
        if (config.output_path == "-") {
            out << report;
            out.flush();
            if (!out) throw IoError("failed writing to standard output");
        } else {
            write_file_atomic(config.output_path, report);
        }
        return kExitOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

} // namespace lindscope::cli
