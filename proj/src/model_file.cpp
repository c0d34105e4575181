// model_file.cpp: JSON model files: named builders or explicit complex matrices

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lindscope/cli.hpp"
#include "lindscope/errors.hpp"

namespace lindscope::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& field, const std::string& message)
{
    throw ConfigError(std::string(source) + ": " + field + ": " + message);
}

void require_only_keys(const json& object, std::initializer_list<std::string_view> allowed, std::string_view source,
                       const std::string& where)
{
    for (const auto& item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            fail(source, where.empty() ? item.key() : where + "." + item.key(), "unknown key");
        }
    }
}

double number(const json& value, std::string_view source, const std::string& field)
{
    if (!value.is_number()) fail(source, field, "expected a number");
    const double out = value.get<double>();
    if (!std::isfinite(out)) fail(source, field, "number is not finite");
    return out;
}

ComplexMatrix complex_matrix(const json& value, std::size_t dim, std::string_view source, const std::string& field)
{
    if (!value.is_array() || value.size() != dim) {
        fail(source, field, "expected " + std::to_string(dim) + " rows");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < dim; ++i) {
        const json& row = value[i];
        const std::string row_field = field + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != dim) {
            fail(source, row_field, "expected " + std::to_string(dim) + " entries");
        }
        for (std::size_t j = 0; j < dim; ++j) {
            const json& entry = row[j];
            const std::string entry_field = row_field + "[" + std::to_string(j) + "]";
            if (!entry.is_array() || entry.size() != 2) fail(source, entry_field, "expected [re, im] pair");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                Complex(number(entry[0], source, entry_field + "[0]"), number(entry[1], source, entry_field + "[1]"));
        }
    }
    return m;
}

std::string default_label(std::string_view source)
{
    return std::filesystem::path(std::string(source)).stem().string();
}

ModelFile parse_named(const json& root, std::string_view source)
{
    require_only_keys(root, {"model", "label"}, source, "");
    const json& model = root.at("model");
    if (!model.is_object()) fail(source, "model", "expected an object");
    if (!model.contains("type")) fail(source, "model.type", "missing key");
    if (!model.at("type").is_string()) fail(source, "model.type", "expected a string");

    ModelSpec spec;
    spec.kind = parse_model_kind(model.at("type").get<std::string>());
    for (const auto& item : model.items()) {
        if (item.key() == "type") continue;
        spec.params[item.key()] = number(item.value(), source, "model." + item.key());
    }
    LindbladModel built = build(spec);
    if (root.contains("label")) {
        if (!root.at("label").is_string()) fail(source, "label", "expected a string");
        built = LindbladModel(built.hamiltonian(), built.jumps(), root.at("label").get<std::string>());
    }
    return {std::move(built), spec};
}

ModelFile parse_explicit(const json& root, std::string_view source)
{
    require_only_keys(root, {"dim", "hamiltonian", "jumps", "label"}, source, "");
    if (!root.contains("dim")) fail(source, "dim", "missing key");
    const json& dim_value = root.at("dim");
    if (!dim_value.is_number_integer() || dim_value.get<long long>() < 1) {
        fail(source, "dim", "expected a positive integer");
    }
    const auto dim = static_cast<std::size_t>(dim_value.get<long long>());
    if (dim > dimension_cap()) {
        throw ModelError(std::string(source) + ": dim " + std::to_string(dim) + " exceeds the dimension cap of " +
                         std::to_string(dimension_cap()));
    }

    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix hamiltonian = ComplexMatrix::Zero(d, d);
    if (root.contains("hamiltonian")) hamiltonian = complex_matrix(root.at("hamiltonian"), dim, source, "hamiltonian");

    std::vector<ComplexMatrix> jumps;
    if (root.contains("jumps")) {
        const json& list = root.at("jumps");
        if (!list.is_array()) fail(source, "jumps", "expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string field = "jumps[" + std::to_string(k) + "]";
            const json& jump = list[k];
            if (!jump.is_object()) fail(source, field, "expected an object");
            require_only_keys(jump, {"matrix", "rate"}, source, field);
            if (!jump.contains("matrix")) fail(source, field + ".matrix", "missing key");
            ComplexMatrix matrix = complex_matrix(jump.at("matrix"), dim, source, field + ".matrix");
            if (jump.contains("rate")) {
                const double rate = number(jump.at("rate"), source, field + ".rate");
                if (rate < 0.0) fail(source, field + ".rate", "rate must be >= 0");
                matrix *= std::sqrt(rate);
            }
            jumps.push_back(std::move(matrix));
        }
    }

    std::string label = default_label(source);
    if (root.contains("label")) {
        if (!root.at("label").is_string()) fail(source, "label", "expected a string");
        label = root.at("label").get<std::string>();
    }
    try {
        return {LindbladModel(std::move(hamiltonian), std::move(jumps), std::move(label)), std::nullopt};
    } catch (const ModelError& e) {
        throw ModelError(std::string(source) + ": " + e.what());
    }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

} // namespace

ModelFile parse_model_json(std::string_view text, std::string_view source)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ConfigError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": invalid JSON: " + e.what());
    }
    if (!root.is_object()) fail(source, "<root>", "expected a JSON object");
    if (root.contains("model")) {
        if (root.contains("dim") || root.contains("hamiltonian") || root.contains("jumps")) {
            fail(source, "model", "cannot be combined with an explicit dim/hamiltonian/jumps description");
        }
        return parse_named(root, source);
    }
    return parse_explicit(root, source);
}

ModelFile load_model_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading model file '" + path.string() + "'");
    return parse_model_json(buffer.str(), path.string());
}

LindbladModel parse_model_file(const std::filesystem::path& path)
{
    return load_model_file(path).model;
}

} // namespace lindscope::cli
