// models.cpp: Named model builders and seeded random models

#include "lindscope/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "lindscope/errors.hpp"

namespace lindscope {

namespace {

using Params = std::map<std::string, double>;

const Complex kI(0.0, 1.0);

double required(const Params& params, const std::string& key, std::string_view kind)
{
    const auto it = params.find(key);
    if (it == params.end()) {
        throw ConfigError("model '" + std::string(kind) + "': missing parameter '" + key + "'");
    }
    return it->second;
}

double optional(const Params& params, const std::string& key, double fallback)
{
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

double rate(const Params& params, const std::string& key, std::string_view kind)
{
    const double value = required(params, key, kind);
    if (!std::isfinite(value) || value < 0.0) {
        throw ConfigError("model '" + std::string(kind) + "': rate '" + key + "' must be finite and >= 0");
    }
    return value;
}

std::size_t count(double value, const std::string& key, std::string_view kind, std::size_t minimum)
{
    if (!std::isfinite(value) || value != std::floor(value) || value < static_cast<double>(minimum) ||
        value > 1e6) {
        throw ConfigError("model '" + std::string(kind) + "': '" + key + "' must be an integer >= " +
                          std::to_string(minimum));
    }
    return static_cast<std::size_t>(value);
}

void require_known_keys(const ModelSpec& spec)
{
    std::set<std::string> allowed;
    for (auto& name : parameter_names(spec.kind)) allowed.insert(name);
    if (spec.kind == ModelKind::MultiQubitDephasing) {
        const auto it = spec.params.find("qubits");
        if (it != spec.params.end()) {
            const std::size_t sites = count(it->second, "qubits", to_string(spec.kind), 1);
            for (std::size_t k = 1; k <= sites; ++k) allowed.insert("gamma_" + std::to_string(k));
        }
    }
    for (const auto& [key, value] : spec.params) {
        if (!allowed.contains(key)) {
            throw ConfigError("model '" + std::string(to_string(spec.kind)) + "': unknown parameter '" + key + "'");
        }
        if (!std::isfinite(value)) {
            throw ConfigError("model '" + std::string(to_string(spec.kind)) + "': parameter '" + key +
                              "' is not finite");
        }
    }
}

double root_rate(double gamma, std::string_view name)
{
    if (!std::isfinite(gamma) || gamma < 0.0) {
        throw ConfigError("rate '" + std::string(name) + "' must be finite and >= 0");
    }
    return std::sqrt(gamma);
}

ComplexMatrix zero2()
{
    return ComplexMatrix::Zero(2, 2);
}

std::string format_param(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%g", value);
    return buffer;
}

} // namespace

ComplexMatrix pauli(Axis axis)
{
    ComplexMatrix m = zero2();
    switch (axis) {
    case Axis::X:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case Axis::Y:
        m(0, 1) = -kI;
        m(1, 0) = kI;
        break;
    case Axis::Z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

ComplexMatrix lowering()
{
    return 0.5 * (pauli(Axis::X) - kI * pauli(Axis::Y));
}

ComplexMatrix raising()
{
    return 0.5 * (pauli(Axis::X) + kI * pauli(Axis::Y));
}

ComplexMatrix tensor_site(const ComplexMatrix& op, std::size_t site, std::size_t sites)
{
    if (op.rows() != 2 || op.cols() != 2) {
        throw DimensionError("tensor_site: single-site operator must be 2x2");
    }
    if (site >= sites) {
        throw DimensionError("tensor_site: site " + std::to_string(site) + " out of range for " +
                             std::to_string(sites) + " qubits");
    }
    if (sites >= 63 || (std::size_t{1} << sites) > dimension_cap()) {
        throw ModelError("tensor_site: 2^" + std::to_string(sites) + " exceeds the dimension cap of " +
                         std::to_string(dimension_cap()));
    }
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (std::size_t k = 0; k < sites; ++k) {
        out = kron(out, k == site ? op : ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    }
    return out;
}

ComplexMatrix annihilation(std::size_t n_max)
{
    const auto levels = static_cast<Eigen::Index>(n_max + 1);
    ComplexMatrix a = ComplexMatrix::Zero(levels, levels);
    for (Eigen::Index n = 1; n < levels; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

std::string_view to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::Dephasing: return "dephasing";
    case ModelKind::DrivenDephasing: return "driven_dephasing";
    case ModelKind::Relaxation: return "relaxation";
    case ModelKind::DephasingRelaxation: return "dephasing_relaxation";
    case ModelKind::PauliChannel: return "pauli_channel";
    case ModelKind::MultiQubitDephasing: return "multi_qubit_dephasing";
    case ModelKind::HamiltonianOnly: return "hamiltonian_only";
    case ModelKind::JaynesCummings: return "jaynes_cummings";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name)
{
    for (ModelKind kind : {ModelKind::Dephasing, ModelKind::DrivenDephasing, ModelKind::Relaxation,
                           ModelKind::DephasingRelaxation, ModelKind::PauliChannel, ModelKind::MultiQubitDephasing,
                           ModelKind::HamiltonianOnly, ModelKind::JaynesCummings}) {
        if (to_string(kind) == name) return kind;
    }
    throw ConfigError("unknown model type '" + std::string(name) + "'");
}

std::vector<std::string> parameter_names(ModelKind kind)
{
    switch (kind) {
    case ModelKind::Dephasing: return {"gamma_z"};
    case ModelKind::DrivenDephasing: return {"gamma_z", "omega"};
    case ModelKind::Relaxation: return {"gamma_minus"};
    case ModelKind::DephasingRelaxation: return {"gamma_z", "gamma_minus"};
    case ModelKind::PauliChannel: return {"gamma_x", "gamma_y", "gamma_z"};
    case ModelKind::MultiQubitDephasing: return {"qubits"};
    case ModelKind::HamiltonianOnly: return {"hx", "hy", "hz"};
    case ModelKind::JaynesCummings: return {"omega_a", "omega_c", "g", "n_max"};
    }
    return {};
}

LindbladModel build(const ModelSpec& spec)
{
    require_known_keys(spec);
    const std::string_view kind = to_string(spec.kind);
    const Params& p = spec.params;
    switch (spec.kind) {
    case ModelKind::Dephasing: return dephasing(rate(p, "gamma_z", kind));
    case ModelKind::DrivenDephasing:
        return driven_dephasing(rate(p, "gamma_z", kind), required(p, "omega", kind));
    case ModelKind::Relaxation: return relaxation(rate(p, "gamma_minus", kind));
    case ModelKind::DephasingRelaxation:
        return dephasing_relaxation(rate(p, "gamma_z", kind), rate(p, "gamma_minus", kind));
    case ModelKind::PauliChannel:
        return pauli_channel(rate(p, "gamma_x", kind), rate(p, "gamma_y", kind), rate(p, "gamma_z", kind));
    case ModelKind::MultiQubitDephasing: {
        const std::size_t sites = count(required(p, "qubits", kind), "qubits", kind, 1);
        if (sites >= 63 || (std::size_t{1} << sites) > dimension_cap()) {
            throw ModelError("multi_qubit_dephasing: 2^" + std::to_string(sites) + " exceeds the dimension cap");
        }
        std::vector<double> gammas;
        for (std::size_t k = 1; k <= sites; ++k) gammas.push_back(rate(p, "gamma_" + std::to_string(k), kind));
        return multi_qubit_dephasing(gammas);
    }
    case ModelKind::HamiltonianOnly: {
        const ComplexMatrix h = optional(p, "hx", 0.0) * pauli(Axis::X) + optional(p, "hy", 0.0) * pauli(Axis::Y) +
                                optional(p, "hz", 0.0) * pauli(Axis::Z);
        return hamiltonian_only(h);
    }
    case ModelKind::JaynesCummings: {
        JaynesCummingsParams jc;
        jc.omega_a = optional(p, "omega_a", jc.omega_a);
        jc.omega_c = optional(p, "omega_c", jc.omega_c);
        jc.g = optional(p, "g", jc.g);
        jc.n_max = count(optional(p, "n_max", static_cast<double>(jc.n_max)), "n_max", kind, 1);
        return jaynes_cummings(jc);
    }
    }
    throw ConfigError("unsupported model kind");
}

LindbladModel dephasing(double gamma_z)
{
    return {zero2(), {root_rate(gamma_z, "gamma_z") * pauli(Axis::Z)}, "dephasing(gamma_z=" + format_param(gamma_z) + ")"};
}

LindbladModel driven_dephasing(double gamma_z, double omega)
{
    return {0.5 * omega * pauli(Axis::X),
            {root_rate(gamma_z, "gamma_z") * pauli(Axis::Z)},
            "driven_dephasing(gamma_z=" + format_param(gamma_z) + ", omega=" + format_param(omega) + ")"};
}

LindbladModel relaxation(double gamma_minus)
{
    return {zero2(), {root_rate(gamma_minus, "gamma_minus") * lowering()}, "relaxation(gamma_minus=" + format_param(gamma_minus) + ")"};
}

LindbladModel dephasing_relaxation(double gamma_z, double gamma_minus)
{
    return {zero2(),
            {root_rate(gamma_z, "gamma_z") * pauli(Axis::Z), root_rate(gamma_minus, "gamma_minus") * lowering()},
            "dephasing_relaxation(gamma_z=" + format_param(gamma_z) + ", gamma_minus=" + format_param(gamma_minus) +
                ")"};
}

LindbladModel pauli_channel(double gamma_x, double gamma_y, double gamma_z)
{
    return {zero2(),
            {root_rate(gamma_x, "gamma_x") * pauli(Axis::X), root_rate(gamma_y, "gamma_y") * pauli(Axis::Y),
             root_rate(gamma_z, "gamma_z") * pauli(Axis::Z)},
            "pauli_channel(" + format_param(gamma_x) + ", " + format_param(gamma_y) + ", " + format_param(gamma_z) +
                ")"};
}

LindbladModel multi_qubit_dephasing(std::span<const double> gammas)
{
    if (gammas.empty()) throw ConfigError("multi_qubit_dephasing: need at least one qubit");
    const std::size_t sites = gammas.size();
    std::vector<ComplexMatrix> jumps;
    std::string label = "multi_qubit_dephasing(";
    for (std::size_t k = 0; k < sites; ++k) {
        jumps.push_back(root_rate(gammas[k], "gamma_" + std::to_string(k + 1)) * tensor_site(pauli(Axis::Z), k, sites));
        label += (k ? ", " : "") + format_param(gammas[k]);
    }
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << sites);
    return {ComplexMatrix::Zero(d, d), std::move(jumps), label + ")"};
}

LindbladModel hamiltonian_only(const ComplexMatrix& hamiltonian)
{
    return {hamiltonian, {}, "hamiltonian_only"};
}

LindbladModel jaynes_cummings(const JaynesCummingsParams& params)
{
    if (params.n_max < 1) throw ConfigError("jaynes_cummings: n_max must be >= 1");
    const auto field_dim = static_cast<Eigen::Index>(params.n_max + 1);
    if (2 * params.n_max + 2 > dimension_cap()) {
        throw ModelError("jaynes_cummings: dimension " + std::to_string(2 * params.n_max + 2) +
                         " exceeds the dimension cap of " + std::to_string(dimension_cap()));
    }
    const ComplexMatrix a = annihilation(params.n_max);
    const ComplexMatrix field_id = ComplexMatrix::Identity(field_dim, field_dim);
    const ComplexMatrix atom_id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix h = params.omega_c * kron(atom_id, a.adjoint() * a) +
                            0.5 * params.omega_a * kron(pauli(Axis::Z), field_id) +
                            params.g * (kron(lowering(), a.adjoint()) + kron(raising(), a));
    return {h,
            {},
            "jaynes_cummings(omega_a=" + format_param(params.omega_a) + ", omega_c=" + format_param(params.omega_c) +
                ", g=" + format_param(params.g) + ", n_max=" + std::to_string(params.n_max) + ")"};
}

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t dim)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim)
{
    const ComplexMatrix m = random_matrix(rng, dim);
    return 0.5 * (m + m.adjoint());
}

ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim)
{
    const ComplexMatrix z = random_matrix(rng, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const Complex diag = r(k, k);
        if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
    }
    return q;
}

LindbladModel random_model(std::mt19937_64& rng, const RandomModelOptions& options)
{
    if (options.dims.empty() || options.min_jumps > options.max_jumps) {
        throw ConfigError("random_model: invalid options");
    }
    std::uniform_int_distribution<std::size_t> pick_dim(0, options.dims.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_jumps(options.min_jumps, options.max_jumps);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const std::size_t dim = options.dims[pick_dim(rng)];
    ComplexMatrix h = random_hermitian(rng, dim);
    const double h_norm = spectral_norm(h);
    if (h_norm > 0.0) h *= options.max_hamiltonian_norm * unit(rng) / h_norm;

    const std::size_t jump_count = pick_jumps(rng);
    std::vector<ComplexMatrix> jumps;
    for (std::size_t k = 0; k < jump_count; ++k) {
        const ComplexMatrix g = random_matrix(rng, dim);
        const double gamma = options.min_rate + (options.max_rate - options.min_rate) * unit(rng);
        jumps.push_back(std::sqrt(gamma) * g / g.norm());
    }
    return {h, std::move(jumps), "random(d=" + std::to_string(dim) + ", jumps=" + std::to_string(jump_count) + ")"};
}

} // namespace lindscope
