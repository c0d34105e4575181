// models.hpp: Builders for the qubit and cavity models analyzed by lindscope
//
// Conventions: σ_z = diag(1, −1); σ_± = (σ_x ± iσ_y)/2, so σ_- = [[0,0],[1,0]]
// lowers the σ_z = +1 state. Multi-qubit site 0 is the leftmost tensor factor.
// Jaynes-Cummings uses the (atom ⊗ field) ordering with a hard Fock cutoff.

#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lindscope/superop.hpp"

namespace lindscope {

enum class Axis { X, Y, Z };

ComplexMatrix pauli(Axis axis);
ComplexMatrix lowering();
ComplexMatrix raising();

// I⊗…⊗op⊗…⊗I over `sites` qubits with `op` (2×2) at position `site`.
// Throws ModelError when 2^sites exceeds dimension_cap().
ComplexMatrix tensor_site(const ComplexMatrix& op, std::size_t site, std::size_t sites);

// Truncated bosonic annihilation operator on Fock levels 0..n_max.
ComplexMatrix annihilation(std::size_t n_max);

enum class ModelKind {
    Dephasing,
    DrivenDephasing,
    Relaxation,
    DephasingRelaxation,
    PauliChannel,
    MultiQubitDephasing,
    HamiltonianOnly,
    JaynesCummings,
};

std::string_view to_string(ModelKind kind);

// Throws ConfigError for an unknown name.
ModelKind parse_model_kind(std::string_view name);

// Parameter keys accepted by `kind`. MultiQubitDephasing additionally accepts
// gamma_1..gamma_K where K is the "qubits" parameter.
std::vector<std::string> parameter_names(ModelKind kind);

struct ModelSpec {
    ModelKind kind = ModelKind::Dephasing;
    std::map<std::string, double> params;
};

// Builds the model for `spec`. Missing, unknown, negative-rate or non-integer
// count parameters raise ConfigError; an oversized Hilbert space raises ModelError.
LindbladModel build(const ModelSpec& spec);

LindbladModel dephasing(double gamma_z);
LindbladModel driven_dephasing(double gamma_z, double omega);
LindbladModel relaxation(double gamma_minus);
LindbladModel dephasing_relaxation(double gamma_z, double gamma_minus);
LindbladModel pauli_channel(double gamma_x, double gamma_y, double gamma_z);
LindbladModel multi_qubit_dephasing(std::span<const double> gammas);
LindbladModel hamiltonian_only(const ComplexMatrix& hamiltonian);

struct JaynesCummingsParams {
    double omega_a = 1.0;
    double omega_c = 1.0;
    double g = 0.1;
    std::size_t n_max = 3;
};

// H = ω_c a†a + (ω_a/2)σ_z + g(a†σ_- + aσ_+) on dimension 2(n_max + 1).
LindbladModel jaynes_cummings(const JaynesCummingsParams& params);

struct RandomModelOptions {
    std::vector<std::size_t> dims{2, 3, 4};
    std::size_t min_jumps = 0;
    std::size_t max_jumps = 3;
    double max_hamiltonian_norm = 1.0;
    double min_rate = 0.1;
    double max_rate = 1.0;
};

// Random Hermitian H (spectral norm uniform in [0, max_hamiltonian_norm]) and
// jump operators with unit HS norm scaled by √rate.
LindbladModel random_model(std::mt19937_64& rng, const RandomModelOptions& options = {});

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t dim);
ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim);

// Haar-random unitary via QR of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim);

} // namespace lindscope
