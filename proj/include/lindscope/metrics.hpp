// metrics.hpp: Dissipative strength, nonnormality, κ and regime classification

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lindscope/superop.hpp"

namespace lindscope {

enum class Regime { Hamiltonian, NormalDissipative, WeaklyNonnormal, Crossover, StronglyNonnormal };

std::string_view to_string(Regime regime);

// κ band edges: WeaklyNonnormal below kappa_lo, StronglyNonnormal above kappa_hi.
struct RegimeThresholds {
    double kappa_lo = 0.1;
    double kappa_hi = 10.0;

    // Throws ConfigError unless 0 < kappa_lo ≤ kappa_hi and both finite.
    void validate() const;
};

// Zero tests relative to the generator norm ‖S‖.
struct ZeroTolerances {
    double zero; // τ_zero = 1e-10·‖S‖, applied to δ
    double eta;  // τ_eta = 1e-10·‖S‖², applied to η
};

ZeroTolerances zero_tolerances(double generator_norm);

struct StructuralMetrics {
    double delta = 0.0;          // ‖L_d‖
    double eta = 0.0;            // ‖[L, L†]‖
    double nd_norm = 0.0;        // ‖L_nd‖
    std::optional<double> kappa; // η/δ², empty when δ ≤ τ_zero
    double bound_margin = 0.0;   // 2δ‖L_nd‖ − η, signed
    double generator_norm = 0.0; // ‖L‖
    Regime regime = Regime::Hamiltonian;
};

double dissipative_strength(const Superoperator& s);

// Also checks ‖[L, L†]‖ against 2‖[L_d, L_nd]‖ and throws NumericalError on disagreement.
double nonnormality(const Superoperator& s);

std::optional<double> kappa(const Superoperator& s);

double bound_check(const Superoperator& s);

Regime classify(const StructuralMetrics& m, const RegimeThresholds& thresholds = {});

// All metrics from a single decomposition, classified with `thresholds`.
StructuralMetrics compute_metrics(const Superoperator& s, const RegimeThresholds& thresholds = {});

struct StructuredDissipatorReport {
    bool is_structured = false;
    double gamma = 0.0;                    // Γ in Σ L_j†L_j = Γ·I
    std::vector<Complex> jump_map_spectrum; // spectrum {Λ_β} of J(ρ) = Σ L_j ρ L_j†
    bool shift_verified = false;           // λ_β = Λ_β − Γ matched against the Liouvillian
    double max_shift_error = 0.0;
};

StructuredDissipatorReport structured_dissipator_report(const LindbladModel& model);

} // namespace lindscope
