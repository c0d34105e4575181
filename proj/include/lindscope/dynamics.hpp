// dynamics.hpp: Propagator norms, amplification factors and error/cost estimates
//
// Every routine that exponentiates t·L requires t·‖L‖ ≤ kExpNormLimit and
// throws RangeError otherwise, except gronwall_check which subdivides.

#pragma once

#include <cstddef>
#include <vector>

#include "lindscope/metrics.hpp"
#include "lindscope/superop.hpp"

namespace lindscope {

inline constexpr std::size_t kMaxGridSteps = 1'000'000;
inline constexpr std::size_t kDefaultGridSteps = 200;

// Uniform grid t_k = t_start + k·(t_end − t_start)/steps, k = 0..steps.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 1.0;
    std::size_t steps = kDefaultGridSteps;

    // Throws ConfigError on t_start < 0, t_end ≤ t_start or steps outside [1, 10⁶].
    void validate() const;
    std::vector<double> times() const;
};

// 201 points on [0, 5/δ] when δ > τ_zero, otherwise [0, 10/‖L‖] (or [0, 10] for L = 0).
TimeGrid default_grid(const Superoperator& s);
TimeGrid default_grid(const StructuralMetrics& m);

struct AmplificationSeries {
    std::vector<double> times;
    std::vector<double> prop_norm;     // ‖e^{tL}‖
    std::vector<double> a_paper;       // ‖e^{tL}‖·e^{−tδ}
    std::vector<double> a_spectral;    // ‖e^{tL}‖·e^{−tα}
    std::vector<double> gronwall_env;  // e^{tδ}
    std::vector<double> appg_env;      // e^{tδ}·exp(t‖L_nd‖ + t²η/4)
    std::vector<bool> appg_satisfied;  // prop_norm ≤ appg_env·(1 + 1e-9)

    double delta = 0.0;
    double alpha = 0.0; // spectral abscissa
    double nd_norm = 0.0;
    double eta = 0.0;
};

// Largest real part over the spectrum of L.
double spectral_abscissa(const Superoperator& s);

Superoperator propagator(const Superoperator& s, double t);

double propagator_norm(const Superoperator& s, double t);

// Grid points are evaluated concurrently; results are identical to a sequential run.
AmplificationSeries amplification_series(const Superoperator& s, const TimeGrid& grid);

// e^{tδ}‖ρ(0)‖ − ‖ρ(t)‖ at every grid point.
std::vector<double> gronwall_margins(const Superoperator& s, const ComplexMatrix& rho0, const TimeGrid& grid);

// Minimum of gronwall_margins over the grid.
double gronwall_check(const Superoperator& s, const ComplexMatrix& rho0, const TimeGrid& grid);

// ‖e^{tL} − e^{tL_d}e^{tL_nd}‖; vanishes for normal generators.
double normal_factorization_residual(const Superoperator& s, double t);

// ε·‖e^{tL}‖, the computable bound on the state error from a propagator error ε.
double error_amplification(const Superoperator& s, double t, double eps);

struct AppGBound {
    double bound = 0.0;
    double prop_norm = 0.0;
    bool satisfied = false;
};

// Truncated interaction-picture envelope e^{tδ}·exp(t‖L_nd‖ + t²η/4). Diagnostic
// only: the series behind it is truncated, so `satisfied` is reported, not enforced.
AppGBound truncated_appg_bound(const Superoperator& s, double t);

struct CostEstimate {
    double base_cost = 0.0;
    double kappa_overhead = 0.0;
};

// Unit-constant cost heuristic: t·rate + ln(1/ε*), where rate is δ, or ‖L‖/2
// for δ ≈ 0. The κ overhead is κ when strongly nonnormal, 1 in the crossover
// regime and 0 otherwise. Throws ConfigError unless 0 < ε* < 1.
CostEstimate cost_estimate(const Superoperator& s, double t, double eps_star,
                           const RegimeThresholds& thresholds = {});

} // namespace lindscope
