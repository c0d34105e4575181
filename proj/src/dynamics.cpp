// dynamics.cpp: Propagators, amplification series and derived bounds

#include "lindscope/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lindscope/errors.hpp"
#include "parallel.hpp"

namespace lindscope {

namespace {

// Superoperators at least this large are worth spreading over threads.
constexpr Eigen::Index kParallelMinSuperopDim = 16;
constexpr double kSubstepNormTarget = 0.5 * kExpNormLimit;

void require_time(double t, const char* what)
{
    if (!std::isfinite(t) || t < 0.0) {
        throw ConfigError(std::string(what) + ": time must be finite and nonnegative, got " + std::to_string(t));
    }
}

void require_series_range(double generator_norm, double t_end)
{
    if (t_end * generator_norm > kExpNormLimit * (1.0 + 1e-12)) {
        throw RangeError("t_end * ||L|| = " + std::to_string(t_end * generator_norm) + " exceeds " +
                         std::to_string(kExpNormLimit) + "; shorten the time grid");
    }
}

// e^{dt·L} as a product of equal substeps that each stay inside the exp range.
ComplexMatrix step_propagator(const Superoperator& s, double generator_norm, double dt)
{
    const auto substeps =
        static_cast<int>(std::max(1.0, std::ceil(dt * generator_norm / kSubstepNormTarget)));
    const ComplexMatrix step = matrix_exp((dt / substeps) * s.matrix);
    ComplexMatrix total = step;
    for (int i = 1; i < substeps; ++i) total = step * total;
    return total;
}

} // namespace

void TimeGrid::validate() const
{
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || t_start < 0.0 || t_end <= t_start) {
        throw ConfigError("time grid requires 0 <= t_start < t_end, got [" + std::to_string(t_start) + ", " +
                          std::to_string(t_end) + "]");
    }
    if (steps == 0 || steps > kMaxGridSteps) {
        throw ConfigError("time grid steps must be in [1, 1000000], got " + std::to_string(steps));
    }
}

std::vector<double> TimeGrid::times() const
{
    validate();
    std::vector<double> out(steps + 1);
    const double span = t_end - t_start;
    for (std::size_t k = 0; k <= steps; ++k) {
        out[k] = t_start + span * static_cast<double>(k) / static_cast<double>(steps);
    }
    out.back() = t_end;
    return out;
}

TimeGrid default_grid(const StructuralMetrics& m)
{
    const ZeroTolerances tol = zero_tolerances(m.generator_norm);
    if (m.delta > tol.zero) return {0.0, 5.0 / m.delta, kDefaultGridSteps};
    if (m.generator_norm > 0.0) return {0.0, 10.0 / m.generator_norm, kDefaultGridSteps};
    return {0.0, 10.0, kDefaultGridSteps};
}

TimeGrid default_grid(const Superoperator& s)
{
    return default_grid(compute_metrics(s));
}

double spectral_abscissa(const Superoperator& s)
{
    const std::vector<Complex> spectrum = eigenvalues_general(s.matrix);
    double alpha = -std::numeric_limits<double>::infinity();
    for (const Complex& value : spectrum) alpha = std::max(alpha, value.real());
    return alpha;
}

Superoperator propagator(const Superoperator& s, double t)
{
    require_time(t, "propagator");
    return {s.dim, matrix_exp(t * s.matrix)};
}

double propagator_norm(const Superoperator& s, double t)
{
    return spectral_norm(propagator(s, t).matrix);
}

AmplificationSeries amplification_series(const Superoperator& s, const TimeGrid& grid)
{
    grid.validate();
    const StructuralMetrics m = compute_metrics(s);
    require_series_range(m.generator_norm, grid.t_end);

    AmplificationSeries out;
    out.delta = m.delta;
    out.nd_norm = m.nd_norm;
    out.eta = m.eta;
    out.alpha = spectral_abscissa(s);
    out.times = grid.times();

    const std::size_t n = out.times.size();
    out.prop_norm.resize(n);
    detail::parallel_for(
        n, [&](std::size_t k) { out.prop_norm[k] = propagator_norm(s, out.times[k]); },
        s.matrix.rows() >= kParallelMinSuperopDim);

    out.a_paper.resize(n);
    out.a_spectral.resize(n);
    out.gronwall_env.resize(n);
    out.appg_env.resize(n);
    out.appg_satisfied.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = out.times[k];
        out.a_paper[k] = out.prop_norm[k] * std::exp(-t * m.delta);
        out.a_spectral[k] = out.prop_norm[k] * std::exp(-t * out.alpha);
        out.gronwall_env[k] = std::exp(t * m.delta);
        out.appg_env[k] = std::exp(t * m.delta) * std::exp(t * m.nd_norm + 0.25 * t * t * m.eta);
        out.appg_satisfied[k] = out.prop_norm[k] <= out.appg_env[k] * (1.0 + 1e-9);
    }
    return out;
}

std::vector<double> gronwall_margins(const Superoperator& s, const ComplexMatrix& rho0, const TimeGrid& grid)
{
    const std::vector<double> times = grid.times();
    const double delta = dissipative_strength(s);
    const double generator_norm = spectral_norm(s.matrix);
    const double norm0 = hs_norm(rho0);
    if (norm0 == 0.0) {
        throw ConfigError("gronwall_check: initial operator must be nonzero");
    }

    ComplexVector state = vectorize(rho0);
    if (times.front() > 0.0) state = step_propagator(s, generator_norm, times.front()) * state;

    std::vector<double> margins(times.size());
    margins[0] = std::exp(times[0] * delta) * norm0 - state.norm();
    if (times.size() > 1) {
        const ComplexMatrix step = step_propagator(s, generator_norm, times[1] - times[0]);
        for (std::size_t k = 1; k < times.size(); ++k) {
            state = step * state;
            margins[k] = std::exp(times[k] * delta) * norm0 - state.norm();
        }
    }
    return margins;
}

double gronwall_check(const Superoperator& s, const ComplexMatrix& rho0, const TimeGrid& grid)
{
    const std::vector<double> margins = gronwall_margins(s, rho0, grid);
    return *std::min_element(margins.begin(), margins.end());
}

double normal_factorization_residual(const Superoperator& s, double t)
{
    require_time(t, "normal_factorization_residual");
    const Decomposition parts = decompose(s);
    const ComplexMatrix full = matrix_exp(t * s.matrix);
    const ComplexMatrix dissipative = matrix_exp(t * parts.dissipative.matrix, MatrixStructure::Hermitian);
    const ComplexMatrix rotation = matrix_exp(t * parts.nondissipative.matrix);
    return spectral_norm(full - dissipative * rotation);
}

double error_amplification(const Superoperator& s, double t, double eps)
{
    if (!std::isfinite(eps) || eps < 0.0) {
        throw ConfigError("error_amplification: eps must be finite and nonnegative");
    }
    return eps * propagator_norm(s, t);
}

AppGBound truncated_appg_bound(const Superoperator& s, double t)
{
    require_time(t, "truncated_appg_bound");
    const StructuralMetrics m = compute_metrics(s);
    AppGBound out;
    out.prop_norm = propagator_norm(s, t);
    out.bound = std::exp(t * m.delta) * std::exp(t * m.nd_norm + 0.25 * t * t * m.eta);
    out.satisfied = out.prop_norm <= out.bound * (1.0 + 1e-9);
    return out;
}

CostEstimate cost_estimate(const Superoperator& s, double t, double eps_star, const RegimeThresholds& thresholds)
{
    require_time(t, "cost_estimate");
    if (!(eps_star > 0.0 && eps_star < 1.0)) {
        throw ConfigError("cost_estimate: eps_star must lie in (0, 1), got " + std::to_string(eps_star));
    }
    const StructuralMetrics m = compute_metrics(s, thresholds);
    const bool dissipative = m.delta > zero_tolerances(m.generator_norm).zero;
    const double rate = dissipative ? m.delta : 0.5 * m.generator_norm;

    CostEstimate out;
    out.base_cost = t * rate + std::log(1.0 / eps_star);
    switch (m.regime) {
    case Regime::StronglyNonnormal: out.kappa_overhead = m.kappa.value_or(0.0); break;
    case Regime::Crossover: out.kappa_overhead = 1.0; break;
    default: out.kappa_overhead = 0.0; break;
    }
    return out;
}

} // namespace lindscope
