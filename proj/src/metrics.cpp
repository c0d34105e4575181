// metrics.cpp: Structural metrics of a Lindbladian in the Hilbert-Schmidt geometry

#include "lindscope/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lindscope/errors.hpp"

namespace lindscope {

namespace {

constexpr double kRelativeZero = 1e-10;
constexpr double kStructuredTolerance = 1e-10;

double commutator_norm_checked(const ComplexMatrix& m, const Decomposition& parts)
{
    const double eta = spectral_norm(commutator(m, m.adjoint()));
    const double via_parts =
        2.0 * spectral_norm(commutator(parts.dissipative.matrix, parts.nondissipative.matrix));
    const double scale = std::max(eta, spectral_norm_bound(m) * spectral_norm_bound(m));
    if (std::abs(eta - via_parts) > 1e-9 * scale + std::numeric_limits<double>::min()) {
        throw NumericalError("nonnormality: ||[L, L^dag]|| = " + std::to_string(eta) +
                             " disagrees with 2||[L_d, L_nd]|| = " + std::to_string(via_parts));
    }
    return eta;
}

// Pairs each expected value with its nearest unused actual value.
double max_matching_error(const std::vector<Complex>& expected, std::vector<Complex> actual)
{
    double worst = 0.0;
    for (const Complex& value : expected) {
        auto best = actual.begin();
        double best_dist = std::numeric_limits<double>::infinity();
        for (auto it = actual.begin(); it != actual.end(); ++it) {
            const double dist = std::abs(*it - value);
            if (dist < best_dist) {
                best_dist = dist;
                best = it;
            }
        }
        worst = std::max(worst, best_dist);
        actual.erase(best);
    }
    return worst;
}

} // namespace

std::string_view to_string(Regime regime)
{
    switch (regime) {
    case Regime::Hamiltonian: return "Hamiltonian";
    case Regime::NormalDissipative: return "NormalDissipative";
    case Regime::WeaklyNonnormal: return "WeaklyNonnormal";
    case Regime::Crossover: return "Crossover";
    case Regime::StronglyNonnormal: return "StronglyNonnormal";
    }
    return "unknown";
}

void RegimeThresholds::validate() const
{
    if (!std::isfinite(kappa_lo) || !std::isfinite(kappa_hi) || kappa_lo <= 0.0 || kappa_hi < kappa_lo) {
        throw ConfigError("regime thresholds require 0 < kappa_lo <= kappa_hi, got kappa_lo=" +
                          std::to_string(kappa_lo) + " kappa_hi=" + std::to_string(kappa_hi));
    }
}

ZeroTolerances zero_tolerances(double generator_norm)
{
    return {kRelativeZero * generator_norm, kRelativeZero * generator_norm * generator_norm};
}

double dissipative_strength(const Superoperator& s)
{
    return spectral_norm(decompose(s).dissipative.matrix);
}

double nonnormality(const Superoperator& s)
{
    return commutator_norm_checked(s.matrix, decompose(s));
}

std::optional<double> kappa(const Superoperator& s)
{
    return compute_metrics(s).kappa;
}

double bound_check(const Superoperator& s)
{
    return compute_metrics(s).bound_margin;
}

Regime classify(const StructuralMetrics& m, const RegimeThresholds& thresholds)
{
    thresholds.validate();
    const ZeroTolerances tol = zero_tolerances(m.generator_norm);
    if (m.delta <= tol.zero) return Regime::Hamiltonian;
    if (m.eta <= tol.eta) return Regime::NormalDissipative;
    const double k = m.kappa.value_or(m.eta / (m.delta * m.delta));
    if (k < thresholds.kappa_lo) return Regime::WeaklyNonnormal;
    if (k > thresholds.kappa_hi) return Regime::StronglyNonnormal;
    return Regime::Crossover;
}

StructuralMetrics compute_metrics(const Superoperator& s, const RegimeThresholds& thresholds)
{
    const Decomposition parts = decompose(s);
    StructuralMetrics m;
    m.generator_norm = spectral_norm(s.matrix);
    m.delta = spectral_norm(parts.dissipative.matrix);
    m.nd_norm = spectral_norm(parts.nondissipative.matrix);
    m.eta = commutator_norm_checked(s.matrix, parts);
    if (m.delta > zero_tolerances(m.generator_norm).zero) {
        m.kappa = m.eta / (m.delta * m.delta);
    }
    m.bound_margin = 2.0 * m.delta * m.nd_norm - m.eta;
    m.regime = classify(m, thresholds);
    return m;
}

StructuredDissipatorReport structured_dissipator_report(const LindbladModel& model)
{
    const auto d = static_cast<Eigen::Index>(model.dim());
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    ComplexMatrix jump_map = ComplexMatrix::Zero(d * d, d * d);
    for (const ComplexMatrix& jump : model.jumps()) {
        sum += jump.adjoint() * jump;
        jump_map += kron(jump.conjugate(), jump);
    }

    StructuredDissipatorReport report;
    const double gamma = sum.trace().real() / static_cast<double>(d);
    const double deviation = spectral_norm(sum - gamma * identity(d));
    if (deviation > kStructuredTolerance * std::max(1.0, spectral_norm(sum))) {
        return report;
    }

    report.is_structured = true;
    report.gamma = gamma;
    report.jump_map_spectrum = eigenvalues_general(jump_map);

    std::vector<Complex> shifted = report.jump_map_spectrum;
    for (Complex& value : shifted) value -= gamma;
    const std::vector<Complex> generator_spectrum = eigenvalues_general(liouvillian(model).matrix);
    report.max_shift_error = max_matching_error(shifted, generator_spectrum);
    report.shift_verified = report.max_shift_error <= 1e-8 * (1.0 + spectral_norm(jump_map) + gamma);
    return report;
}

} // namespace lindscope
