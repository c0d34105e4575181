// test_dynamics.cpp: Propagators, amplification series, envelopes and cost estimates

#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "lindscope/dynamics.hpp"
#include "lindscope/errors.hpp"
#include "lindscope/models.hpp"
#include "oracles/oracles.hpp"

using namespace lindscope;

namespace {

// Reference values from tests/oracles/derive_values.py.
constexpr double kDephRelaxMaxSpectral = 1.3249632395746269;
constexpr double kDephRelaxPropNormT1 = 1.2004139517751291;
constexpr double kDephRelaxAppGT1 = 28.604195148799072;
constexpr double kDrivenResidualT1 = 0.51347414409313874;

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

std::vector<LindbladModel> shipped_models()
{
    const double gammas[] = {0.1, 0.2, 0.3};
    return {dephasing(1.0),
            driven_dephasing(1.0, 0.01),
            relaxation(1.0),
            dephasing_relaxation(1.0, 1.0),
            pauli_channel(1.0, 2.0, 3.0),
            multi_qubit_dephasing(gammas),
            hamiltonian_only(pauli(Axis::Z)),
            jaynes_cummings({})};
}

} // namespace

TEST_CASE("time grid validation and layout")
{
    const TimeGrid grid{0.0, 2.0, 4};
    const std::vector<double> t = grid.times();
    REQUIRE(t.size() == 5);
    CHECK(t[0] == 0.0);
    CHECK(t[2] == 1.0);
    CHECK(t[4] == 2.0);
    CHECK_THROWS_AS((TimeGrid{1.0, 1.0, 4}.validate()), ConfigError);
    CHECK_THROWS_AS((TimeGrid{-1.0, 1.0, 4}.validate()), ConfigError);
    CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 0}.validate()), ConfigError);
    CHECK_THROWS_AS((TimeGrid{0.0, 1.0, kMaxGridSteps + 1}.validate()), ConfigError);
}

TEST_CASE("default grid follows the dissipative time scale")
{
    const TimeGrid deph = default_grid(liouvillian(dephasing(1.0)));
    CHECK(deph.t_end == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(deph.steps == 200);
    const TimeGrid ham = default_grid(liouvillian(hamiltonian_only(pauli(Axis::Z))));
    CHECK(ham.t_end == doctest::Approx(5.0).epsilon(1e-12)); // 10/‖L_H‖ with ‖L_H‖ = 2
    CHECK(default_grid(Superoperator::zero(2)).t_end == 10.0);
    CHECK(default_grid(liouvillian(dephasing_relaxation(1.0, 1.0))).t_end == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("propagator examples")
{
    std::mt19937_64 rng(41);
    const Superoperator s = liouvillian(random_model(rng));
    CHECK(max_abs(propagator(s, 0.0).matrix - ComplexMatrix::Identity(s.matrix.rows(), s.matrix.rows())) ==
          0.0);

    const Superoperator lh = liouvillian(hamiltonian_only(random_hermitian(rng, 3)));
    for (double t : {0.3, 1.0, 4.0}) {
        CHECK(std::abs(propagator_norm(lh, t) - 1.0) < 1e-12);
        const ComplexMatrix rho = random_matrix(rng, 3);
        CHECK(std::abs(hs_norm(lindscope::apply(propagator(lh, t), rho)) - hs_norm(rho)) < 1e-12 * hs_norm(rho));
    }

    const double gamma = 0.6;
    const Superoperator lz = liouvillian(dephasing(gamma));
    for (double t : {0.1, 1.0, 3.0}) {
        const ComplexMatrix out = lindscope::apply(propagator(lz, t), pauli(Axis::X));
        CHECK(max_abs(out - std::exp(-2.0 * gamma * t) * pauli(Axis::X)) < 1e-14);
    }
    CHECK_THROWS_AS(propagator(lz, -1.0), ConfigError);
    CHECK_THROWS_AS(propagator(lz, 100.0), RangeError);
}

TEST_CASE("propagator matches the Taylor oracle")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const Superoperator s = liouvillian(random_model(rng));
        const double t = 0.5 + trial * 0.2;
        const ComplexMatrix want = oracle::taylor_expm(t * s.matrix);
        CHECK(oracle::spectral_norm(propagator(s, t).matrix - want) <= 1e-10 * oracle::spectral_norm(want));
    }
}

TEST_CASE("semigroup property")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const Superoperator s = liouvillian(random_model(rng));
        const double norm = spectral_norm(s.matrix);
        const double t = unit(rng) * 6.0 / norm;
        const double u = unit(rng) * 4.0 / norm;
        const ComplexMatrix lhs = propagator(s, t + u).matrix;
        const ComplexMatrix rhs = propagator(s, t).matrix * propagator(s, u).matrix;
        CHECK(spectral_norm(lhs - rhs) <= 1e-8);
    }
}

TEST_CASE("adjoint propagator fixes the identity")
{
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const LindbladModel model = random_model(rng);
        const Superoperator s = liouvillian(model);
        const ComplexMatrix id = identity(static_cast<Eigen::Index>(model.dim()));
        CHECK(max_abs(lindscope::apply(propagator(adjoint(s), 1.5), id) - id) < 1e-10);
    }
}

TEST_CASE("amplification series: pure dephasing")
{
    const AmplificationSeries series = amplification_series(liouvillian(dephasing(1.0)), TimeGrid{0.0, 2.0, 200});
    REQUIRE(series.times.size() == 201);
    CHECK(series.prop_norm.size() == 201);
    CHECK(series.appg_satisfied.size() == 201);
    CHECK(series.alpha == doctest::Approx(0.0).epsilon(1e-14));
    for (std::size_t k = 0; k < series.times.size(); ++k) {
        const double t = series.times[k];
        CHECK(std::abs(series.prop_norm[k] - 1.0) < 1e-12);
        CHECK(std::abs(series.a_spectral[k] - 1.0) < 1e-12);
        CHECK(std::abs(series.a_paper[k] - std::exp(-2.0 * t)) < 1e-12);
        CHECK(std::abs(series.gronwall_env[k] - std::exp(2.0 * t)) <= 1e-14 * std::exp(2.0 * t));
        CHECK(series.appg_satisfied[k]);
    }
}

TEST_CASE("amplification series: Hamiltonian evolution")
{
    std::mt19937_64 rng(45);
    const Superoperator s = liouvillian(hamiltonian_only(random_hermitian(rng, 3)));
    const AmplificationSeries series = amplification_series(s, default_grid(s));
    for (std::size_t k = 0; k < series.times.size(); ++k) {
        CHECK(std::abs(series.prop_norm[k] - 1.0) < 1e-10);
        CHECK(std::abs(series.a_paper[k] - 1.0) < 1e-10);
        CHECK(series.gronwall_env[k] == 1.0);
        CHECK(series.appg_satisfied[k]);
    }
}

TEST_CASE("amplification series: dephasing plus relaxation shows transient growth")
{
    const Superoperator s = liouvillian(dephasing_relaxation(1.0, 1.0));
    const AmplificationSeries series = amplification_series(s, default_grid(s));
    CHECK(series.prop_norm.front() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_of(series.a_spectral) > 1.0);
    CHECK(std::abs(max_of(series.a_spectral) - kDephRelaxMaxSpectral) < 1e-9);
    CHECK(std::abs(series.alpha) < 1e-12);

    const AppGBound at1 = truncated_appg_bound(s, 1.0);
    CHECK(std::abs(at1.prop_norm - kDephRelaxPropNormT1) < 1e-10);
    CHECK(std::abs(at1.bound - kDephRelaxAppGT1) < 1e-9 * kDephRelaxAppGT1);
    CHECK(at1.satisfied);
}

TEST_CASE("amplification series runs identically with and without threads")
{
    const Superoperator s = liouvillian(jaynes_cummings({}));
    const TimeGrid grid = default_grid(s);
    const AmplificationSeries series = amplification_series(s, grid);
    const std::vector<double> times = grid.times();
    for (std::size_t k = 0; k < times.size(); k += 17) CHECK(series.prop_norm[k] == propagator_norm(s, times[k]));
}

TEST_CASE("amplification series range check")
{
    const Superoperator s = liouvillian(dephasing(1.0));
    CHECK_THROWS_AS(amplification_series(s, TimeGrid{0.0, 30.0, 10}), RangeError);
    CHECK_NOTHROW(amplification_series(s, TimeGrid{0.0, 25.0, 10}));
}

TEST_CASE("normal generators have unit spectral amplification")
{
    for (const LindbladModel& model : shipped_models()) {
        const Superoperator s = liouvillian(model);
        const StructuralMetrics m = compute_metrics(s);
        if (m.eta > zero_tolerances(m.generator_norm).eta) continue;
        const AmplificationSeries series = amplification_series(s, default_grid(m));
        for (double a : series.a_spectral) CHECK(std::abs(a - 1.0) < 1e-8);
    }
}

TEST_CASE("halving the grid spacing barely moves the peak amplification")
{
    for (const LindbladModel& model : shipped_models()) {
        const Superoperator s = liouvillian(model);
        TimeGrid grid = default_grid(s);
        const double coarse = max_of(amplification_series(s, grid).a_spectral);
        grid.steps *= 2;
        const double fine = max_of(amplification_series(s, grid).a_spectral);
        CHECK(std::abs(fine - coarse) <= 0.01 * coarse);
    }
}

TEST_CASE("Gronwall envelope")
{
    std::mt19937_64 rng(46);
    const Superoperator lh = liouvillian(hamiltonian_only(random_hermitian(rng, 2)));
    const ComplexMatrix rho = random_hermitian(rng, 2);
    CHECK(std::abs(gronwall_check(lh, rho, default_grid(lh))) < 1e-12);

    const Superoperator lz = liouvillian(dephasing(1.0));
    const std::vector<double> margins = gronwall_margins(lz, pauli(Axis::X) / std::sqrt(2.0), TimeGrid{0.0, 2.0, 20});
    CHECK(margins.front() == doctest::Approx(0.0));
    for (std::size_t k = 1; k < margins.size(); ++k) CHECK(margins[k] > margins[k - 1]);
    // closed form: e^{2t} − e^{−2t}
    CHECK(margins.back() == doctest::Approx(std::exp(4.0) - std::exp(-4.0)).epsilon(1e-12));

    CHECK_THROWS_AS(gronwall_check(lz, ComplexMatrix::Zero(2, 2), TimeGrid{0.0, 1.0, 4}), ConfigError);

    for (int trial = 0; trial < 50; ++trial) {
        const Superoperator s = liouvillian(random_model(rng));
        ComplexMatrix rho0 = random_hermitian(rng, s.dim);
        rho0 /= hs_norm(rho0);
        const TimeGrid grid = default_grid(s);
        const std::vector<double> m = gronwall_margins(s, rho0, grid);
        const std::vector<double> t = grid.times();
        const double delta = dissipative_strength(s);
        for (std::size_t k = 0; k < m.size(); ++k) CHECK(m[k] >= -1e-9 * std::exp(t[k] * delta));
    }
}

TEST_CASE("Gronwall stepping does not need the exponential range")
{
    const Superoperator lz = liouvillian(dephasing(1.0));
    CHECK(gronwall_check(lz, pauli(Axis::X), TimeGrid{0.0, 200.0, 4}) >= 0.0);
}

TEST_CASE("normal factorization residual")
{
    const Superoperator rotating = liouvillian(LindbladModel(0.25 * pauli(Axis::Z), {pauli(Axis::Z)}));
    const Decomposition parts = decompose(rotating);
    REQUIRE(max_abs(commutator(parts.dissipative.matrix, parts.nondissipative.matrix)) < 1e-14);
    for (double t : {0.5, 1.0, 2.0}) CHECK(normal_factorization_residual(rotating, t) <= 1e-8);

    std::mt19937_64 rng(47);
    CHECK(normal_factorization_residual(liouvillian(hamiltonian_only(random_hermitian(rng, 3))), 1.0) < 1e-13);

    const double driven = normal_factorization_residual(liouvillian(driven_dephasing(1.0, 1.0)), 1.0);
    CHECK(driven > 1e-3);
    CHECK(std::abs(driven - kDrivenResidualT1) < 1e-10);
}

TEST_CASE("error amplification")
{
    std::mt19937_64 rng(48);
    const Superoperator lh = liouvillian(hamiltonian_only(random_hermitian(rng, 2)));
    CHECK(error_amplification(lh, 2.0, 1e-3) == doctest::Approx(1e-3).epsilon(1e-10));
    const Superoperator lz = liouvillian(dephasing(1.0));
    CHECK(error_amplification(lz, 1.0, 1e-3) == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(error_amplification(lz, 1.0, 0.0) == 0.0);
    const Superoperator dr = liouvillian(dephasing_relaxation(1.0, 1.0));
    CHECK(error_amplification(dr, 1.0, 1e-4) < error_amplification(dr, 1.0, 2e-4));
    CHECK(error_amplification(dr, 1.0, 1.0) == doctest::Approx(kDephRelaxPropNormT1).epsilon(1e-10));
    CHECK_THROWS_AS(error_amplification(lz, 1.0, -1.0), ConfigError);
}

TEST_CASE("truncated envelope on simple generators")
{
    const AppGBound normal = truncated_appg_bound(liouvillian(pauli_channel(1.0, 2.0, 3.0)), 0.3);
    CHECK(normal.satisfied);
    CHECK(normal.bound >= std::exp(0.3 * 10.0) * (1.0 - 1e-12));
    const AppGBound ham = truncated_appg_bound(liouvillian(hamiltonian_only(pauli(Axis::Z))), 0.7);
    CHECK(ham.satisfied);
    CHECK(ham.bound == doctest::Approx(std::exp(0.7 * 2.0)).epsilon(1e-12));
}

TEST_CASE("cost estimate")
{
    const CostEstimate ham = cost_estimate(liouvillian(hamiltonian_only(pauli(Axis::Z))), 10.0, 1e-6);
    CHECK(ham.base_cost == doctest::Approx(10.0 + std::log(1e6)).epsilon(1e-12));
    CHECK(ham.base_cost == doctest::Approx(23.8155).epsilon(1e-5));
    CHECK(ham.kappa_overhead == 0.0);

    const CostEstimate deph = cost_estimate(liouvillian(dephasing(1.0)), 5.0, 1e-3);
    CHECK(deph.base_cost == doctest::Approx(10.0 + std::log(1e3)).epsilon(1e-12));
    CHECK(deph.base_cost == doctest::Approx(16.9078).epsilon(1e-5));
    CHECK(deph.kappa_overhead == 0.0);

    const CostEstimate crossover = cost_estimate(liouvillian(dephasing_relaxation(1.0, 1.0)), 1.0, 0.1);
    CHECK(crossover.kappa_overhead == 1.0);

    const Superoperator strong =
        liouvillian(LindbladModel(0.5 * pauli(Axis::X), {0.1 * lowering()}, "driven relaxation"));
    const CostEstimate sn = cost_estimate(strong, 1.0, 0.1);
    REQUIRE(compute_metrics(strong).regime == Regime::StronglyNonnormal);
    CHECK(sn.kappa_overhead == doctest::Approx(*kappa(strong)).epsilon(1e-14));

    const Superoperator lz = liouvillian(dephasing(1.0));
    CHECK_THROWS_AS(cost_estimate(lz, 1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(cost_estimate(lz, 1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(cost_estimate(lz, -1.0, 0.5), ConfigError);
}
