// test_linalg.cpp: Norms, eigenvalues, exponentials and the small algebra helpers

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "lindscope/errors.hpp"
#include "lindscope/linalg.hpp"
#include "lindscope/models.hpp"
#include "oracles/oracles.hpp"

using namespace lindscope;

namespace {

const Complex I_UNIT(0.0, 1.0);

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix random_scaled(std::mt19937_64& rng, std::size_t dim, double norm)
{
    ComplexMatrix m = random_matrix(rng, dim);
    return m * (norm / oracle::spectral_norm(m));
}

} // namespace

TEST_CASE("identity, dagger and Hilbert-Schmidt inner product")
{
    CHECK(identity(3) == ComplexMatrix::Identity(3, 3));
    const ComplexMatrix y = pauli(Axis::Y);
    CHECK(dagger(y) == y);
    CHECK(hs_inner(pauli(Axis::X), pauli(Axis::X)) == Complex(2.0, 0.0));
    CHECK(std::abs(hs_inner(pauli(Axis::X), pauli(Axis::Y))) == 0.0);

    ComplexMatrix a(2, 2);
    a << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(-2, 1);
    ComplexMatrix b(2, 2);
    b << Complex(0, 1), Complex(2, 0), Complex(1, 1), Complex(0, 0);
    // Tr(A†B) by hand.
    Complex expected(0.0, 0.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expected += std::conj(a(i, j)) * b(i, j);
    CHECK(std::abs(hs_inner(a, b) - expected) < 1e-15);
}

TEST_CASE("hs_norm matches the Frobenius sum")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix m = random_matrix(rng, 1 + trial % 6);
        double sum = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) sum += std::norm(m(i, j));
        CHECK(std::abs(hs_norm(m) * hs_norm(m) - sum) <= 1e-12 * sum);
    }
}

TEST_CASE("spectral_norm examples")
{
    CHECK(spectral_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
    CHECK(std::abs(spectral_norm(pauli(Axis::X)) - 1.0) < 1e-15);
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d.diagonal() << Complex(-4, 0), Complex(2, 0), Complex(0, 3);
    CHECK(std::abs(spectral_norm(d) - 4.0) < 1e-14);
    // Jordan block [[0,1],[0,0]].
    CHECK(std::abs(spectral_norm(lowering()) - 1.0) < 1e-15);
}

TEST_CASE("spectral_norm agrees with the independent oracle, including the large-matrix route")
{
    std::mt19937_64 rng(12);
    for (std::size_t dim : {2u, 5u, 16u, 17u, 24u}) {
        const ComplexMatrix m = random_matrix(rng, dim);
        const double expected = oracle::spectral_norm(m);
        CHECK(std::abs(spectral_norm(m) - expected) <= 1e-10 * expected);
        CHECK(std::abs(spectral_norm(dagger(m)) - spectral_norm(m)) <= 1e-12 * expected);
        CHECK(spectral_norm_bound(m) >= spectral_norm(m) * (1.0 - 1e-12));
    }
}

TEST_CASE("spectral norm of a Hermitian matrix is its largest |eigenvalue|")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const ComplexMatrix h = random_hermitian(rng, 2 + trial % 7);
        const std::vector<double> ev = hermitian_eigenvalues(h);
        const double largest = std::max(std::abs(ev.front()), std::abs(ev.back()));
        CHECK(std::abs(spectral_norm(h) - largest) <= 1e-10 * largest);
    }
}

TEST_CASE("hermitian_eigenvalues against the Jacobi oracle")
{
    CHECK(hermitian_eigenvalues(pauli(Axis::Z)) == std::vector<double>{-1.0, 1.0});
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix h = random_hermitian(rng, 2 + trial % 5);
        const std::vector<double> got = hermitian_eigenvalues(h);
        const std::vector<double> want = oracle::hermitian_eigenvalues(h);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) CHECK(std::abs(got[k] - want[k]) < 1e-11);
    }
    CHECK_THROWS_AS(hermitian_eigenvalues(lowering()), NotHermitianError);
}

TEST_CASE("eigenvalues_general sorts by real part then imaginary part")
{
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m.diagonal() << Complex(1, 0), Complex(-1, 2), Complex(-1, -2), Complex(0, 0);
    const std::vector<Complex> ev = eigenvalues_general(m);
    REQUIRE(ev.size() == 4);
    CHECK(std::abs(ev[0] - Complex(-1, -2)) < 1e-14);
    CHECK(std::abs(ev[1] - Complex(-1, 2)) < 1e-14);
    CHECK(std::abs(ev[2] - Complex(0, 0)) < 1e-14);
    CHECK(std::abs(ev[3] - Complex(1, 0)) < 1e-14);

    // σ_x has eigenvalues ±1.
    const std::vector<Complex> px = eigenvalues_general(pauli(Axis::X));
    CHECK(std::abs(px[0] + 1.0) < 1e-14);
    CHECK(std::abs(px[1] - 1.0) < 1e-14);
}

TEST_CASE("is_hermitian uses a relative tolerance with an absolute floor")
{
    CHECK(is_hermitian(pauli(Axis::Y)));
    CHECK_FALSE(is_hermitian(lowering()));
    ComplexMatrix h = 1e6 * pauli(Axis::X);
    h(0, 1) += 1e-6; // relative perturbation 1e-12
    CHECK(is_hermitian(h));
    ComplexMatrix tiny = ComplexMatrix::Zero(2, 2);
    tiny(0, 1) = 1e-13;
    CHECK_FALSE(is_hermitian(tiny));
    CHECK(hermitian_tolerance(ComplexMatrix::Zero(2, 2)) == 1e-14);
}

TEST_CASE("matrix_exp examples")
{
    CHECK(matrix_exp(ComplexMatrix::Zero(3, 3)) == ComplexMatrix::Identity(3, 3));

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d.diagonal() << Complex(0.3, 0), Complex(-1.7, 0);
    const ComplexMatrix ed = matrix_exp(d);
    CHECK(std::abs(ed(0, 0) - std::exp(0.3)) < 1e-15 * std::exp(0.3));
    CHECK(std::abs(ed(1, 1) - std::exp(-1.7)) < 1e-15);
    CHECK(std::abs(ed(0, 1)) == 0.0);

    // exp(iπσ_x/2) = iσ_x, checked against the closed form and the Taylor oracle.
    const ComplexMatrix rot = I_UNIT * (std::numbers::pi / 2.0) * pauli(Axis::X);
    const ComplexMatrix expected = I_UNIT * pauli(Axis::X);
    CHECK(max_abs(matrix_exp(rot) - expected) < 1e-14);
    CHECK(max_abs(oracle::taylor_expm(rot) - expected) < 1e-14);
}

TEST_CASE("matrix_exp matches the Taylor oracle across Padé degrees")
{
    std::mt19937_64 rng(15);
    for (double norm : {1e-3, 0.1, 0.9, 2.5, 5.0, 20.0, 45.0}) {
        for (std::size_t dim : {2u, 4u, 7u}) {
            const ComplexMatrix m = random_scaled(rng, dim, norm);
            const ComplexMatrix want = oracle::taylor_expm(m);
            const double scale = oracle::spectral_norm(want);
            CHECK(oracle::spectral_norm(matrix_exp(m) - want) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("Hermitian route agrees with the general route")
{
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix h = random_hermitian(rng, 2 + trial % 4);
        h *= 3.0 / spectral_norm(h);
        const ComplexMatrix general = matrix_exp(h);
        const ComplexMatrix herm = matrix_exp(h, MatrixStructure::Hermitian);
        CHECK(spectral_norm(general - herm) <= 1e-11 * spectral_norm(general));
    }
    CHECK_THROWS_AS(matrix_exp(lowering(), MatrixStructure::Hermitian), NotHermitianError);
}

TEST_CASE("matrix_exp group property on random 8x8 matrices")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_real_distribution<double> pick(0.05, 2.0);
        const ComplexMatrix a = random_scaled(rng, 8, pick(rng));
        const ComplexMatrix ea = matrix_exp(a);
        CHECK(spectral_norm(ea * ea - matrix_exp(2.0 * a)) <= 1e-8);
    }
}

TEST_CASE("matrix_exp rejects out-of-range and malformed input")
{
    CHECK_THROWS_AS(matrix_exp(60.0 * pauli(Axis::X)), RangeError);
    CHECK_NOTHROW(matrix_exp(49.0 * pauli(Axis::Z)));
    CHECK_THROWS_AS(matrix_exp(ComplexMatrix::Zero(2, 3)), DimensionError);
    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(matrix_exp(bad), NumericalError);
    CHECK_THROWS_AS(spectral_norm(bad), NumericalError);
}

TEST_CASE("commutator examples and antisymmetry")
{
    const ComplexMatrix x = pauli(Axis::X);
    const ComplexMatrix y = pauli(Axis::Y);
    const ComplexMatrix z = pauli(Axis::Z);
    CHECK(max_abs(commutator(x, x)) == 0.0);
    CHECK(max_abs(commutator(x, y) - 2.0 * I_UNIT * z) < 1e-15);

    std::mt19937_64 rng(18);
    const ComplexMatrix a = random_matrix(rng, 4);
    const ComplexMatrix b = random_matrix(rng, 4);
    CHECK(max_abs(commutator(identity(4), a)) < 1e-15);
    CHECK(max_abs(commutator(a, b) + commutator(b, a)) < 1e-14);
    CHECK_THROWS_AS(commutator(a, identity(3)), DimensionError);
}

TEST_CASE("kron follows the standard block layout")
{
    const ComplexMatrix k = kron(pauli(Axis::Z), pauli(Axis::X));
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 1) == Complex(1, 0));
    CHECK(k(2, 3) == Complex(-1, 0));
    CHECK(k(0, 3) == Complex(0, 0));
}
