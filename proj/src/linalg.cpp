// linalg.cpp: Dense complex kernel: norms, spectra, matrix exponential

#include "lindscope/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lindscope/errors.hpp"

namespace lindscope {

namespace {

constexpr Eigen::Index kJacobiSvdMaxDim = 16;

std::string shape(const ComplexMatrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
}

double one_norm(const ComplexMatrix& m)
{
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().colwise().sum().maxCoeff();
}

double inf_norm(const ComplexMatrix& m)
{
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

void require_exp_range(const ComplexMatrix& m)
{
    if (spectral_norm_bound(m) <= kExpNormLimit) return;
    const double norm = spectral_norm(m);
    if (norm > kExpNormLimit * (1.0 + 1e-12)) {
        throw RangeError("matrix_exp: spectral norm " + std::to_string(norm) + " exceeds " +
                         std::to_string(kExpNormLimit) + "; subdivide the time step");
    }
}

// Padé numerator coefficients b_0..b_m for degrees 3, 5, 7, 9, 13
// (Higham, SIAM J. Matrix Anal. Appl. 26, 2005).
constexpr std::array<double, 4> kPade3{120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7{17297280.0, 8648640.0, 1995840.0, 277200.0,
                                       25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9{17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                        30270240.0,    2162160.0,    110880.0,     3960.0,
                                        90.0,          1.0};
constexpr std::array<double, 14> kPade13{
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// 1-norm thresholds below which each degree is accurate to unit roundoff.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <std::size_t N>
ComplexMatrix pade_low_order(const ComplexMatrix& a, const std::array<double, N>& b)
{
    const Eigen::Index n = a.rows();
    const ComplexMatrix id = identity(n);
    const ComplexMatrix a2 = a * a;
    ComplexMatrix odd = b[1] * id;
    ComplexMatrix even = b[0] * id;
    ComplexMatrix power = id;
    for (std::size_t k = 2; k < N; k += 2) {
        power = power * a2;
        even += b[k] * power;
        odd += b[k + 1] * power;
    }
    const ComplexMatrix u = a * odd;
    return (even - u).partialPivLu().solve(even + u);
}

ComplexMatrix pade13(const ComplexMatrix& a)
{
    const auto& b = kPade13;
    const ComplexMatrix id = identity(a.rows());
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a4 * a2;
    const ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
    const ComplexMatrix u = a * (u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    const ComplexMatrix v_inner = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
    const ComplexMatrix v = v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    return (v - u).partialPivLu().solve(v + u);
}

ComplexMatrix exp_scaling_squaring(const ComplexMatrix& m)
{
    const double norm1 = one_norm(m);
    if (norm1 <= kTheta3) return pade_low_order(m, kPade3);
    if (norm1 <= kTheta5) return pade_low_order(m, kPade5);
    if (norm1 <= kTheta7) return pade_low_order(m, kPade7);
    if (norm1 <= kTheta9) return pade_low_order(m, kPade9);

    int squarings = 0;
    if (norm1 > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
    }
    ComplexMatrix result = pade13(m / std::ldexp(1.0, squarings));
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }
    return result;
}

ComplexMatrix exp_hermitian(const ComplexMatrix& m)
{
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("matrix_exp: Hermitian eigensolver did not converge");
    }
    const Eigen::VectorXd exps = solver.eigenvalues().array().exp();
    const ComplexMatrix& vecs = solver.eigenvectors();
    return vecs * exps.cast<Complex>().asDiagonal() * vecs.adjoint();
}

} // namespace

void require_finite(const ComplexMatrix& m, std::string_view what)
{
    if (!m.allFinite()) {
        throw NumericalError(std::string(what) + ": matrix contains NaN or infinite entries");
    }
}

void require_square(const ComplexMatrix& m, std::string_view what)
{
    if (m.rows() != m.cols()) {
        throw DimensionError(std::string(what) + ": expected a square matrix, got " + shape(m));
    }
}

ComplexMatrix identity(Eigen::Index dim)
{
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix dagger(const ComplexMatrix& m)
{
    return m.adjoint();
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_square(a, "hs_inner");
    require_same_shape(a, b, "hs_inner");
    // Tr[A† B] = Σ_ij conj(A_ij) B_ij
    return (a.conjugate().cwiseProduct(b)).sum();
}

double hs_norm(const ComplexMatrix& a)
{
    return a.norm();
}

double spectral_norm(const ComplexMatrix& m)
{
    if (m.size() == 0) return 0.0;
    require_finite(m, "spectral_norm");
    if (std::max(m.rows(), m.cols()) <= kJacobiSvdMaxDim) {
        Eigen::JacobiSVD<ComplexMatrix> svd(m);
        return svd.singularValues()(0);
    }
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

double spectral_norm_bound(const ComplexMatrix& m)
{
    return std::sqrt(one_norm(m) * inf_norm(m));
}

double hermitian_tolerance(const ComplexMatrix& m)
{
    return std::max(1e-10 * spectral_norm(m), 1e-14);
}

bool is_hermitian(const ComplexMatrix& m)
{
    if (m.rows() != m.cols()) return false;
    const ComplexMatrix diff = m - m.adjoint();
    return spectral_norm(diff) <= hermitian_tolerance(m);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m)
{
    require_square(m, "hermitian_eigenvalues");
    if (!is_hermitian(m)) {
        throw NotHermitianError("hermitian_eigenvalues: input is not Hermitian within tolerance");
    }
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
    }
    const Eigen::VectorXd& values = solver.eigenvalues();
    std::vector<double> out(values.data(), values.data() + values.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Complex> eigenvalues_general(const ComplexMatrix& m)
{
    require_square(m, "eigenvalues_general");
    if (m.size() == 0) return {};
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigenvalues_general: eigensolver did not converge");
    }
    const ComplexVector& values = solver.eigenvalues();
    std::vector<Complex> out(values.data(), values.data() + values.size());
    sort_spectrum(out);
    return out;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m, MatrixStructure structure)
{
    require_square(m, "matrix_exp");
    require_finite(m, "matrix_exp");
    if (m.size() == 0) return m;
    require_exp_range(m);
    if (structure == MatrixStructure::Hermitian) {
        if (!is_hermitian(m)) {
            throw NotHermitianError("matrix_exp: input flagged Hermitian is not Hermitian");
        }
        return exp_hermitian(m);
    }
    return exp_scaling_squaring(m);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_square(a, "commutator");
    require_same_shape(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void sort_spectrum(std::vector<Complex>& values)
{
    std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

} // namespace lindscope
