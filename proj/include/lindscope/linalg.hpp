// linalg.hpp: Dense complex linear-algebra kernel used by all other modules
//
// Every function is pure: inputs are taken by const reference and results are
// returned by value, so concurrent calls from different threads are safe.

#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace lindscope {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// matrix_exp refuses inputs whose spectral norm exceeds this.
inline constexpr double kExpNormLimit = 50.0;

enum class MatrixStructure { General, Hermitian };

// Throws NumericalError naming `what` when an entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, std::string_view what);

void require_square(const ComplexMatrix& m, std::string_view what);

ComplexMatrix identity(Eigen::Index dim);

ComplexMatrix dagger(const ComplexMatrix& m);

// Hilbert-Schmidt inner product Tr[A† B].
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double hs_norm(const ComplexMatrix& a);

// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

// Cheap upper bound sqrt(‖M‖₁‖M‖∞) on the spectral norm.
double spectral_norm_bound(const ComplexMatrix& m);

// Hermiticity tolerance: 1e-10·‖M‖ with an absolute floor of 1e-14.
double hermitian_tolerance(const ComplexMatrix& m);

// True when ‖M − M†‖ is within hermitian_tolerance(M).
bool is_hermitian(const ComplexMatrix& m);

// Ascending eigenvalues of a Hermitian matrix. Throws NotHermitianError.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Full spectrum of a general square matrix, sorted ascending by real part
// with ties broken by imaginary part.
std::vector<Complex> eigenvalues_general(const ComplexMatrix& m);

// exp(M). General inputs use Padé-13 scaling and squaring; Hermitian inputs
// use the eigendecomposition. Throws RangeError when ‖M‖ > kExpNormLimit.
ComplexMatrix matrix_exp(const ComplexMatrix& m,
                         MatrixStructure structure = MatrixStructure::General);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Orders complex numbers ascending by real part, then imaginary part.
void sort_spectrum(std::vector<Complex>& values);

} // namespace lindscope
