// superop.hpp: Lindblad models, Liouvillian superoperators and their HS decomposition
//
// Operators are vectorized by column stacking: vec(A)[i + d·j] = A(i, j). Under
// this convention the Hilbert-Schmidt inner product of two operators equals the
// standard inner product of their vectorizations, so the superoperator adjoint
// is the conjugate transpose of its matrix.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lindscope/linalg.hpp"

namespace lindscope {

inline constexpr std::size_t kDefaultDimensionCap = 32;

// Hilbert-space dimension cap; LINDSCOPE_DIM_CAP in the environment overrides
// the default of 32.
std::size_t dimension_cap();

// Hamiltonian plus jump operators with rates absorbed (√γ_k L_k).
class LindbladModel {
public:
    // Throws ModelError for a non-Hermitian Hamiltonian, mismatched shapes,
    // non-finite entries or a dimension above dimension_cap().
    LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jumps, std::string label = {});

    std::size_t dim() const { return static_cast<std::size_t>(hamiltonian_.rows()); }
    const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
    const std::vector<ComplexMatrix>& jumps() const { return jumps_; }
    const std::string& label() const { return label_; }

private:
    ComplexMatrix hamiltonian_;
    std::vector<ComplexMatrix> jumps_;
    std::string label_;
};

// Generator acting on vectorized d×d operators.
struct Superoperator {
    Superoperator(std::size_t dim, ComplexMatrix matrix);

    static Superoperator identity(std::size_t dim);
    static Superoperator zero(std::size_t dim);

    std::size_t dim;
    ComplexMatrix matrix; // d² × d²
};

ComplexVector vectorize(const ComplexMatrix& a);
ComplexMatrix devectorize(const ComplexVector& v, std::size_t dim);

// M_L = −i(I⊗H − Hᵀ⊗I) + Σ_k [conj(L_k)⊗L_k − ½ I⊗(L_k†L_k) − ½ (L_k†L_k)ᵀ⊗I]
Superoperator liouvillian(const LindbladModel& model);

Superoperator adjoint(const Superoperator& s);

struct Decomposition {
    Superoperator dissipative;    // L_d = (L + L†)/2, Hermitian
    Superoperator nondissipative; // L_nd = (L − L†)/2, anti-Hermitian
};

Decomposition decompose(const Superoperator& s);

ComplexMatrix apply(const Superoperator& s, const ComplexMatrix& rho);

} // namespace lindscope
