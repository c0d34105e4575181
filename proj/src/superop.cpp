// superop.cpp: Liouvillian construction via column-stacking vectorization

#include "lindscope/superop.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>
#include <utility>

#include "lindscope/errors.hpp"

namespace lindscope {

namespace {

void require_dim_within_cap(std::size_t dim, std::string_view what)
{
    const std::size_t cap = dimension_cap();
    if (dim > cap) {
        throw ModelError(std::string(what) + ": Hilbert-space dimension " + std::to_string(dim) +
                         " exceeds the cap of " + std::to_string(cap) + " (set LINDSCOPE_DIM_CAP to raise it)");
    }
}

} // namespace

std::size_t dimension_cap()
{
    const char* env = std::getenv("LINDSCOPE_DIM_CAP");
    if (env == nullptr) return kDefaultDimensionCap;
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw ConfigError("LINDSCOPE_DIM_CAP must be a positive integer, got '" + std::string(text) + "'");
    }
    return value;
}

LindbladModel::LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jumps, std::string label)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)), label_(std::move(label))
{
    if (hamiltonian_.rows() == 0 || hamiltonian_.rows() != hamiltonian_.cols()) {
        throw ModelError("model '" + label_ + "': Hamiltonian must be a nonempty square matrix");
    }
    require_dim_within_cap(dim(), "model '" + label_ + "'");
    if (!hamiltonian_.allFinite()) {
        throw ModelError("model '" + label_ + "': Hamiltonian has non-finite entries");
    }
    if (!is_hermitian(hamiltonian_)) {
        throw ModelError("model '" + label_ + "': Hamiltonian is not Hermitian");
    }
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        const ComplexMatrix& jump = jumps_[k];
        if (jump.rows() != hamiltonian_.rows() || jump.cols() != hamiltonian_.cols()) {
            throw ModelError("model '" + label_ + "': jump " + std::to_string(k) + " is " +
                             std::to_string(jump.rows()) + "x" + std::to_string(jump.cols()) +
                             ", expected " + std::to_string(dim()) + "x" + std::to_string(dim()));
        }
        if (!jump.allFinite()) {
            throw ModelError("model '" + label_ + "': jump " + std::to_string(k) + " has non-finite entries");
        }
    }
}

Superoperator::Superoperator(std::size_t dim_, ComplexMatrix matrix_)
    : dim(dim_), matrix(std::move(matrix_))
{
    require_dim_within_cap(dim, "superoperator");
    const auto n = static_cast<Eigen::Index>(dim * dim);
    if (matrix.rows() != n || matrix.cols() != n) {
        throw DimensionError("superoperator for d=" + std::to_string(dim) + " must be " + std::to_string(n) +
                             "x" + std::to_string(n) + ", got " + std::to_string(matrix.rows()) + "x" +
                             std::to_string(matrix.cols()));
    }
}

Superoperator Superoperator::identity(std::size_t dim)
{
    const auto n = static_cast<Eigen::Index>(dim * dim);
    return {dim, ComplexMatrix::Identity(n, n)};
}

Superoperator Superoperator::zero(std::size_t dim)
{
    const auto n = static_cast<Eigen::Index>(dim * dim);
    return {dim, ComplexMatrix::Zero(n, n)};
}

ComplexVector vectorize(const ComplexMatrix& a)
{
    require_square(a, "vectorize");
    // Eigen storage is column-major, so the raw buffer is already column-stacked.
    return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

ComplexMatrix devectorize(const ComplexVector& v, std::size_t dim)
{
    const auto d = static_cast<Eigen::Index>(dim);
    if (v.size() != d * d) {
        throw DimensionError("devectorize: vector length " + std::to_string(v.size()) + " is not " +
                             std::to_string(dim) + "^2");
    }
    return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

Superoperator liouvillian(const LindbladModel& model)
{
    const auto d = static_cast<Eigen::Index>(model.dim());
    const ComplexMatrix id = lindscope::identity(d);
    const ComplexMatrix& h = model.hamiltonian();
    const Complex minus_i(0.0, -1.0);

    ComplexMatrix m = minus_i * (kron(id, h) - kron(h.transpose(), id));
    for (const ComplexMatrix& jump : model.jumps()) {
        const ComplexMatrix jdj = jump.adjoint() * jump;
        m += kron(jump.conjugate(), jump);
        m -= 0.5 * kron(id, jdj);
        m -= 0.5 * kron(jdj.transpose(), id);
    }
    return {model.dim(), std::move(m)};
}

Superoperator adjoint(const Superoperator& s)
{
    return {s.dim, s.matrix.adjoint()};
}

Decomposition decompose(const Superoperator& s)
{
    const ComplexMatrix adj = s.matrix.adjoint();
    return {Superoperator{s.dim, 0.5 * (s.matrix + adj)}, Superoperator{s.dim, 0.5 * (s.matrix - adj)}};
}

ComplexMatrix apply(const Superoperator& s, const ComplexMatrix& rho)
{
    const auto d = static_cast<Eigen::Index>(s.dim);
    if (rho.rows() != d || rho.cols() != d) {
        throw DimensionError("apply: operator is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + ", superoperator acts on " + std::to_string(d) +
                             "x" + std::to_string(d));
    }
    return devectorize(s.matrix * vectorize(rho), s.dim);
}

} // namespace lindscope
