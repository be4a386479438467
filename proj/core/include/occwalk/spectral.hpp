#pragma once

#include "occwalk/graph.hpp"

#include <cstddef>
#include <vector>

namespace occwalk {

/// Default relative tolerance for merging eigenvalues into one degenerate group:
/// |l_i - l_j| <= tol * max(1, |l_i|).
inline constexpr double kDegeneracyTolerance = 1e-8;

/// Eigen-decomposition of a real symmetric operator, eigenvalues ascending,
/// eigenvectors as orthonormal columns, and the degenerate clusters of the
/// spectrum as contiguous index ranges.
class SpectralDecomposition {
public:
    struct Group {
        std::size_t begin;
        std::size_t end;  // one past the last index
        std::size_t size() const noexcept { return end - begin; }
    };

    /// Throws DimensionMismatch for non-square input, EigensolverFailure when the
    /// solver does not converge.
    explicit SpectralDecomposition(const DenseMatrix& symmetric,
                                   double grouping_tolerance = kDegeneracyTolerance);

    const Vector& eigenvalues() const noexcept { return eigenvalues_; }
    const DenseMatrix& eigenvectors() const noexcept { return eigenvectors_; }
    const std::vector<Group>& groups() const noexcept { return groups_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(eigenvalues_.size()); }

    /// V diag(f(lambda)) V^T for a scalar function applied to the spectrum.
    template <typename F>
    DenseMatrix apply(F&& f) const {
        const Vector mapped = eigenvalues_.unaryExpr(f);
        return eigenvectors_ * mapped.asDiagonal() * eigenvectors_.transpose();
    }

    DenseMatrix reconstruct() const;

private:
    Vector eigenvalues_;
    DenseMatrix eigenvectors_;
    std::vector<Group> groups_;
};

/// Contiguous clustering of an ascending spectrum. Neighbours closer than
/// tol * max(1, |l|) join the same group.
std::vector<SpectralDecomposition::Group> group_eigenvalues(const Vector& ascending, double tolerance);

}  // namespace occwalk
