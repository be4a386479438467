#include "occwalk/spectral.hpp"

#include "occwalk/error.hpp"

#include <algorithm>
#include <cmath>

namespace occwalk {

std::vector<SpectralDecomposition::Group> group_eigenvalues(const Vector& ascending, double tolerance) {
    std::vector<SpectralDecomposition::Group> groups;
    const auto n = static_cast<std::size_t>(ascending.size());
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const bool split = i == n || [&] {
            const double prev = ascending(static_cast<Eigen::Index>(i - 1));
            const double cur = ascending(static_cast<Eigen::Index>(i));
            return std::abs(cur - prev) > tolerance * std::max(1.0, std::abs(prev));
        }();
        if (split) {
            groups.push_back({begin, i});
            begin = i;
        }
    }
    return groups;
}

SpectralDecomposition::SpectralDecomposition(const DenseMatrix& symmetric, double grouping_tolerance) {
    if (symmetric.rows() != symmetric.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "spectral decomposition needs a square matrix");
    }
    if (symmetric.rows() == 0) return;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(symmetric);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigensolverFailure, "symmetric eigensolver did not converge");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
    groups_ = group_eigenvalues(eigenvalues_, grouping_tolerance);
}

DenseMatrix SpectralDecomposition::reconstruct() const {
    return eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.transpose();
}

}  // namespace occwalk
