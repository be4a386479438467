#include "occwalk/quantum.hpp"

#include "occwalk/error.hpp"

#include <cmath>
#include <string>

namespace occwalk {

namespace {

using StatePair = Eigen::Matrix<double, Eigen::Dynamic, 2>;  // columns: real, imaginary

void check_hamiltonian(const DenseMatrix& h, const QuantumState& psi) {
    if (h.rows() != h.cols() || h.rows() != psi.amplitudes.size()) {
        throw Error(ErrorCode::DimensionMismatch, "Hamiltonian and state sizes differ");
    }
}

StatePair split(const ComplexVector& v) {
    StatePair z(v.size(), 2);
    z.col(0) = v.real();
    z.col(1) = v.imag();
    return z;
}

ComplexVector join(const StatePair& z) {
    ComplexVector v(z.rows());
    v.real() = z.col(0);
    v.imag() = z.col(1);
    return v;
}

// Multiplies by -i: (x + i y) -> (y - i x).
StatePair times_minus_i(const StatePair& z) {
    StatePair out(z.rows(), 2);
    out.col(0) = z.col(1);
    out.col(1) = -z.col(0);
    return out;
}

template <typename Visit>
void run_leapfrog(const DenseMatrix& h, const QuantumState& psi0, const IntegrationConfig& cfg, Visit&& visit) {
    cfg.validate();
    check_hamiltonian(h, psi0);
    const double radius = spectral_radius_bound(h);
    if (!(cfg.dt * radius < 1.0)) {
        throw Error(ErrorCode::UnstableStep, "leapfrog needs dt * lambda_max < 1, got dt=" +
                                                 std::to_string(cfg.dt) +
                                                 " lambda_max=" + std::to_string(radius));
    }
    const double dt = cfg.dt;
    const std::size_t steps = cfg.steps();

    StatePair prev = split(psi0.amplitudes);
    const double norm0 = prev.norm();
    auto check_norm = [&](const StatePair& z, std::size_t k) {
        const double drift = std::abs(z.norm() - norm0);
        if (drift > cfg.tolerance) {
            throw Error(ErrorCode::UnstableStep, "leapfrog norm drift " + std::to_string(drift) +
                                                     " at step " + std::to_string(k) +
                                                     " exceeds tolerance " + std::to_string(cfg.tolerance));
        }
    };
    visit(std::size_t{0}, prev);
    if (steps == 0) return;

    // Second-order Taylor bootstrap.
    StatePair hz = h * prev;
    StatePair hhz = h * hz;
    StatePair cur = prev + dt * times_minus_i(hz) - (0.5 * dt * dt) * hhz;
    check_norm(cur, 1);
    visit(std::size_t{1}, cur);

    StatePair next(prev.rows(), 2);
    for (std::size_t k = 2; k <= steps; ++k) {
        hz.noalias() = h * cur;
        next.col(0) = prev.col(0) + (2.0 * dt) * hz.col(1);
        next.col(1) = prev.col(1) - (2.0 * dt) * hz.col(0);
        check_norm(next, k);
        visit(k, next);
        prev.swap(cur);
        cur.swap(next);
    }
}

}  // namespace

DenseMatrix quantum_hamiltonian(const Graph& g) { return normalized_laplacian(g); }

QuantumState initial_state(const Graph& g, const InitialState& mode) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    QuantumState psi{ComplexVector::Zero(n), share_labels(g)};
    if (mode.mode == InitialState::Mode::Uniform) {
        if (n == 0) throw Error(ErrorCode::InvalidConfig, "uniform state on an empty graph");
        psi.amplitudes.setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    } else {
        psi.amplitudes(static_cast<Eigen::Index>(g.index_of(mode.node))) = 1.0;
    }
    return psi;
}

ProbabilityVector measure_distribution(const QuantumState& psi) {
    return {psi.amplitudes.cwiseAbs2(), psi.labels};
}

QuantumState evolve_exact(const SpectralDecomposition& spectrum, const QuantumState& psi0, double t) {
    if (spectrum.dimension() != psi0.size()) {
        throw Error(ErrorCode::DimensionMismatch, "spectrum and state sizes differ");
    }
    const DenseMatrix& v = spectrum.eigenvectors();
    ComplexVector coeff = v.transpose().cast<std::complex<double>>() * psi0.amplitudes;
    for (Eigen::Index j = 0; j < coeff.size(); ++j) {
        coeff(j) *= std::polar(1.0, -spectrum.eigenvalues()(j) * t);
    }
    return {v.cast<std::complex<double>>() * coeff, psi0.labels};
}

QuantumState evolve_exact(const DenseMatrix& h, const QuantumState& psi0, double t) {
    check_hamiltonian(h, psi0);
    return evolve_exact(SpectralDecomposition(h), psi0, t);
}

IntegrationConfig default_leapfrog_config() { return {0.01, 2000.0, 1e-3}; }

double spectral_radius_bound(const DenseMatrix& h) {
    if (h.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigensolverFailure, "eigenvalue bound did not converge");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

void leapfrog_visit(const DenseMatrix& h, const QuantumState& psi0, const IntegrationConfig& cfg,
                    const std::function<void(std::size_t, const ComplexVector&)>& visit) {
    run_leapfrog(h, psi0, cfg, [&](std::size_t k, const StatePair& z) { visit(k, join(z)); });
}

std::vector<QuantumState> leapfrog_evolve(const DenseMatrix& h, const QuantumState& psi0,
                                          const IntegrationConfig& cfg) {
    std::vector<QuantumState> trajectory;
    trajectory.reserve(cfg.steps() + 1);
    run_leapfrog(h, psi0, cfg, [&](std::size_t k, const StatePair& z) {
        // The first entry is psi0 itself, untouched by the real/imaginary split.
        trajectory.push_back(k == 0 ? psi0 : QuantumState{join(z), psi0.labels});
    });
    return trajectory;
}

OccupationVector long_time_mean(const SpectralDecomposition& spectrum, const QuantumState& psi0) {
    if (spectrum.dimension() != psi0.size()) {
        throw Error(ErrorCode::DimensionMismatch, "spectrum and state sizes differ");
    }
    const DenseMatrix& v = spectrum.eigenvectors();
    const StatePair coeff = v.transpose() * split(psi0.amplitudes);
    Vector q = Vector::Zero(v.rows());
    for (const auto& group : spectrum.groups()) {
        const auto begin = static_cast<Eigen::Index>(group.begin);
        const auto width = static_cast<Eigen::Index>(group.size());
        const StatePair projected = v.middleCols(begin, width) * coeff.middleRows(begin, width);
        q += projected.rowwise().squaredNorm();
    }
    return {OccupationKind::Quantum, q, psi0.labels};
}

OccupationVector long_time_mean(const DenseMatrix& h, const QuantumState& psi0) {
    check_hamiltonian(h, psi0);
    return long_time_mean(SpectralDecomposition(h), psi0);
}

OccupationVector long_time_mean_numeric(const DenseMatrix& h, const QuantumState& psi0,
                                        const IntegrationConfig& cfg) {
    Vector sum = Vector::Zero(h.rows());
    std::size_t samples = 0;
    run_leapfrog(h, psi0, cfg, [&](std::size_t, const StatePair& z) {
        // Each sample is the distribution of the renormalized leapfrog state.
        sum += z.rowwise().squaredNorm() / z.squaredNorm();
        ++samples;
    });
    return {OccupationKind::Quantum, sum / static_cast<double>(samples), psi0.labels};
}

}  // namespace occwalk
