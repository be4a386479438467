#include "occwalk/classical.hpp"

#include "occwalk/error.hpp"

#include <cmath>
#include <string>

namespace occwalk {

GeneratorMatrix generator_matrix(const Graph& g, GeneratorKind kind, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw Error(ErrorCode::InvalidConfig, "gamma must be positive, got " + std::to_string(gamma));
    }
    GeneratorMatrix h;
    h.kind = kind;
    h.labels = share_labels(g);
    const auto n = static_cast<Eigen::Index>(g.node_count());
    if (kind == GeneratorKind::UnnormalizedRate) {
        h.gamma = gamma;
        h.matrix = gamma * laplacian(g);
        h.symmetric = h.matrix;
        h.scaling = Vector::Ones(n);
    } else {
        require_no_isolated(g);
        h.gamma = 1.0;
        const DegreeVector k = degree_vector(g);
        h.matrix = laplacian(g) * k.cwiseInverse().asDiagonal();
        h.symmetric = normalized_laplacian(g);
        h.scaling = k.cwiseSqrt();
    }
    return h;
}

void IntegrationConfig::validate() const {
    if (!(dt > 0.0) || !(horizon > 0.0) || !(tolerance > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "dt, horizon and tolerance must all be positive");
    }
    if (!(dt < horizon)) {
        throw Error(ErrorCode::InvalidConfig, "dt must be smaller than the horizon");
    }
}

std::size_t IntegrationConfig::steps() const {
    return static_cast<std::size_t>(std::llround(horizon / dt));
}

IntegrationConfig default_euler_config(const GeneratorMatrix& h) {
    const double max_diag = h.size() == 0 ? 1.0 : h.matrix.diagonal().maxCoeff();
    return {0.1 / (max_diag > 0.0 ? max_diag : 1.0), 1000.0, 1e-10};
}

ProbabilityVector discrete_step(const DenseMatrix& transition, const ProbabilityVector& p) {
    if (transition.rows() != transition.cols() || transition.cols() != p.values.size()) {
        throw Error(ErrorCode::DimensionMismatch, "transition matrix and distribution sizes differ");
    }
    return {transition * p.values, p.labels};
}

ClassicalPropagator::ClassicalPropagator(const GeneratorMatrix& h)
    : spectrum_(h.symmetric), scaling_(h.scaling) {}

DenseMatrix ClassicalPropagator::at(double t) const {
    if (t < 0.0) throw Error(ErrorCode::InvalidConfig, "propagator time must be nonnegative");
    const DenseMatrix sym = spectrum_.apply([t](double lambda) { return std::exp(-lambda * t); });
    return scaling_.asDiagonal() * sym * scaling_.cwiseInverse().asDiagonal();
}

DenseMatrix propagator(const GeneratorMatrix& h, double t) { return ClassicalPropagator(h).at(t); }

EulerResult euler_evolve(const GeneratorMatrix& h, const ProbabilityVector& p0, const IntegrationConfig& cfg) {
    cfg.validate();
    if (p0.values.size() != h.matrix.rows() || h.matrix.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "initial distribution does not match the generator");
    }
    for (Eigen::Index i = 0; i < h.matrix.rows(); ++i) {
        if (1.0 - cfg.dt * h.matrix(i, i) < 0.0) {
            throw Error(ErrorCode::UnstableStep,
                        "dt=" + std::to_string(cfg.dt) + " makes the Euler multiplier of node " +
                            std::to_string(i) + " negative; need dt <= " +
                            std::to_string(1.0 / h.matrix.diagonal().maxCoeff()));
        }
    }

    // (I - dt H) is column-stochastic under the check above.
    DenseMatrix step = -cfg.dt * h.matrix;
    step.diagonal().array() += 1.0;

    EulerResult result;
    result.trajectory.push_back(p0);
    Vector current = p0.values;
    Vector next(current.size());
    int streak = 0;
    const std::size_t steps = cfg.steps();
    for (std::size_t k = 0; k < steps; ++k) {
        next.noalias() = step * current;
        next = next.cwiseMax(0.0);
        const double change = (next - current).cwiseAbs().maxCoeff();
        current.swap(next);
        result.trajectory.push_back({current, p0.labels});
        streak = change < cfg.tolerance ? streak + 1 : 0;
        if (streak >= kConvergenceStreak) {
            result.converged = true;
            break;
        }
    }
    return result;
}

OccupationVector stationary_occupation(const Graph& g) {
    require_no_isolated(g);
    if (!is_connected(g)) {
        throw Error(ErrorCode::DisconnectedGraph,
                    "graph has " + std::to_string(connected_components(g).size()) +
                        " connected components; analyse them separately");
    }
    const DegreeVector k = degree_vector(g);
    return {OccupationKind::Classical, k / k.sum(), share_labels(g)};
}

}  // namespace occwalk
