#pragma once

#include "occwalk/graph.hpp"
#include "occwalk/occupation.hpp"
#include "occwalk/spectral.hpp"

#include <vector>

namespace occwalk {

enum class GeneratorKind {
    /// H = gamma * L: H_ii = gamma k_i, H_ij = -gamma for neighbours. Uniform
    /// stationary state.
    UnnormalizedRate,
    /// H_c = L D^{-1}. Degree-proportional stationary state.
    Normalized,
};

/// Generator of a continuous-time classical walk, dp/dt = -H p. Columns sum to 0.
///
/// Both kinds are similar to a symmetric matrix through a diagonal scaling S:
/// S^{-1} H S is symmetric with S = I for gamma*L and S = D^{1/2} for L D^{-1}.
struct GeneratorMatrix {
    GeneratorKind kind = GeneratorKind::Normalized;
    double gamma = 1.0;
    DenseMatrix matrix;
    DenseMatrix symmetric;  ///< S^{-1} H S
    Vector scaling;         ///< diagonal of S
    Labels labels;

    std::size_t size() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
};

/// Throws IsolatedNode for the normalized kind, InvalidConfig for gamma <= 0.
GeneratorMatrix generator_matrix(const Graph& g, GeneratorKind kind, double gamma = 1.0);

/// Time-stepping parameters. For Euler, `tolerance` is the stationarity
/// threshold; for leapfrog it is the allowed norm drift.
struct IntegrationConfig {
    double dt = 0.1;
    double horizon = 1000.0;
    double tolerance = 1e-10;

    /// Throws InvalidConfig unless all fields are positive and dt < horizon.
    void validate() const;
    std::size_t steps() const;
};

/// dt = 0.1 / max_i H_ii, horizon 1000, tolerance 1e-10.
IntegrationConfig default_euler_config(const GeneratorMatrix& h);

/// Number of consecutive sub-tolerance steps required to declare convergence.
inline constexpr int kConvergenceStreak = 3;

/// p(t+1) = M p(t). Throws DimensionMismatch.
ProbabilityVector discrete_step(const DenseMatrix& transition, const ProbabilityVector& p);

/// e^{-H t}, evaluated as S exp(-t S^{-1} H S) S^{-1} with a symmetric eigensolve.
DenseMatrix propagator(const GeneratorMatrix& h, double t);

/// Caches the eigendecomposition behind repeated propagator evaluations.
class ClassicalPropagator {
public:
    explicit ClassicalPropagator(const GeneratorMatrix& h);
    DenseMatrix at(double t) const;

private:
    SpectralDecomposition spectrum_;
    Vector scaling_;
};

struct EulerResult {
    std::vector<ProbabilityVector> trajectory;  ///< trajectory[k] at time k * dt
    bool converged = false;
};

/// Explicit Euler integration p_{k+1} = (I - dt H) p_k.
///
/// Stops once ||p_{k+1} - p_k||_inf < tolerance for kConvergenceStreak
/// consecutive steps, or at the horizon. Negative entries from rounding are
/// clamped to 0. Throws UnstableStep when 1 - dt H_ii < 0 for some i.
EulerResult euler_evolve(const GeneratorMatrix& h, const ProbabilityVector& p0, const IntegrationConfig& cfg);

/// OP_c(i) = k_i / sum_j k_j. Throws IsolatedNode, DisconnectedGraph.
OccupationVector stationary_occupation(const Graph& g);

}  // namespace occwalk
