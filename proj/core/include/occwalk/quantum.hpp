#pragma once

#include "occwalk/classical.hpp"
#include "occwalk/graph.hpp"
#include "occwalk/occupation.hpp"
#include "occwalk/spectral.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace occwalk {

/// Amplitudes over the node basis: |k> is the basis vector of node k.
struct QuantumState {
    ComplexVector amplitudes;
    Labels labels;

    double norm() const { return amplitudes.norm(); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(amplitudes.size()); }
};

/// H_q = D^{-1/2} L D^{-1/2}. Throws IsolatedNode.
DenseMatrix quantum_hamiltonian(const Graph& g);

struct InitialState {
    enum class Mode { Uniform, Localized };
    Mode mode = Mode::Uniform;
    std::string node;  ///< only for Localized

    static InitialState uniform() { return {}; }
    static InitialState localized(std::string label) { return {Mode::Localized, std::move(label)}; }
};

/// Uniform superposition 1/sqrt(n) or a basis state. Throws UnknownNode.
QuantumState initial_state(const Graph& g, const InitialState& mode);

/// p_k = |<k|psi>|^2.
ProbabilityVector measure_distribution(const QuantumState& psi);

/// psi(t) = V e^{-i lambda t} V^T psi0.
QuantumState evolve_exact(const SpectralDecomposition& spectrum, const QuantumState& psi0, double t);
QuantumState evolve_exact(const DenseMatrix& h, const QuantumState& psi0, double t);

/// dt = 0.01, horizon 2000, norm-drift alarm 1e-3.
IntegrationConfig default_leapfrog_config();

/// Two-step explicit scheme psi_{k+1} = psi_{k-1} - 2 i dt H psi_k.
///
/// Some texts call this recurrence Crank-Nicolson; it is the explicit leapfrog
/// (midpoint) rule. psi_1 comes from the second-order Taylor step
/// (I - i dt H - dt^2 H^2 / 2) psi_0. Stable for dt * lambda_max < 1.
/// Throws UnstableStep when that bound fails or when ||psi_k|| drifts from 1
/// by more than cfg.tolerance.
std::vector<QuantumState> leapfrog_evolve(const DenseMatrix& h, const QuantumState& psi0,
                                          const IntegrationConfig& cfg);

/// Streams the leapfrog trajectory (k, state) for k = 0..steps without storing it.
void leapfrog_visit(const DenseMatrix& h, const QuantumState& psi0, const IntegrationConfig& cfg,
                    const std::function<void(std::size_t, const ComplexVector&)>& visit);

/// Long-time mean q_i = sum_G |<i|P_G|psi0>|^2 over the degenerate eigenspaces G.
/// Cross terms between distinct eigenvalues average to zero, so this is the
/// exact infinite-time mean of |<i|psi(t)>|^2.
OccupationVector long_time_mean(const SpectralDecomposition& spectrum, const QuantumState& psi0);
OccupationVector long_time_mean(const DenseMatrix& h, const QuantumState& psi0);

/// Finite-horizon mean of the measured distribution over leapfrog samples
/// k = 0..N, N = round(T / dt).
OccupationVector long_time_mean_numeric(const DenseMatrix& h, const QuantumState& psi0,
                                        const IntegrationConfig& cfg);

/// Largest |eigenvalue| bound used for the leapfrog stability check.
double spectral_radius_bound(const DenseMatrix& h);

}  // namespace occwalk
