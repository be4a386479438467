#include "occwalk/analysis.hpp"

#include "occwalk/error.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <unordered_map>

namespace occwalk {

std::vector<std::size_t> ranking_order(const Vector& values, const std::vector<std::string>& labels) {
    std::vector<std::size_t> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double va = values(static_cast<Eigen::Index>(a));
        const double vb = values(static_cast<Eigen::Index>(b));
        if (va != vb) return va > vb;
        return labels[a] < labels[b];
    });
    return order;
}

Ranking rank_nodes(const OccupationVector& occ, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidConfig, "k must be at least 1");
    if (k > occ.size()) {
        throw Error(ErrorCode::KTooLarge, "k=" + std::to_string(k) + " exceeds " + std::to_string(occ.size()) + " nodes");
    }
    const auto order = ranking_order(occ.values, *occ.labels);
    Ranking r{occ.kind, k, {}};
    r.entries.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t idx = order[i];
        r.entries.push_back({i + 1, idx, occ.label(idx), occ.values(static_cast<Eigen::Index>(idx))});
    }
    return r;
}

ScatterSeries degree_occupation_series(const Graph& g, const OccupationVector& occ) {
    if (occ.size() != g.node_count()) {
        throw Error(ErrorCode::DimensionMismatch, "occupation vector does not match the graph");
    }
    const DegreeVector k = degree_vector(g);
    ScatterSeries s{occ.kind, {}};
    s.points.reserve(g.node_count());
    for (Eigen::Index i = 0; i < k.size(); ++i) s.points.push_back({k(i), occ.values(i)});
    return s;
}

RankComparison compare_rankings(const OccupationVector& a, const OccupationVector& b, std::size_t k) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::NodeSetMismatch, "occupation vectors have different sizes");
    std::unordered_map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < n; ++i) where.emplace(b.label(i), i);
    // b's values re-indexed to a's node order.
    Vector aligned(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto it = where.find(a.label(i));
        if (it == where.end()) {
            throw Error(ErrorCode::NodeSetMismatch, "node '" + a.label(i) + "' missing from second vector");
        }
        aligned(static_cast<Eigen::Index>(i)) = b.values(static_cast<Eigen::Index>(it->second));
    }
    OccupationVector b_aligned{b.kind, aligned, a.labels};

    const Ranking top_a = rank_nodes(a, k);
    const Ranking top_b = rank_nodes(b_aligned, k);
    std::vector<bool> in_a(n, false);
    for (const auto& e : top_a.entries) in_a[e.index] = true;
    std::size_t shared = 0;
    for (const auto& e : top_b.entries) shared += in_a[e.index] ? 1 : 0;

    double rho = 1.0;
    if (n > 1) {
        const auto order_a = ranking_order(a.values, *a.labels);
        const auto order_b = ranking_order(aligned, *a.labels);
        std::vector<double> rank_a(n), rank_b(n);
        for (std::size_t r = 0; r < n; ++r) {
            rank_a[order_a[r]] = static_cast<double>(r);
            rank_b[order_b[r]] = static_cast<double>(r);
        }
        double d2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) d2 += (rank_a[i] - rank_b[i]) * (rank_a[i] - rank_b[i]);
        const double nn = static_cast<double>(n);
        rho = 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0));
    }
    return {static_cast<double>(shared) / static_cast<double>(k), rho};
}

OccupationVector classical_occupation(const Graph& g, ClassicalMethod method,
                                      const std::optional<IntegrationConfig>& euler) {
    OccupationVector closed = stationary_occupation(g);
    if (method == ClassicalMethod::ClosedForm) return closed;

    const GeneratorMatrix h = generator_matrix(g, GeneratorKind::Normalized);
    const IntegrationConfig cfg = euler.value_or(default_euler_config(h));
    const EulerResult run = euler_evolve(h, uniform_distribution(g), cfg);
    if (!run.converged) {
        throw Error(ErrorCode::InvalidConfig, "Euler integration did not reach stationarity within horizon " +
                                                  std::to_string(cfg.horizon));
    }
    const Vector& last = run.trajectory.back().values;
    return {OccupationKind::Classical, last / last.sum(), closed.labels};
}

OccupationVector quantum_occupation(const Graph& g, const InitialState& psi0, QuantumMethod method,
                                    const IntegrationConfig& leapfrog) {
    const DenseMatrix h = quantum_hamiltonian(g);
    const QuantumState state = initial_state(g, psi0);
    return method == QuantumMethod::Spectral ? long_time_mean(h, state)
                                             : long_time_mean_numeric(h, state, leapfrog);
}

FullReport full_report(const Graph& g, const ReportOptions& options) {
    require_no_isolated(g);
    if (!is_connected(g)) {
        throw Error(ErrorCode::DisconnectedGraph,
                    "graph has " + std::to_string(connected_components(g).size()) + " connected components");
    }
    if (options.top_k == 0) throw Error(ErrorCode::InvalidConfig, "top_k must be at least 1");

    auto quantum = std::async(std::launch::async, [&] {
        return quantum_occupation(g, options.psi0, options.quantum, options.leapfrog);
    });
    OccupationVector op_c = classical_occupation(g, options.classical, options.euler);
    OccupationVector op_q = quantum.get();

    const std::size_t n = g.node_count();
    const std::size_t k = std::min(options.top_k, n);
    const DegreeVector degree = degree_vector(g);
    const auto order_c = ranking_order(op_c.values, g.labels());
    const auto order_q = ranking_order(op_q.values, g.labels());
    std::vector<std::size_t> rank_c(n), rank_q(n);
    for (std::size_t r = 0; r < n; ++r) {
        rank_c[order_c[r]] = r + 1;
        rank_q[order_q[r]] = r + 1;
    }

    FullReport report{{}, op_c, op_q, rank_nodes(op_c, k), rank_nodes(op_q, k),
                      degree_occupation_series(g, op_c), degree_occupation_series(g, op_q),
                      compare_rankings(op_c, op_q, k)};
    report.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ei = static_cast<Eigen::Index>(i);
        report.rows.push_back({g.label(i), degree(ei), op_c.values(ei), op_q.values(ei), rank_c[i], rank_q[i]});
    }
    return report;
}

}  // namespace occwalk
