#pragma once

#include "occwalk/classical.hpp"
#include "occwalk/graph.hpp"
#include "occwalk/occupation.hpp"
#include "occwalk/quantum.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace occwalk {

/// Full ordering of node indices: descending value, ties by lexicographic label.
std::vector<std::size_t> ranking_order(const Vector& values, const std::vector<std::string>& labels);

struct RankedNode {
    std::size_t rank;  ///< 1-based
    std::size_t index;
    std::string label;
    double value;
};

struct Ranking {
    OccupationKind kind = OccupationKind::Classical;
    std::size_t k = 0;
    std::vector<RankedNode> entries;
};

/// Top-k nodes. Throws KTooLarge when k exceeds the node count, InvalidConfig for k = 0.
Ranking rank_nodes(const OccupationVector& occ, std::size_t k);

struct ScatterPoint {
    double degree;
    double occupation;
};

struct ScatterSeries {
    OccupationKind kind = OccupationKind::Classical;
    std::vector<ScatterPoint> points;  ///< node order
};

/// (k_i, occ_i) per node. Throws DimensionMismatch.
ScatterSeries degree_occupation_series(const Graph& g, const OccupationVector& occ);

struct RankComparison {
    double overlap_at_k;  ///< |topK(a) ∩ topK(b)| / k
    double spearman;      ///< over the full tie-broken rankings
};

inline constexpr const char* kRankCorrelationName = "spearman";

/// Nodes are matched by label. Throws NodeSetMismatch, KTooLarge.
RankComparison compare_rankings(const OccupationVector& a, const OccupationVector& b, std::size_t k);

enum class ClassicalMethod { ClosedForm, Euler };
enum class QuantumMethod { Spectral, Leapfrog };

struct ReportOptions {
    std::size_t top_k = 20;
    InitialState psi0 = InitialState::uniform();
    ClassicalMethod classical = ClassicalMethod::ClosedForm;
    QuantumMethod quantum = QuantumMethod::Spectral;
    std::optional<IntegrationConfig> euler;  ///< default_euler_config when empty
    IntegrationConfig leapfrog = default_leapfrog_config();
};

struct ReportRow {
    std::string node;
    double degree;
    double op_c;
    double op_q;
    std::size_t rank_c;
    std::size_t rank_q;
};

struct FullReport {
    std::vector<ReportRow> rows;  ///< node order
    OccupationVector op_c;
    OccupationVector op_q;
    Ranking top_c;
    Ranking top_q;
    ScatterSeries classical;
    ScatterSeries quantum;
    RankComparison comparison;
};

/// OP_c via the selected classical route. The Euler route starts from the
/// uniform distribution and must converge before its horizon.
OccupationVector classical_occupation(const Graph& g, ClassicalMethod method,
                                      const std::optional<IntegrationConfig>& euler = std::nullopt);
OccupationVector quantum_occupation(const Graph& g, const InitialState& psi0, QuantumMethod method,
                                    const IntegrationConfig& leapfrog = default_leapfrog_config());

/// OP_c and OP_q (computed concurrently), rankings cut at min(top_k, n),
/// scatter series and their comparison. Requires a connected graph without
/// isolated nodes.
FullReport full_report(const Graph& g, const ReportOptions& options = {});

}  // namespace occwalk
