#pragma once

#include "occwalk/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace occwalk {

/// Node labels shared between the many vectors produced for one graph.
using Labels = std::shared_ptr<const std::vector<std::string>>;

Labels share_labels(const Graph& g);

/// Distribution over nodes: nonnegative, sums to 1. `labels` may be null for
/// vectors built without a graph.
struct ProbabilityVector {
    Vector values;
    Labels labels;

    std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
    double sum() const { return values.sum(); }
};

/// One-hot distribution at node i.
ProbabilityVector point_mass(const Graph& g, std::size_t i);
ProbabilityVector uniform_distribution(const Graph& g);

enum class OccupationKind { Classical, Quantum };

/// Occupation centrality: OP_c (classical stationary state) or OP_q (quantum
/// long-time mean).
struct OccupationVector {
    OccupationKind kind = OccupationKind::Classical;
    Vector values;
    Labels labels;

    std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
    const std::string& label(std::size_t i) const { return labels->at(i); }
};

const char* to_string(OccupationKind kind) noexcept;

}  // namespace occwalk
