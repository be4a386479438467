#include "occwalk/occupation.hpp"

namespace occwalk {

Labels share_labels(const Graph& g) { return std::make_shared<const std::vector<std::string>>(g.labels()); }

ProbabilityVector point_mass(const Graph& g, std::size_t i) {
    ProbabilityVector p{Vector::Zero(static_cast<Eigen::Index>(g.node_count())), share_labels(g)};
    p.values(static_cast<Eigen::Index>(i)) = 1.0;
    return p;
}

ProbabilityVector uniform_distribution(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    return {Vector::Constant(n, 1.0 / static_cast<double>(n)), share_labels(g)};
}

const char* to_string(OccupationKind kind) noexcept {
    return kind == OccupationKind::Classical ? "classical" : "quantum";
}

}  // namespace occwalk
