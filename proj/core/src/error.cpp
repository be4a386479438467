#include "occwalk/error.hpp"

namespace occwalk {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::IsolatedNode: return "IsolatedNode";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::UnstableStep: return "UnstableStep";
        case ErrorCode::EigensolverFailure: return "EigensolverFailure";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::KTooLarge: return "KTooLarge";
        case ErrorCode::NodeSetMismatch: return "NodeSetMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace occwalk
