#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace occwalk {

enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    NonPositiveWeight,
    IsolatedNode,
    DisconnectedGraph,
    DimensionMismatch,
    UnstableStep,
    EigensolverFailure,
    UnknownNode,
    InvalidConfig,
    KTooLarge,
    NodeSetMismatch,
    ParseError,
    IoError,
};

/// Stable identifier used in error records, e.g. "IsolatedNode".
std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. The code is machine-readable,
/// the message carries context (node label, line number, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace occwalk
