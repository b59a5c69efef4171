#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

enum class ErrorKind {
    InvalidStructure,
    MemberNotInStructure,
    EndpointMismatch,
    NotAPath,
    InvalidCenter,
    InvalidNodalData,
    EquivalenceViolation,
    NotConnected,
    ParityInconsistent,
    UnassignedComponent,
    NonPositive,
    DanglingAdjacency,
    SeparatrixSpansComponents,
    UnknownIndex,
    IndexOutOfRange,
    UnclassifiedTSequence,
    InvalidArgument,
    InputFormat,
};

/// Stable machine-readable name, e.g. "InvalidCenter".
std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so that callers (the CLI
/// in particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// InvalidCenter raised while replaying a blow-up sequence; `step` is the
/// zero-based position of the offending center.
class BlowupStepError : public Error {
public:
    BlowupStepError(std::size_t step, const std::string& message)
        : Error(ErrorKind::InvalidCenter, "step " + std::to_string(step) + ": " + message),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace strata
