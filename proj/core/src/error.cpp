#include "strata/error.hpp"

namespace strata {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidStructure: return "InvalidStructure";
        case ErrorKind::MemberNotInStructure: return "MemberNotInStructure";
        case ErrorKind::EndpointMismatch: return "EndpointMismatch";
        case ErrorKind::NotAPath: return "NotAPath";
        case ErrorKind::InvalidCenter: return "InvalidCenter";
        case ErrorKind::InvalidNodalData: return "InvalidNodalData";
        case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::ParityInconsistent: return "ParityInconsistent";
        case ErrorKind::UnassignedComponent: return "UnassignedComponent";
        case ErrorKind::NonPositive: return "NonPositive";
        case ErrorKind::DanglingAdjacency: return "DanglingAdjacency";
        case ErrorKind::SeparatrixSpansComponents: return "SeparatrixSpansComponents";
        case ErrorKind::UnknownIndex: return "UnknownIndex";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::UnclassifiedTSequence: return "UnclassifiedTSequence";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InputFormat: return "InputFormat";
    }
    return "Unknown";
}

}  // namespace strata
