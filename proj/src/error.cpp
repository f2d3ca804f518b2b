#include "qdirac/error.hpp"

namespace qdirac {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::InvalidTolerance: return "InvalidTolerance";
        case ErrorKind::NotColumn: return "NotColumn";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::WrongArity: return "WrongArity";
        case ErrorKind::NotProductState: return "NotProductState";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ZeroProbabilityBranch: return "ZeroProbabilityBranch";
        case ErrorKind::InvalidTable: return "InvalidTable";
        case ErrorKind::PromiseViolated: return "PromiseViolated";
        case ErrorKind::IndeterminateOutcome: return "IndeterminateOutcome";
        case ErrorKind::NotACloner: return "NotACloner";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::InvalidGrid: return "InvalidGrid";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace qdirac
