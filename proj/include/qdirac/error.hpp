#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdirac {

enum class ErrorKind {
    DimensionMismatch,
    NonFinite,
    NotSquare,
    InvalidTolerance,
    NotColumn,
    WrongDimension,
    NotNormalized,
    WrongArity,
    NotProductState,
    NotUnitary,
    IndexOutOfRange,
    ZeroProbabilityBranch,
    InvalidTable,
    PromiseViolated,
    IndeterminateOutcome,
    NotACloner,
    OutOfRange,
    UnknownName,
    InvalidGrid,
    EmptyInput,
    ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type. The kind
// is what the CLI prints and what tests match on; what() carries the detail.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace qdirac
