#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bergecov {

enum class ErrorKind {
    DuplicateEdge,
    EdgeSizeOutOfRange,
    VertexOutOfRange,
    RepeatedVertexInEdge,
    EmptySubset,
    IndexOutOfRange,
    InvalidCertificate,
    NotCovering,
    TooFewVertices,
    LengthOutOfRange,
    CapExceeded,
    DimensionMismatch,
    NotUniform,
    InvalidParameters,
    PreconditionNotChecked,
    PreconditionFailed,
    NotRainbow,
    ColoringMismatch,
    ParseError,
    InternalInvariantViolation,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string & message);

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

[[noreturn]] void fail(ErrorKind kind, const std::string & message);

// Raised when a step that the constructive argument declares impossible
// actually happens.
[[noreturn]] void invariant_violation(const std::string & message);

}
