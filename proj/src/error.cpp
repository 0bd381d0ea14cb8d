#include "bergecov/error.hpp"

namespace bergecov {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::EdgeSizeOutOfRange: return "EdgeSizeOutOfRange";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::RepeatedVertexInEdge: return "RepeatedVertexInEdge";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidCertificate: return "InvalidCertificate";
        case ErrorKind::NotCovering: return "NotCovering";
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::LengthOutOfRange: return "LengthOutOfRange";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotUniform: return "NotUniform";
        case ErrorKind::InvalidParameters: return "InvalidParameters";
        case ErrorKind::PreconditionNotChecked: return "PreconditionNotChecked";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotRainbow: return "NotRainbow";
        case ErrorKind::ColoringMismatch: return "ColoringMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(to_string(kind)) + ": " + message),
    _kind(kind)
{
}

void fail(ErrorKind kind, const std::string & message)
{
    throw Error(kind, message);
}

void invariant_violation(const std::string & message)
{
    throw Error(ErrorKind::InternalInvariantViolation, message);
}

}
