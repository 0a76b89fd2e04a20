#include "eigensym/error.hpp"

namespace eigensym {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadChecksumChar: return "BadChecksumChar";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::RepeatedPoint: return "RepeatedPoint";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotEnumerated: return "NotEnumerated";
    case ErrorKind::VectorNotInSubspace: return "VectorNotInSubspace";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::VectorOutsideAmbient: return "VectorOutsideAmbient";
    case ErrorKind::MissingIntertwiner: return "MissingIntertwiner";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace eigensym
