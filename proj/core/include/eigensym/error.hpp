#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigensym {

enum class ErrorKind {
  // graph ingestion
  MalformedLine,
  EndpointOutOfRange,
  SelfLoop,
  DuplicateEdge,
  BadChecksumChar,
  LengthMismatch,
  UnknownFamily,
  BadParameter,
  // numerics
  NoConvergence,
  // permutations and groups
  RepeatedPoint,
  PointOutOfRange,
  DimensionMismatch,
  CapExceeded,
  NotEnumerated,
  // representation
  VectorNotInSubspace,
  NotInvariant,
  NotIrreducible,
  DecompositionFailed,
  // span analysis
  VectorOutsideAmbient,
  MissingIntertwiner,
  ConstructionFailed,
  // broken internal invariant
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eigensym
