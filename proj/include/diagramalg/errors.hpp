#pragma once

#include <stdexcept>
#include <string>

namespace diagramalg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DIAGRAMALG_DEFINE_ERROR(Name)      \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

DIAGRAMALG_DEFINE_ERROR(MalformedPartition);
DIAGRAMALG_DEFINE_ERROR(GroundMismatch);
DIAGRAMALG_DEFINE_ERROR(SizeLimit);
DIAGRAMALG_DEFINE_ERROR(SizeMismatch);
DIAGRAMALG_DEFINE_ERROR(BadIndex);
DIAGRAMALG_DEFINE_ERROR(ParseError);
DIAGRAMALG_DEFINE_ERROR(BoundExceeded);
DIAGRAMALG_DEFINE_ERROR(ResourceLimit);
// Raised when an internal invariant breaks; reaching one is a bug.
DIAGRAMALG_DEFINE_ERROR(InvariantViolation);

#undef DIAGRAMALG_DEFINE_ERROR

}  // namespace diagramalg
