#pragma once

#include <stdexcept>
#include <string>

namespace sqtile {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define SQTILE_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}      \
  }

SQTILE_DEFINE_ERROR(DegenerateDirection);
SQTILE_DEFINE_ERROR(MalformedComplex);
SQTILE_DEFINE_ERROR(NonComposable);
SQTILE_DEFINE_ERROR(TypeMismatch);
SQTILE_DEFINE_ERROR(NotALoop);
SQTILE_DEFINE_ERROR(ConstructionInvalid);
SQTILE_DEFINE_ERROR(StabilizerViolation);
SQTILE_DEFINE_ERROR(DegenerateSample);
SQTILE_DEFINE_ERROR(TraceMismatch);
SQTILE_DEFINE_ERROR(DegenerateAxis);
SQTILE_DEFINE_ERROR(DegenerateIntersection);
SQTILE_DEFINE_ERROR(ParseError);

#undef SQTILE_DEFINE_ERROR

} // namespace sqtile
