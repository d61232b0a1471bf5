#pragma once

#include <stdexcept>
#include <string>

namespace powerindex {

enum class ErrorKind {
  InvalidInput,
  InvalidCoalition,
  DegenerateSystem,
  UnsupportedCase,
  PreconditionFailed,
  InvalidFamily,
  IntegerBoundary,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base for every error raised by the library. The kind lets callers (the
/// CLI in particular) map failures onto exit codes without RTTI games.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define POWERINDEX_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {} \
  }

POWERINDEX_DEFINE_ERROR(InvalidInput);
POWERINDEX_DEFINE_ERROR(InvalidCoalition);
POWERINDEX_DEFINE_ERROR(DegenerateSystem);
POWERINDEX_DEFINE_ERROR(UnsupportedCase);
POWERINDEX_DEFINE_ERROR(PreconditionFailed);
POWERINDEX_DEFINE_ERROR(InvalidFamily);
POWERINDEX_DEFINE_ERROR(IntegerBoundary);

#undef POWERINDEX_DEFINE_ERROR

}  // namespace powerindex
