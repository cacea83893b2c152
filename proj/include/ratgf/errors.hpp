#pragma once

#include <stdexcept>
#include <string>

namespace ratgf {

// Every failure the library reports on purpose derives from Error, so callers
// (the CLI in particular) can map kinds to exit codes without string matching.
enum class ErrorKind {
  Parse,
  Unbounded,
  EmptyPolytope,
  NotFullDimensional,
  DegreeBudgetExceeded,
  ZeroSeries,
  NonGenericDirection,
  CapExceeded,
  Precondition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define RATGF_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {} \
  };

RATGF_DEFINE_ERROR(Unbounded)
RATGF_DEFINE_ERROR(EmptyPolytope)
RATGF_DEFINE_ERROR(NotFullDimensional)
RATGF_DEFINE_ERROR(DegreeBudgetExceeded)
RATGF_DEFINE_ERROR(ZeroSeries)
RATGF_DEFINE_ERROR(NonGenericDirection)
RATGF_DEFINE_ERROR(CapExceeded)

#undef RATGF_DEFINE_ERROR

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

}  // namespace ratgf
