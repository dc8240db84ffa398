#ifndef SHIFTKIT_ERROR_HPP
#define SHIFTKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shiftkit {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  InvalidArgument,
  Parse,
  SizeLimit,
  StabilityViolation,
  NotShifted,
  ParameterInfeasible,
  IndexOutOfRange,
  DependentSequence,
  GenericityFailure,
  ShiftMismatch,
  ConsistencyFailure,
  VerificationFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace shiftkit

#endif
