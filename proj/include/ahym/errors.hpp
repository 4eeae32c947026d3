#ifndef AHYM_ERRORS_HPP
#define AHYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ahym {

enum class ErrorCode {
  // geometry
  DimensionTooLow,
  BadGrid,
  NonFinite,
  // harmonics
  UnsupportedDimension,
  QuadratureTooCoarse,
  // fields
  DegreeMismatch,
  DegreeOverflow,
  // zerodiff
  DegreeUnsupported,
  NonFiniteField,
  NoBoundaryLimit,
  // indicial
  SingularLeadingCoefficient,
  RootOnCriticalLine,
  // gauge
  NormalComponentPresent,
  NotUnitary,
  NoConvergence,
  LinearSolveFailure,
  // solver
  WeightOutsideWindow,
  IllConditioned,
  NewtonDiverged,
  KernelDetected,
  FieldTooSmall,
  // cli
  UnknownKey,
  OutOfRange,
  MissingRequired,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

} // namespace ahym

#endif
