#pragma once

#include <stdexcept>
#include <string>

namespace liaison {

// Error taxonomy for the algebra engine.  Every failure mode that a caller
// can provoke with legal-looking input gets a stable code; internal logic
// errors use assertions instead.
enum class ErrorCode {
  ParseError,          // bad polynomial / session syntax
  RingMismatch,        // operands built over different rings
  NotHomogeneous,      // inhomogeneous input where graded input is required
  DegenerateQuotient,  // ideal quotient by the zero ideal
  ZeroModule,          // operation undefined on the zero module
  EmptyScheme,         // operation undefined on the unit ideal
  NotEquidimensional,  // mixed-dimension input where unmixed is required
  NotGorenstein,       // linking ideal is not Gorenstein
  NotContained,        // linking ideal not contained in the linked ideal
  DimensionMismatch,   // dimensions of linked ideals disagree
  SelfLinkDegenerate,  // residual of a link is the unit ideal
  WrongDimension,      // suite invoked on a module of the wrong dimension
  InconclusiveWindow,  // verification window too small to decide
  CostLimit,           // oracle slice exceeds the configured cost guard
  BadArgument,         // malformed command / argument
};

const char* error_code_name(ErrorCode c);

class LiaisonError : public std::runtime_error {
 public:
  LiaisonError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw LiaisonError(code, what);
}

}  // namespace liaison
