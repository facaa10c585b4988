#pragma once

#include <stdexcept>
#include <string>

namespace tatlas {

/// Error categories surfaced by the library. The numeric values are part of
/// the C API (see tatlas.h) and must stay stable.
enum class ErrorCode : int {
  kOk = 0,
  kModulusMismatch = 1,
  kNonInvertible = 2,
  kNonDivisor = 3,
  kSizeCapExceeded = 4,
  kNotASubgroup = 5,
  kNotNormal = 6,
  kNonPrimeModulus = 7,
  kNotSolvableAndTooLarge = 8,
  kNotSolvable = 9,
  kSpecViolation = 10,
  kUnknownCMPair = 11,
  kInvalidArgument = 12,
  kParseError = 13,
  kIoError = 14,
  kInternal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class AtlasError : public std::runtime_error {
 public:
  AtlasError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw AtlasError(code, what);
}

}  // namespace tatlas
