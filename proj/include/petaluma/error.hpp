#pragma once

#include <stdexcept>
#include <string>

namespace petaluma {

enum class Errc {
  EvenLength,
  NotPermutation,
  LengthMismatch,
  OutOfRange,
  ParityViolation,
  NormalizationFailure,
  IntegralityFailure,
  UnitFailure,
  TooLarge,
  ZeroEntry,
  NotDisjoint,
  MultiComponent,
  NotSeparable,
  NotThreeEdgeConnected,
  SyntaxError,
  InconsistentCode,
  ParamError,
  IoError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace petaluma
