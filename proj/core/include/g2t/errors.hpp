#pragma once

#include <stdexcept>
#include <string>

namespace g2t {

// Every throwing path in the library uses Error with one of these codes, so
// callers (and the CLI exit-code mapping) can dispatch without string matching.
enum class Err {
  InvalidArgument,
  ParseError,
  FieldTooLarge,
  NoSubfield,
  DivideByZero,
  NotSquarefree,
  InvalidCurve,
  EvenCharacteristic,
  ModelUnsupported,
  NotOnJacobian,
  EnumerationTooLarge,
  SamplingFailed,
  BasisNotInvariant,
  ExceedsCap,
  SupportCollision,
  PairingDegenerate,
  InvalidWeil,
  Reducible,
  PreconditionViolated,
  OrderOdd,
  EllTooSmall,
  CongruenceFailure,
  Unimplemented,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const noexcept { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw Error(code, what);
}

// Internal invariant check. These fire only on library bugs, never on bad input.
#define G2T_CHECK(cond, msg)                                       \
  do {                                                             \
    if (!(cond)) ::g2t::fail(::g2t::Err::Internal, (msg));         \
  } while (0)

}  // namespace g2t
