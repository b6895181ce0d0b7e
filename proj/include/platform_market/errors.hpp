#pragma once

#include <stdexcept>
#include <string>

namespace pmkt {

// Domain error with a stable machine-readable code. Codes in use:
// BadRational, NegativeValue, DimensionMismatch, SellerNotInQuery,
// LengthMismatch, NotHomogeneous, TooLarge, StepLimit,
// EmptyEquilibriumList, AlphaOne, BoundVacuous, UnknownFixture,
// BadParams, UsageError.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

}  // namespace pmkt
