#pragma once

#include <stdexcept>
#include <string>

namespace twistalg {

enum class Errc {
  CompositeCharacteristic,
  OrderDivisibleByP,
  OrderNotSupported,
  NotInvertible,
  NoExtension,
  InvalidAction,
  BadFormOrder,
  NotAnAutomorphism,
  NotCohomologous,
  BadForm,
  NotIntegralM,
  EigenvaluesNotInField,
  DimensionMismatch,
  NoSolution,
  ZNotCentral,
  RelationFails,
  CommutationFails,
  SpanDeficient,
  NoInvertibleSolution,
  MultiplicativityFails,
  NonTerminating,
  RadicalUndetermined,
  ParseError,
  ValidationError,
};

const char* to_string(Errc code);

/// Every failure in the library is reported through this type; `code()`
/// names the failing check so the CLI can print it verbatim.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace twistalg
