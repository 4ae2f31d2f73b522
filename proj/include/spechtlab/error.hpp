#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spechtlab {

enum class Errc {
  InvalidPartition,
  InvalidPrime,
  UnsupportedPrime,
  NotSubtractable,
  NotDivisible,
  NodeOutsideDiagram,
  SizeMismatch,
  ZeroInput,
  SizeCapExceeded,
  TooFewBeads,
  BadRunnerIndex,
  InvalidExpansion,
  NotRegular,
  NotRestricted,
  NotJm,
  NotACore,
  SwapNotLegal,
  ChainNotFoundWithinBound,
  NotSimple,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spechtlab
