#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace branchforge {

// All arithmetic in the symbolic modules is exact.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class ErrorCode {
  EmptyGenerators,
  NonCoprimeGenerators,
  InvalidPuiseux,
  NotMinimal,
  Unrepresentable,
  NormalizationFailed,
  DimensionMismatch,
  ZeroWeightParameter,
  LiftFailed,
  BudgetExceeded,
  InsufficientFields,
  InterpolationMismatch,
  UnsupportedField,
  UsageError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace branchforge
