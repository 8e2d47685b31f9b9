#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  ZeroVector,
  EmptyInput,
  DimensionMismatch,
  NotFullRank,
  NotStronglyConvex,
  NotFullDimensional,
  NotInCone,
  NotInLattice,
  NotInteriorPoint,
  CoefficientOutOfRange,
  NotQCartier,
  NoPointBelowBound,
  InvalidWindow,
  TooManyRays,
  DependentVectors,
  InvalidGerm,
  BadParam,
  SamplingExhausted,
  Parse,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every module. The code is stable and machine-readable;
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input document. `line` is 1-based and 0 when the error is not tied
// to a position in the text; `field` is a JSON-pointer-like path.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::string field)
      : Error(ErrorCode::Parse, describe(message, line, field)), line_(line), field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string describe(const std::string& message, std::size_t line, const std::string& field) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += field + ": ";
    return out + message;
  }

  std::size_t line_;
  std::string field_;
};

// A well-formed document describing an invalid germ. Keeps the underlying code.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
