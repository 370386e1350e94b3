#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tl {

enum class ErrorCode {
  DimensionMismatch,
  NotFullRank,
  NonBinarySlack,
  NotSpanning,
  DegenerateSeed,
  RepeatedLine,
  NoCore,
  NonBinary,
  NotAFace,
  NotInCone,
  DimensionTooLarge,
  NonBinaryProduct,
  NotInLattice,
  EmptyDecode,
  IsolatedNode,
  NotBipartite,
  StoreConflict,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by the library. The CLI maps every instance to exit 3.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tl
