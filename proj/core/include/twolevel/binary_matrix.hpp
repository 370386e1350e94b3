#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "twolevel/rational.hpp"

namespace tl {

// Row-major 0/1 matrix. Distinctness of rows and columns is a property checked
// by the operations that need it, not an invariant of the type.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  // Rows given as strings over {0,1}, e.g. {"000", "010"}.
  BinaryMatrix(std::initializer_list<std::string_view> rows);
  static BinaryMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::vector<std::uint8_t> row(std::size_t r) const;
  std::vector<std::uint8_t> col(std::size_t c) const;

  BinaryMatrix transpose() const;
  BinaryMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  BinaryMatrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const;

  bool has_distinct_rows() const;
  bool has_distinct_cols() const;

  RatMatrix to_rat() const;
  std::string row_string(std::size_t r) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
  friend std::strong_ordering operator<=>(const BinaryMatrix& a, const BinaryMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace tl
