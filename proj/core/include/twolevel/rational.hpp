#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tl {

// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntMatrix operator*(const IntMatrix& rhs) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
RatVector mat_vec(const RatMatrix& m, std::span<const Rat> v);

RatVector to_rat(std::span<const Int> v);
RatVector to_rat(std::span<const int> v);
bool is_integral(std::span<const Rat> v);
bool is_binary(std::span<const Rat> v);
bool is_zero(std::span<const Rat> v);
IntVector to_int(std::span<const Rat> v);  // requires is_integral(v)

// "p/q" or "p"; throws ParseError on anything else.
Rat parse_rat(std::string_view text);
std::string format_rat(const Rat& r);
std::string format_vector(std::span<const Rat> v);

}  // namespace tl
