#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twolevel/binary_matrix.hpp"

namespace tl {

// Representative of a 0/1 matrix under independent row and column
// permutations. Transposes are NOT identified: a matrix and its transpose
// share a form only when they are permutation-equivalent.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(BinaryMatrix representative) : matrix_(std::move(representative)) {}

  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t cols() const noexcept { return matrix_.cols(); }
  const BinaryMatrix& matrix() const noexcept { return matrix_; }

  // Shape as two big-endian uint32 values, then the row-major bits packed
  // most-significant-bit first and zero-padded to a whole byte.
  std::vector<std::uint8_t> bytes() const;
  // Lowercase hex SHA-256 of bytes().
  std::string sha256() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.matrix_ <=> b.matrix_;
  }

 private:
  BinaryMatrix matrix_;
};

// Individualization-refinement search over rows and columns keeping the
// lexicographically least row-major bit string among the leaves.
CanonicalForm canonical_form(const BinaryMatrix& m);

// Least of the forms of m and its transpose.
CanonicalForm canonical_form_up_to_transpose(const BinaryMatrix& m);

bool equivalent(const BinaryMatrix& m1, const BinaryMatrix& m2);

// One representative per class, sorted by canonical form.
std::vector<CanonicalForm> dedup_classes(const std::vector<BinaryMatrix>& matrices);

// Number of classes left after additionally identifying each form with the
// form of its transpose.
std::size_t count_up_to_transpose(const std::vector<CanonicalForm>& forms);

std::string sha256_hex(const std::vector<std::uint8_t>& bytes);

}  // namespace tl
