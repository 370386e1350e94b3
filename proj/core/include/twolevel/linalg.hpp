#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twolevel/rational.hpp"

namespace tl {

// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Some x with m*x = y, or nullopt when the system is inconsistent. Free
// variables are set to zero, so the answer is deterministic.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rat> y);

// Inverse of a square nonsingular matrix; throws NotFullRank otherwise.
RatMatrix inverse(const RatMatrix& m);

Int determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);

// Greedy scan in the given order: indices of the vectors that are linearly
// independent of all previously kept ones.
std::vector<std::size_t> independent_prefix(std::span<const RatVector> vectors);

// Incremental span membership for a growing family of rational vectors.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  // Adds v if it is independent of the current span; returns whether it was added.
  bool add(std::span<const Rat> v);
  bool contains(std::span<const Rat> v) const;
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  RatVector reduce(std::span<const Rat> v) const;

  std::size_t dim_;
  std::vector<RatVector> basis_;  // reduced rows, pivot_[i] is the leading column of basis_[i]
  std::vector<std::size_t> pivot_;
};

}  // namespace tl
