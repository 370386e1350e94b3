#pragma once

#include <atomic>
#include <cstddef>
#include <span>
#include <vector>

#include "twolevel/binary_matrix.hpp"
#include "twolevel/rational.hpp"

namespace tl {

using VectorSet = std::vector<RatVector>;  // kept sorted and duplicate-free

// Sorts lexicographically and drops duplicates.
VectorSet make_vector_set(std::vector<RatVector> vectors);

// A pair (A, B) of finite vector sets in Q^d, both spanning, with every
// inner product <a, b> in {0, 1}. The constructor validates all of this.
// A 2-level configuration in the strict sense is one where is_maximal() holds.
class Configuration {
 public:
  Configuration(std::size_t d, std::vector<RatVector> a, std::vector<RatVector> b);

  Configuration(const Configuration& other);
  Configuration& operator=(const Configuration& other);

  std::size_t dim() const noexcept { return d_; }
  const VectorSet& a() const noexcept { return a_; }
  const VectorSet& b() const noexcept { return b_; }

  // A == closure(B) and B == closure(A). Computed once and cached.
  bool is_maximal() const;

  friend bool operator==(const Configuration& x, const Configuration& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  friend Configuration maximal_completion(std::span<const RatVector> seed);

  std::size_t d_;
  VectorSet a_;
  VectorSet b_;
  // -1 unknown, 0 no, 1 yes; every writer stores the same value.
  mutable std::atomic<int> maximal_{-1};
};

// Slack matrix S(A, B) with S[i][j] = <a_i, b_j>; rows follow the sorted order of A,
// columns the sorted order of B.
struct SlackMatrix {
  BinaryMatrix matrix;
  VectorSet row_labels;
  VectorSet col_labels;
};

SlackMatrix slack_matrix(const Configuration& cfg);

// All y with <y, x> in {0, 1} for every x in `vectors`. Needs a spanning
// family; the result is sorted, has at most 2^d elements, and contains 0.
VectorSet closure(std::span<const RatVector> vectors);

// A := closure(seed), B := closure(A). Throws NotSpanning for a non-spanning
// seed and DegenerateSeed when closure(seed) does not span.
Configuration maximal_completion(std::span<const RatVector> seed);

// Membership in M_d for d = rank(m) together with maximality.
struct MdVerdict {
  bool member = false;  // distinct rows and columns, rank >= 1
  std::size_t rank = 0;
  bool maximal = false;
};
MdVerdict classify_in_Md(const BinaryMatrix& m);
bool is_maximal_in_Md(const BinaryMatrix& m);

// Rank factorization of a slack matrix. Throws RepeatedLine on repeated rows
// or columns and InvalidArgument for the zero matrix.
Configuration from_slack_matrix(const BinaryMatrix& m);

enum class Side { A, B };

// Linearly equivalent configuration whose chosen side is 0/1, together with
// the position of every new vector in the source configuration.
struct NormalizedConfiguration {
  Configuration config;
  std::vector<std::size_t> a_source;  // config.a()[i] is the image of source.a()[a_source[i]]
  std::vector<std::size_t> b_source;
  RatMatrix transform;                // B' = transform * B, A' = transform^{-T} * A
};

NormalizedConfiguration normalize_to_binary(const Configuration& cfg, Side side);

bool spans(std::span<const RatVector> vectors, std::size_t d);

}  // namespace tl
