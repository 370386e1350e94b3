#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twolevel/rational.hpp"

namespace tl {

struct HermiteForm {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, h == u * input
};

// Row-style HNF: h is upper echelon, every pivot is positive, and entries
// above a pivot lie in [0, pivot). Zero rows are moved to the bottom.
HermiteForm hnf(const IntMatrix& m);

// Pivot column of each nonzero row of an HNF matrix.
std::vector<std::size_t> hnf_pivots(const IntMatrix& h);

// Integer lattice given by linearly independent generators.
class IntLatticeBasis {
 public:
  IntLatticeBasis(std::size_t dim, std::vector<IntVector> vectors);

  // Basis of the lattice generated by arbitrary (possibly dependent) vectors.
  static IntLatticeBasis generated_by(std::size_t dim, std::span<const IntVector> vectors);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<IntVector>& vectors() const noexcept { return vectors_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> vectors_;
};

bool lattice_member(const IntLatticeBasis& lattice, std::span<const Int> v);

// |det| of a full-rank lattice basis (dim vectors in dimension dim).
Int lattice_determinant(const IntLatticeBasis& lattice);

// Integer coefficients y with sum_i y_i * lattice.vectors()[i] == v, when v
// is in the lattice.
std::optional<IntVector> lattice_coordinates(const IntLatticeBasis& lattice, std::span<const Int> v);

}  // namespace tl
