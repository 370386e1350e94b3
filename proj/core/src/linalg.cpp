#include "twolevel/linalg.hpp"

#include <utility>

#include "twolevel/errors.hpp"

namespace tl {
namespace {

// Each row scaled by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

// Bareiss elimination to row echelon form restricted to the first `ncols`
// columns. Returns the pivot columns; rows past the pivots are zero in those
// columns. The sign of row swaps is accumulated into *sign when given.
std::vector<std::size_t> bareiss(IntMatrix& a, std::size_t ncols, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss(a, a.cols()).size();
}

std::size_t rank(const RatMatrix& m) {
  IntMatrix a = clear_denominators(m);
  return bareiss(a, a.cols()).size();
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rat> y) {
  if (y.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length differs from row count");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = y[r];
  }
  IntMatrix a = clear_denominators(aug);
  const auto pivots = bareiss(a, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  RatVector x(n);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    Rat s = Rat(a(k, n));
    for (std::size_t j = c + 1; j < n; ++j)
      if (x[j] != 0) s -= Rat(a(k, j)) * x[j];
    x[c] = s / Rat(a(k, c));
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotFullRank, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  // Gauss-Jordan over Q; the matrices inverted here are at most (d+1)x(d+1).
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorCode::NotFullRank, "matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
    const Rat piv = aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Rat f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  const auto pivots = bareiss(a, a.cols(), &sign);
  if (pivots.size() < a.rows()) return 0;
  return sign * a(a.rows() - 1, a.cols() - 1);
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Rat scale = 1;
  IntMatrix a(m.rows(), m.cols());
  const IntMatrix cleared = clear_denominators(m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    // Row r was multiplied by cleared(r,c)/m(r,c) for any nonzero entry.
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a(r, c) = cleared(r, c);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) {
        scale *= m(r, c) / Rat(cleared(r, c));
        break;
      }
    }
  }
  return Rat(determinant(a)) * scale;
}

std::vector<std::size_t> independent_prefix(std::span<const RatVector> vectors) {
  std::vector<std::size_t> kept;
  if (vectors.empty()) return kept;
  SpanBuilder span(vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (span.add(vectors[i])) kept.push_back(i);
  return kept;
}

RatVector SpanBuilder::reduce(std::span<const Rat> v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "span: vector dimension");
  RatVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivot_[i];
    if (w[p] == 0) continue;
    const Rat f = w[p];  // basis rows are normalized to 1 at the pivot
    for (std::size_t j = p; j < dim_; ++j) w[j] -= f * basis_[i][j];
  }
  return w;
}

bool SpanBuilder::add(std::span<const Rat> v) {
  RatVector w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return false;
  const Rat lead = w[p];
  for (std::size_t j = p; j < dim_; ++j) w[j] /= lead;
  // Keep the basis fully reduced so that reduce() can run in insertion order.
  for (auto& b : basis_) {
    if (b[p] == 0) continue;
    const Rat f = b[p];
    for (std::size_t j = p; j < dim_; ++j) b[j] -= f * w[j];
  }
  basis_.push_back(std::move(w));
  pivot_.push_back(p);
  return true;
}

bool SpanBuilder::contains(std::span<const Rat> v) const {
  const RatVector w = reduce(v);
  return is_zero(w);
}

}  // namespace tl
