#include <algorithm>
#include <cstdint>
#include <set>

#include "twolevel/enumerate.hpp"
#include "twolevel/errors.hpp"

namespace tl {
namespace {

constexpr std::size_t kMaxOracleDim = 2;
constexpr std::size_t kMaxOracleSide = 4;

std::vector<std::size_t> bits_of(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if ((mask >> i) & 1U) out.push_back(i);
  return out;
}

bool in_md(const BinaryMatrix& m, std::size_t d) {
  return m.rows() > 0 && m.cols() > 0 && m.has_distinct_rows() && m.has_distinct_cols() && integer_rank(m) == d;
}

}  // namespace

std::size_t integer_rank(const BinaryMatrix& m) {
  // Bareiss elimination in 64-bit integers; entries stay bounded by minors of a 0/1 matrix.
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t k = c + 1; k < m.cols(); ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

bool is_maximal_by_extension(const BinaryMatrix& m) {
  const std::size_t d = integer_rank(m);
  if (d == 0 || !in_md(m, d)) return false;
  const std::set<std::vector<std::uint8_t>> rows = [&] {
    std::set<std::vector<std::uint8_t>> s;
    for (std::size_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
    return s;
  }();
  const std::set<std::vector<std::uint8_t>> cols = [&] {
    std::set<std::vector<std::uint8_t>> s;
    for (std::size_t c = 0; c < m.cols(); ++c) s.insert(m.col(c));
    return s;
  }();

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.cols()); ++mask) {
    std::vector<std::uint8_t> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = (mask >> c) & 1U;
    if (rows.count(row)) continue;
    BinaryMatrix bigger(m.rows() + 1, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) bigger.set(r, c, m(r, c));
    for (std::size_t c = 0; c < m.cols(); ++c) bigger.set(m.rows(), c, row[c]);
    if (integer_rank(bigger) == d) return false;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
    std::vector<std::uint8_t> col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = (mask >> r) & 1U;
    if (cols.count(col)) continue;
    BinaryMatrix bigger(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) bigger.set(r, c, m(r, c));
      bigger.set(r, m.cols(), col[r]);
    }
    if (integer_rank(bigger) == d) return false;
  }
  return true;
}

std::vector<CanonicalForm> oracle_maximal(std::size_t d, std::size_t max_rows, std::size_t max_cols) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  if (d > kMaxOracleDim || max_rows > kMaxOracleSide || max_cols > kMaxOracleSide) {
    throw Error(ErrorCode::DimensionTooLarge, "oracle supports d <= 2 and at most 4 x 4 matrices");
  }
  std::set<CanonicalForm> members;
  for (std::size_t m = 1; m <= max_rows; ++m)
    for (std::size_t n = 1; n <= max_cols; ++n)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
        BinaryMatrix x(m, n);
        for (std::size_t i = 0; i < m * n; ++i) x.set(i / n, i % n, (mask >> i) & 1U);
        if (in_md(x, d)) members.insert(canonical_form(x));
      }

  std::set<CanonicalForm> contained;
  for (const auto& f : members) {
    const BinaryMatrix& x = f.matrix();
    for (std::uint32_t rs = 1; rs < (1U << x.rows()); ++rs)
      for (std::uint32_t cs = 1; cs < (1U << x.cols()); ++cs) {
        if (rs == (1U << x.rows()) - 1 && cs == (1U << x.cols()) - 1) continue;
        contained.insert(canonical_form(x.submatrix(bits_of(rs), bits_of(cs))));
      }
  }
  std::vector<CanonicalForm> out;
  for (const auto& f : members)
    if (!contained.count(f)) out.push_back(f);
  return out;
}

}  // namespace tl
