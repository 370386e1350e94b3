#include "twolevel/binary_matrix.hpp"

#include <algorithm>
#include <set>

#include "twolevel/errors.hpp"

namespace tl {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::string_view> rows)
    : BinaryMatrix(from_strings(std::vector<std::string>(rows.begin(), rows.end()))) {}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged binary matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw Error(ErrorCode::NonBinary, "binary matrix entry must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

std::vector<std::uint8_t> BinaryMatrix::row(std::size_t r) const {
  return {bits_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::uint8_t> BinaryMatrix::col(std::size_t c) const {
  std::vector<std::uint8_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

BinaryMatrix BinaryMatrix::submatrix(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
  BinaryMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.set(i, j, (*this)(rows[i], cols[j]));
  return s;
}

BinaryMatrix BinaryMatrix::permuted(const std::vector<std::size_t>& row_order,
                                    const std::vector<std::size_t>& col_order) const {
  return submatrix(row_order, col_order);
}

bool BinaryMatrix::has_distinct_rows() const {
  std::set<std::vector<std::uint8_t>> seen;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!seen.insert(row(r)).second) return false;
  return true;
}

bool BinaryMatrix::has_distinct_cols() const {
  std::set<std::vector<std::uint8_t>> seen;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!seen.insert(col(c)).second) return false;
  return true;
}

RatMatrix BinaryMatrix::to_rat() const {
  RatMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  return m;
}

std::string BinaryMatrix::row_string(std::size_t r) const {
  std::string s(cols_, '0');
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c)) s[c] = '1';
  return s;
}

std::strong_ordering operator<=>(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.bits_.begin(), a.bits_.end(), b.bits_.begin(), b.bits_.end());
}

}  // namespace tl
