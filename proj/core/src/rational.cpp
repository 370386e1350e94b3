#include "twolevel/rational.hpp"

#include <cassert>

#include "twolevel/errors.hpp"

namespace tl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::NonBinarySlack: return "NonBinarySlack";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::DegenerateSeed: return "DegenerateSeed";
    case ErrorCode::RepeatedLine: return "RepeatedLine";
    case ErrorCode::NoCore: return "NoCore";
    case ErrorCode::NonBinary: return "NonBinary";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NonBinaryProduct: return "NonBinaryProduct";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::EmptyDecode: return "EmptyDecode";
    case ErrorCode::IsolatedNode: return "IsolatedNode";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::StoreConflict: return "StoreConflict";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

ParseError::ParseError(const std::string& detail, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + detail),
      line_(line),
      column_(column) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector mat_vec(const RatMatrix& m, std::span<const Rat> v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rat s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

RatVector to_rat(std::span<const Int> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RatVector to_rat(std::span<const int> v) {
  RatVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

bool is_integral(std::span<const Rat> v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

bool is_binary(std::span<const Rat> v) {
  for (const auto& x : v)
    if (x != 0 && x != 1) return false;
  return true;
}

bool is_zero(std::span<const Rat> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector to_int(std::span<const Rat> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    assert(x.get_den() == 1);
    out.push_back(x.get_num());
  }
  return out;
}

Rat parse_rat(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_int(num_text)) throw ParseError("invalid rational '" + std::string(text) + "'", 0, 0);
  Int num(strip_plus(num_text));
  Int den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!valid_int(den_text)) throw ParseError("invalid rational '" + std::string(text) + "'", 0, 0);
    den = Int(strip_plus(den_text));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) { return r.get_str(); }

std::string format_vector(std::span<const Rat> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_rat(v[i]);
  }
  return out + ")";
}

}  // namespace tl
