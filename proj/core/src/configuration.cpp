#include "twolevel/configuration.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "twolevel/errors.hpp"
#include "twolevel/linalg.hpp"

namespace tl {
namespace {

void check_dims(std::span<const RatVector> vectors, std::size_t d) {
  for (const auto& v : vectors)
    if (v.size() != d) throw Error(ErrorCode::DimensionMismatch, "vector of dimension " + std::to_string(v.size()) + " in a family of dimension " + std::to_string(d));
}

std::size_t index_of(const VectorSet& set, const RatVector& v) {
  const auto it = std::lower_bound(set.begin(), set.end(), v);
  return static_cast<std::size_t>(it - set.begin());
}

}  // namespace

VectorSet make_vector_set(std::vector<RatVector> vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  return vectors;
}

bool spans(std::span<const RatVector> vectors, std::size_t d) {
  SpanBuilder span(d);
  for (const auto& v : vectors) {
    span.add(v);
    if (span.rank() == d) return true;
  }
  return span.rank() == d;
}

Configuration::Configuration(std::size_t d, std::vector<RatVector> a, std::vector<RatVector> b)
    : d_(d), a_(make_vector_set(std::move(a))), b_(make_vector_set(std::move(b))) {
  if (d_ == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  check_dims(a_, d_);
  check_dims(b_, d_);
  if (!spans(a_, d_)) throw Error(ErrorCode::NotSpanning, "A does not span Q^d");
  if (!spans(b_, d_)) throw Error(ErrorCode::NotSpanning, "B does not span Q^d");
  for (const auto& x : a_)
    for (const auto& y : b_) {
      const Rat p = dot(x, y);
      if (p != 0 && p != 1) {
        throw Error(ErrorCode::NonBinarySlack,
                    "<" + format_vector(x) + ", " + format_vector(y) + "> = " + format_rat(p));
      }
    }
}

Configuration::Configuration(const Configuration& other)
    : d_(other.d_), a_(other.a_), b_(other.b_), maximal_(other.maximal_.load()) {}

Configuration& Configuration::operator=(const Configuration& other) {
  d_ = other.d_;
  a_ = other.a_;
  b_ = other.b_;
  maximal_.store(other.maximal_.load());
  return *this;
}

bool Configuration::is_maximal() const {
  int cached = maximal_.load();
  if (cached < 0) {
    cached = (closure(b_) == a_ && closure(a_) == b_) ? 1 : 0;
    maximal_.store(cached);
  }
  return cached == 1;
}

SlackMatrix slack_matrix(const Configuration& cfg) {
  SlackMatrix s{BinaryMatrix(cfg.a().size(), cfg.b().size()), cfg.a(), cfg.b()};
  for (std::size_t i = 0; i < cfg.a().size(); ++i)
    for (std::size_t j = 0; j < cfg.b().size(); ++j) {
      const Rat p = dot(cfg.a()[i], cfg.b()[j]);
      if (p != 0 && p != 1) throw Error(ErrorCode::NonBinarySlack, "inner product outside {0,1}");
      s.matrix.set(i, j, p == 1);
    }
  return s;
}

VectorSet closure(std::span<const RatVector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::NotSpanning, "closure of the empty family");
  const std::size_t d = vectors.front().size();
  check_dims(vectors, d);
  const VectorSet sorted = make_vector_set(VectorSet(vectors.begin(), vectors.end()));

  // Integer rows x * c_x with c_x the lcm of denominators; <y, x> in {0,1}
  // becomes <y, x c_x> in {0, c_x}.
  std::vector<IntVector> scaled(sorted.size());
  std::vector<Int> scale(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Int l = 1;
    for (const auto& x : sorted[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale[i] = l;
    scaled[i].resize(d);
    for (std::size_t k = 0; k < d; ++k) scaled[i][k] = sorted[i][k].get_num() * (l / sorted[i][k].get_den());
  }

  const auto basis = independent_prefix(sorted);
  if (basis.size() != d) throw Error(ErrorCode::NotSpanning, "family does not span Q^d");

  // y = adj(X) * (c .* sigma) / det(X) for the basis rows X.
  IntMatrix x(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) x(r, c) = scaled[basis[r]][c];
  const Int det = determinant(x);
  RatMatrix xr(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) xr(r, c) = x(r, c);
  const RatMatrix inv = inverse(xr);
  IntMatrix adj(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Rat v = inv(r, c) * det;
      adj(r, c) = v.get_num();
    }

  std::vector<bool> in_basis(sorted.size(), false);
  for (auto i : basis) in_basis[i] = true;

  VectorSet out;
  IntVector y(d);
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << d); ++sigma) {
    for (std::size_t r = 0; r < d; ++r) {
      y[r] = 0;
      for (std::size_t c = 0; c < d; ++c)
        if ((sigma >> c) & 1U) y[r] += adj(r, c) * scale[basis[c]];
    }
    bool ok = true;
    for (std::size_t i = 0; i < sorted.size() && ok; ++i) {
      if (in_basis[i]) continue;
      Int p = 0;
      for (std::size_t k = 0; k < d; ++k) p += y[k] * scaled[i][k];
      ok = (p == 0 || p == scale[i] * det);
    }
    if (!ok) continue;
    RatVector v(d);
    for (std::size_t k = 0; k < d; ++k) {
      v[k] = Rat(y[k], det);
      v[k].canonicalize();
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Configuration maximal_completion(std::span<const RatVector> seed) {
  if (seed.empty()) throw Error(ErrorCode::NotSpanning, "empty seed");
  const std::size_t d = seed.front().size();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  VectorSet a = closure(seed);
  if (!spans(a, d)) throw Error(ErrorCode::DegenerateSeed, "closure of the seed does not span Q^d");
  VectorSet b = closure(a);
  Configuration cfg(d, std::move(a), std::move(b));
  cfg.maximal_.store(1);
  return cfg;
}

namespace {

struct Factorization {
  std::size_t rank = 0;
  VectorSet a;  // one vector per matrix row, in row order
  VectorSet b;  // one vector per matrix column, in column order
};

// Rank factorization through an invertible d x d submatrix M[I, J]:
// b_j = M[I, j] and a_i = M[i, J] * M[I, J]^{-1}.
Factorization factorize(const BinaryMatrix& m) {
  Factorization f;
  std::vector<RatVector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  const auto row_idx = independent_prefix(rows);
  f.rank = row_idx.size();
  if (f.rank == 0) return f;
  const std::size_t d = f.rank;

  std::vector<RatVector> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    cols[c].resize(d);
    for (std::size_t k = 0; k < d; ++k) cols[c][k] = m(row_idx[k], c);
  }
  const auto col_idx = independent_prefix(cols);

  RatMatrix core(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) core(r, c) = m(row_idx[r], col_idx[c]);
  const RatMatrix inv = inverse(core);

  f.b = cols;
  f.a.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    RatVector a(d);
    for (std::size_t k = 0; k < d; ++k) {
      Rat s = 0;
      for (std::size_t c = 0; c < d; ++c)
        if (m(r, col_idx[c])) s += inv(c, k);
      a[k] = s;
    }
    f.a[r] = std::move(a);
  }
  return f;
}

}  // namespace

MdVerdict classify_in_Md(const BinaryMatrix& m) {
  MdVerdict v;
  if (m.rows() == 0 || m.cols() == 0) return v;
  if (!m.has_distinct_rows() || !m.has_distinct_cols()) {
    v.rank = rank(m.to_rat());
    return v;
  }
  Factorization f = factorize(m);
  v.rank = f.rank;
  if (f.rank == 0) return v;
  v.member = true;
  const VectorSet a = make_vector_set(f.a);
  const VectorSet b = make_vector_set(f.b);
  v.maximal = closure(b) == a && closure(a) == b;
  return v;
}

bool is_maximal_in_Md(const BinaryMatrix& m) { return classify_in_Md(m).maximal; }

Configuration from_slack_matrix(const BinaryMatrix& m) {
  if (!m.has_distinct_rows() || !m.has_distinct_cols()) {
    throw Error(ErrorCode::RepeatedLine, "slack matrix has a repeated row or column");
  }
  Factorization f = factorize(m);
  if (f.rank == 0) throw Error(ErrorCode::InvalidArgument, "zero matrix has no rank factorization");
  return Configuration(f.rank, std::move(f.a), std::move(f.b));
}

NormalizedConfiguration normalize_to_binary(const Configuration& cfg, Side side) {
  const std::size_t d = cfg.dim();
  // For side A: take a basis b_1..b_d of B (first independent in sorted order),
  // M with columns b_i, B' = M^{-1} B, A' = M^T A. Side B is the mirror image.
  const VectorSet& basis_side = side == Side::A ? cfg.b() : cfg.a();
  const auto idx = independent_prefix(basis_side);
  RatMatrix m(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) m(r, c) = basis_side[idx[c]][r];
  const RatMatrix m_inv = inverse(m);
  const RatMatrix m_t = m.transpose();

  std::vector<RatVector> a2, b2;
  a2.reserve(cfg.a().size());
  b2.reserve(cfg.b().size());
  RatMatrix transform;
  if (side == Side::A) {
    for (const auto& a : cfg.a()) a2.push_back(mat_vec(m_t, a));
    for (const auto& b : cfg.b()) b2.push_back(mat_vec(m_inv, b));
    transform = m_inv;
  } else {
    for (const auto& a : cfg.a()) a2.push_back(mat_vec(m_inv, a));
    for (const auto& b : cfg.b()) b2.push_back(mat_vec(m_t, b));
    transform = m_t;
  }

  Configuration out(d, a2, b2);
  NormalizedConfiguration result{out, std::vector<std::size_t>(a2.size()), std::vector<std::size_t>(b2.size()), transform};
  for (std::size_t i = 0; i < a2.size(); ++i) result.a_source[index_of(out.a(), a2[i])] = i;
  for (std::size_t j = 0; j < b2.size(); ++j) result.b_source[index_of(out.b(), b2[j])] = j;
  return result;
}

}  // namespace tl
