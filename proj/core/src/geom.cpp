#include "twolevel/geom.hpp"

#include <algorithm>
#include <numeric>

#include "twolevel/errors.hpp"
#include "twolevel/linalg.hpp"

namespace tl {
namespace {

RatVector lift_point(const RatVector& v) {
  RatVector out = v;
  out.emplace_back(-1);
  return out;
}

RatVector lift_ineq(const Inequality& ineq) {
  RatVector out = ineq.normal;
  out.push_back(ineq.rhs);
  return out;
}

std::size_t index_of(const VectorSet& set, const RatVector& v) {
  return static_cast<std::size_t>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
}

class CoreSearch {
 public:
  CoreSearch(const SlackMatrix& s, std::size_t size) : s_(s), size_(size) {
    const auto& m = s_.matrix;
    order_.resize(m.rows());
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> ones(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) ones[r] += m(r, c);
    std::stable_sort(order_.begin(), order_.end(), [&](auto x, auto y) { return ones[x] < ones[y]; });
    row_used_.assign(m.rows(), false);
    col_used_.assign(m.cols(), false);
  }

  bool run() { return extend(); }
  TriangularCore result() const { return {rows_, cols_}; }

 private:
  // Columns still available for later diagonal positions: unused and zero on
  // every chosen row.
  std::size_t open_columns() const {
    const auto& m = s_.matrix;
    std::size_t n = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (col_used_[c]) continue;
      bool zero = true;
      for (std::size_t r : rows_) zero = zero && m(r, c) == 0;
      n += zero;
    }
    return n;
  }

  bool labels_independent() const {
    SpanBuilder span(s_.row_labels.front().size());
    for (std::size_t r : rows_)
      if (!span.add(s_.row_labels[r])) return false;
    return true;
  }

  bool extend() {
    if (rows_.size() == size_) return labels_independent();
    if (open_columns() < size_ - rows_.size()) return false;
    const auto& m = s_.matrix;
    for (std::size_t r : order_) {
      if (row_used_[r]) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (col_used_[c] || m(r, c) != 1) continue;
        bool upper_zero = true;
        for (std::size_t prev : rows_) upper_zero = upper_zero && m(prev, c) == 0;
        if (!upper_zero) continue;
        rows_.push_back(r);
        cols_.push_back(c);
        row_used_[r] = col_used_[c] = true;
        if (extend()) return true;
        row_used_[r] = col_used_[c] = false;
        rows_.pop_back();
        cols_.pop_back();
      }
    }
    return false;
  }

  const SlackMatrix& s_;
  std::size_t size_;
  std::vector<std::size_t> order_;
  std::vector<bool> row_used_, col_used_;
  std::vector<std::size_t> rows_, cols_;
};

}  // namespace

void validate(const PolytopeDescription& p) {
  if (p.d == 0) throw Error(ErrorCode::InvalidArgument, "polytope dimension must be at least 1");
  for (const auto& ineq : p.ineqs)
    if (ineq.normal.size() != p.d) throw Error(ErrorCode::DimensionMismatch, "inequality dimension");
  std::vector<RatVector> lifted;
  for (const auto& v : p.verts) {
    if (v.size() != p.d) throw Error(ErrorCode::DimensionMismatch, "vertex dimension");
    lifted.push_back(lift_point(v));
  }
  if (!spans(lifted, p.d + 1)) throw Error(ErrorCode::NotSpanning, "vertices do not affinely span R^d");
  for (const auto& ineq : p.ineqs)
    for (const auto& v : p.verts) {
      const Rat s = dot(ineq.normal, v) - ineq.rhs;
      if (s != 0 && s != 1) throw Error(ErrorCode::NonBinarySlack, "vertex slack outside {0,1}");
    }
}

void validate(const ConeDescription& k) {
  if (k.d == 0) throw Error(ErrorCode::InvalidArgument, "cone dimension must be at least 1");
  if (!spans(k.ineqs, k.d) || !spans(k.gens, k.d)) throw Error(ErrorCode::NotSpanning, "cone families must span R^d");
  for (const auto& a : k.ineqs)
    for (const auto& v : k.gens) {
      const Rat s = dot(a, v);
      if (s != 0 && s != 1) throw Error(ErrorCode::NonBinarySlack, "generator slack outside {0,1}");
    }
}

Configuration polytope_to_configuration(const PolytopeDescription& p) {
  validate(p);
  std::vector<RatVector> a, b;
  for (const auto& ineq : p.ineqs) a.push_back(lift_ineq(ineq));
  for (const auto& v : p.verts) b.push_back(lift_point(v));
  b.emplace_back(p.d + 1, Rat(0));
  return Configuration(p.d + 1, std::move(a), std::move(b));
}

Configuration cone_to_configuration(const ConeDescription& k) {
  validate(k);
  return Configuration(k.d, k.ineqs, k.gens);
}

ConeDescription homogenize(const PolytopeDescription& p) {
  validate(p);
  ConeDescription k;
  k.d = p.d + 1;
  for (const auto& ineq : p.ineqs) k.ineqs.push_back(lift_ineq(ineq));
  for (const auto& v : p.verts) k.gens.push_back(lift_point(v));
  k.gens.emplace_back(p.d + 1, Rat(0));
  return k;
}

PolytopeDescription complete_maximal_pair(const std::vector<RatVector>& verts) {
  if (verts.empty()) throw Error(ErrorCode::NotSpanning, "no vertices");
  const std::size_t d = verts.front().size();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "polytope dimension must be at least 1");
  std::vector<RatVector> lifted;
  for (const auto& v : verts) {
    if (v.size() != d) throw Error(ErrorCode::DimensionMismatch, "vertex dimension");
    lifted.push_back(lift_point(v));
  }
  if (!spans(lifted, d + 1)) throw Error(ErrorCode::NotSpanning, "vertices do not affinely span R^d");

  const VectorSet rows = closure(lifted);
  const VectorSet points = closure(rows);

  PolytopeDescription p;
  p.d = d;
  for (const auto& pt : points) {
    if (pt.back() == -1) p.verts.emplace_back(pt.begin(), pt.end() - 1);
  }
  for (const auto& row : rows) {
    Inequality ineq{RatVector(row.begin(), row.end() - 1), row.back()};
    RowKind kind;
    if (is_zero(ineq.normal)) {
      kind = RowKind::Trivial;
    } else {
      SpanBuilder tight(d + 1);
      for (const auto& v : p.verts)
        if (dot(ineq.normal, v) == ineq.rhs) tight.add(lift_point(v));
      kind = tight.rank() >= d ? RowKind::Facet : RowKind::NonFacet;
    }
    p.ineqs.push_back(std::move(ineq));
    p.kinds.push_back(kind);
  }
  return p;
}

ConeDescription complete_maximal_cone(const std::vector<RatVector>& gens) {
  if (gens.empty()) throw Error(ErrorCode::NotSpanning, "no generators");
  ConeDescription k;
  k.d = gens.front().size();
  k.ineqs = closure(gens);
  if (!spans(k.ineqs, k.d)) throw Error(ErrorCode::DegenerateSeed, "inequality side does not span");
  k.gens = closure(k.ineqs);
  return k;
}

TriangularCore find_triangular_core(const SlackMatrix& s, std::size_t size) {
  if (size == 0 || s.matrix.rows() < size || s.matrix.cols() < size) {
    throw Error(ErrorCode::NoCore, "slack matrix too small for a core of size " + std::to_string(size));
  }
  CoreSearch search(s, size);
  if (!search.run()) throw Error(ErrorCode::NoCore, "no triangular core of size " + std::to_string(size));
  return search.result();
}

BinaryIntegralConfiguration to_binary_integral_configuration(const Configuration& cfg) {
  const std::size_t n = cfg.dim();
  const SlackMatrix s = slack_matrix(cfg);
  TriangularCore core = find_triangular_core(s, n);

  // M has the core rows as its rows; B'' = M B' is 0/1.
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s.row_labels[core.row_indices[i]][j];
  // L has column j equal to the image of core column j, i.e. L[i][j] = S[row_i][col_j].
  RatMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l(i, j) = s.matrix(core.row_indices[i], core.col_indices[j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (l(i, i) != 1) throw Error(ErrorCode::NoCore, "core diagonal is not all ones");
    for (std::size_t j = i + 1; j < n; ++j)
      if (l(i, j) != 0) throw Error(ErrorCode::NoCore, "core is not lower-triangular");
  }

  // D = L^{-1} M B', C = (L^{-1} M)^{-T} A'.
  const RatMatrix l_inv = inverse(l);
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += l_inv(i, k) * m(k, j);
      t(i, j) = acc;
    }
  const RatMatrix t_inv_t = inverse(t).transpose();

  std::vector<RatVector> c, dvec;
  for (const auto& a : cfg.a()) c.push_back(mat_vec(t_inv_t, a));
  for (const auto& b : cfg.b()) dvec.push_back(mat_vec(t, b));
  for (const auto& v : c)
    if (!is_binary(v)) throw Error(ErrorCode::NonBinary, "transformed inequality side is not 0/1");
  for (const auto& v : dvec)
    if (!is_integral(v)) throw Error(ErrorCode::NonBinary, "transformed point side is not integral");

  Configuration out(n, c, dvec);
  BinaryIntegralConfiguration result{out, std::move(core), t, std::vector<std::size_t>(c.size()),
                                     std::vector<std::size_t>(dvec.size())};
  for (std::size_t i = 0; i < c.size(); ++i) result.a_source[index_of(out.a(), c[i])] = i;
  for (std::size_t j = 0; j < dvec.size(); ++j) result.b_source[index_of(out.b(), dvec[j])] = j;
  return result;
}

BinaryIntegralConfiguration to_binary_integral_configuration(const PolytopeDescription& p) {
  return to_binary_integral_configuration(polytope_to_configuration(p));
}

BinaryIntegralConfiguration to_binary_integral_configuration(const ConeDescription& k) {
  return to_binary_integral_configuration(cone_to_configuration(k));
}

std::vector<RatVector> cube_vertices(std::size_t d) {
  std::vector<RatVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1U;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVector> simplex_vertices(std::size_t d) {
  std::vector<RatVector> out;
  out.emplace_back(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    RatVector v(d, Rat(0));
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVector> cross_polytope_vertices(std::size_t d) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < d; ++i)
    for (int sign : {1, -1}) {
      RatVector v(d, Rat(0));
      v[i] = sign;
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace tl
