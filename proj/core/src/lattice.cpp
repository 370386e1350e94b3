#include "twolevel/lattice.hpp"

#include <utility>

#include "twolevel/errors.hpp"
#include "twolevel/linalg.hpp"

namespace tl {
namespace {


// rows (r, i) <- [[x, y], [-b/g, a/g]] * rows (r, i); determinant is 1.
void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const Int& x, const Int& y,
                  const Int& p, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Int top = x * m(r, j) + y * m(i, j);
    const Int bottom = p * m(r, j) + q * m(i, j);
    m(r, j) = top;
    m(i, j) = bottom;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

IntMatrix matrix_of(std::size_t dim, std::span<const IntVector> vectors) {
  IntMatrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) throw Error(ErrorCode::DimensionMismatch, "lattice vector dimension");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  }
  return m;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
      const Int p = -h(i, c) / g;
      const Int q = h(r, c) / g;
      combine_rows(h, r, i, x, y, p, q);
      combine_rows(u, r, i, x, y, p, q);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int quot;
      mpz_fdiv_q(quot.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (quot == 0) continue;
      add_row_multiple(h, i, r, -quot);
      add_row_multiple(u, i, r, -quot);
    }
    ++r;
  }
  // Rows r.. are zero at this point.
  return {std::move(h), std::move(u)};
}

std::vector<std::size_t> hnf_pivots(const IntMatrix& h) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) break;
    pivots.push_back(c);
  }
  return pivots;
}

IntLatticeBasis::IntLatticeBasis(std::size_t dim, std::vector<IntVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  const IntMatrix m = matrix_of(dim_, vectors_);
  if (rank(m) != vectors_.size()) {
    throw Error(ErrorCode::InvalidArgument, "lattice basis vectors are linearly dependent");
  }
}

IntLatticeBasis IntLatticeBasis::generated_by(std::size_t dim, std::span<const IntVector> vectors) {
  const HermiteForm form = hnf(matrix_of(dim, vectors));
  const std::size_t r = hnf_pivots(form.h).size();
  std::vector<IntVector> basis;
  basis.reserve(r);
  for (std::size_t i = 0; i < r; ++i) basis.push_back(form.h.row(i));
  return IntLatticeBasis(dim, std::move(basis));
}

std::optional<IntVector> lattice_coordinates(const IntLatticeBasis& lattice, std::span<const Int> v) {
  if (v.size() != lattice.dim()) throw Error(ErrorCode::DimensionMismatch, "lattice membership: vector dimension");
  const HermiteForm form = hnf(matrix_of(lattice.dim(), lattice.vectors()));
  const auto pivots = hnf_pivots(form.h);
  IntVector residual(v.begin(), v.end());
  IntVector y(lattice.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t c = pivots[k];
    // Columns before c are already cleared by earlier pivot rows.
    if (!mpz_divisible_p(residual[c].get_mpz_t(), form.h(k, c).get_mpz_t())) return std::nullopt;
    y[k] = residual[c] / form.h(k, c);
    for (std::size_t j = c; j < lattice.dim(); ++j) residual[j] -= y[k] * form.h(k, j);
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  // v = y * H = (y * U) * B
  IntVector coords(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t k = 0; k < lattice.size(); ++k) coords[i] += y[k] * form.u(k, i);
  return coords;
}

bool lattice_member(const IntLatticeBasis& lattice, std::span<const Int> v) {
  return lattice_coordinates(lattice, v).has_value();
}

Int lattice_determinant(const IntLatticeBasis& lattice) {
  if (lattice.size() != lattice.dim()) {
    throw Error(ErrorCode::NotFullRank, "lattice determinant needs dim independent vectors");
  }
  Int det = determinant(matrix_of(lattice.dim(), lattice.vectors()));
  return abs(det);
}

}  // namespace tl
