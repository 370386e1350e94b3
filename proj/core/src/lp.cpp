#include "twolevel/lp.hpp"

#include <cstdint>

#include "twolevel/errors.hpp"

namespace tl {
namespace {

struct Tableau {
  std::size_t rows;  // constraint rows; the objective is row `rows`
  std::size_t cols;  // structural + artificial columns; the rhs is column `cols`
  std::vector<Rat> cells;

  Rat& at(std::size_t r, std::size_t c) { return cells[r * (cols + 1) + c]; }
};

void pivot(Tableau& t, std::size_t pr, std::size_t pc) {
  const Rat p = t.at(pr, pc);
  for (std::size_t c = 0; c <= t.cols; ++c) t.at(pr, c) /= p;
  for (std::size_t r = 0; r <= t.rows; ++r) {
    if (r == pr) continue;
    const Rat f = t.at(r, pc);
    if (f == 0) continue;
    for (std::size_t c = 0; c <= t.cols; ++c)
      if (t.at(pr, c) != 0) t.at(r, c) -= f * t.at(pr, c);
  }
}

}  // namespace

std::optional<RatVector> lp_feasible(const RatMatrix& aeq, const RatVector& beq,
                                     const std::vector<bool>& nonneg) {
  const std::size_t m = aeq.rows();
  const std::size_t n = aeq.cols();
  if (beq.size() != m || nonneg.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "lp_feasible: inconsistent dimensions");
  }

  // Free variable i is split as x_i = x_i^+ - x_i^-.
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t structural = 0;
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = structural++;
    if (!nonneg[i]) minus[i] = structural++;
  }

  Tableau t{m, structural + m, {}};
  t.cells.assign((m + 1) * (t.cols + 1), Rat(0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = beq[r] < 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rat a = flip ? Rat(-aeq(r, i)) : aeq(r, i);
      t.at(r, plus[i]) = a;
      if (minus[i] != SIZE_MAX) t.at(r, minus[i]) = -a;
    }
    t.at(r, structural + r) = 1;
    t.at(r, t.cols) = flip ? Rat(-beq[r]) : beq[r];
    basis[r] = structural + r;
  }
  // Phase-one objective: minimize the sum of artificials, written in reduced form.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < structural; ++c) t.at(m, c) -= t.at(r, c);
  for (std::size_t r = 0; r < m; ++r) t.at(m, t.cols) -= t.at(r, t.cols);

  for (;;) {
    std::size_t enter = SIZE_MAX;
    for (std::size_t c = 0; c < t.cols; ++c) {
      if (t.at(m, c) < 0) {
        enter = c;
        break;
      }
    }
    if (enter == SIZE_MAX) break;

    std::size_t leave = SIZE_MAX;
    Rat best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.at(r, enter) <= 0) continue;
      const Rat ratio = t.at(r, t.cols) / t.at(r, enter);
      if (leave == SIZE_MAX || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a leaving row.
    if (leave == SIZE_MAX) break;
    pivot(t, leave, enter);
    basis[leave] = enter;
  }

  if (t.at(m, t.cols) != 0) return std::nullopt;

  std::vector<Rat> value(structural, Rat(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < structural) value[basis[r]] = t.at(r, t.cols);
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = value[plus[i]];
    if (minus[i] != SIZE_MAX) x[i] -= value[minus[i]];
  }
  return x;
}

}  // namespace tl
