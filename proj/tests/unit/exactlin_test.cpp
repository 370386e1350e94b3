#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twolevel/errors.hpp"
#include "twolevel/lattice.hpp"
#include "twolevel/linalg.hpp"
#include "twolevel/lp.hpp"
#include "twolevel/rational.hpp"

using namespace tl;

namespace {

RatMatrix rm(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  std::size_t cols = 0;
  for (auto r : rows) {
    RatVector v;
    for (auto x : r) v.emplace_back(x);
    cols = v.size();
    out.push_back(std::move(v));
  }
  return RatMatrix::from_rows(out, cols);
}

IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  std::size_t cols = 0;
  for (auto r : rows) {
    IntVector v;
    for (auto x : r) v.emplace_back(x);
    cols = v.size();
    out.push_back(std::move(v));
  }
  return IntMatrix::from_rows(out, cols);
}

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("exactlin") {
  TEST_CASE("rationals stay in lowest terms") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK(format_rat(parse_rat("2/-4")) == "-1/2");
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
  }

  TEST_CASE("rank") {
    CHECK(rank(RatMatrix::identity(3)) == 3);
    CHECK(rank(RatMatrix(2, 4)) == 0);
    CHECK(rank(rm({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}})) == 2);
    CHECK(rank(RatMatrix(0, 3)) == 0);
    CHECK(rank(im({{2, 4}, {1, 2}})) == 1);
  }

  TEST_CASE("rank agrees with plain elimination on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3), size(1, 6);
    for (int t = 0; t < 300; ++t) {
      const auto r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
      RatMatrix m(r, c);
      std::vector<std::vector<Rat>> copy(r, std::vector<Rat>(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = copy[i][j] = Rat(entry(rng), 1 + (entry(rng) + 3) % 3);
      CHECK(rank(m) == oracle::rank(copy));
    }
  }

  TEST_CASE("solve") {
    CHECK(*solve(RatMatrix::identity(2), rv({3, 5})) == rv({3, 5}));
    CHECK_FALSE(solve(rm({{1, 1}, {1, 1}}), rv({0, 1})).has_value());
    CHECK(*solve(rm({{1, 1}, {1, 0}, {0, 1}}), rv({1, 1, 0})) == rv({1, 0}));
    CHECK_THROWS_AS(solve(RatMatrix::identity(2), rv({1})), Error);
  }

  TEST_CASE("inverse and determinant") {
    const RatMatrix m = rm({{2, 1, 0}, {1, 1, 0}, {0, 3, 5}});
    const RatMatrix inv = inverse(m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rat acc = 0;
        for (std::size_t k = 0; k < 3; ++k) acc += m(i, k) * inv(k, j);
        CHECK(acc == (i == j ? 1 : 0));
      }
    CHECK(determinant(m) == 5);
    CHECK(determinant(im({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})) == -2);
    CHECK_THROWS_AS(inverse(rm({{1, 2}, {2, 4}})), Error);
  }

  TEST_CASE("span builder") {
    SpanBuilder s(3);
    CHECK(s.add(rv({1, 1, 0})));
    CHECK(s.add(rv({0, 1, 1})));
    CHECK_FALSE(s.add(rv({1, 2, 1})));
    CHECK(s.contains(rv({2, 1, -1})));
    CHECK_FALSE(s.contains(rv({0, 0, 1})));
    CHECK(s.rank() == 2);
    const std::vector<RatVector> vs{rv({1, 0}), rv({2, 0}), rv({0, 1}), rv({1, 1})};
    CHECK(independent_prefix(vs) == std::vector<std::size_t>{0, 2});
  }

  TEST_CASE("hermite normal form") {
    CHECK(hnf(im({{2, 0}, {0, 3}})).h == im({{2, 0}, {0, 3}}));
    CHECK(hnf(im({{0, 1}, {1, 0}})).h == im({{1, 0}, {0, 1}}));
    const IntMatrix m = im({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    const HermiteForm f = hnf(m);
    CHECK(f.h(0, 0) * f.h(1, 1) * f.h(2, 2) == 2);
    CHECK(f.u * m == f.h);
  }

  TEST_CASE("hermite form properties on random matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4), size(1, 5);
    for (int t = 0; t < 200; ++t) {
      const auto r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
      IntMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
      const HermiteForm f = hnf(m);
      CHECK(f.u * m == f.h);
      CHECK(abs(determinant(f.u)) == 1);
      const auto pivots = hnf_pivots(f.h);
      CHECK(pivots.size() == rank(m));
      for (std::size_t k = 0; k < pivots.size(); ++k) {
        CHECK(f.h(k, pivots[k]) > 0);
        for (std::size_t i = 0; i < k; ++i) {
          CHECK(f.h(i, pivots[k]) >= 0);
          CHECK(f.h(i, pivots[k]) < f.h(k, pivots[k]));
        }
        if (k > 0) CHECK(pivots[k] > pivots[k - 1]);
      }
      for (std::size_t i = pivots.size(); i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) CHECK(f.h(i, j) == 0);
    }
  }

  TEST_CASE("lattice membership and determinant") {
    const IntLatticeBasis even(2, {iv({2, 0}), iv({0, 2})});
    CHECK_FALSE(lattice_member(even, iv({1, 1})));
    CHECK(lattice_member(even, iv({2, 2})));
    const IntLatticeBasis tri(3, {iv({1, 1, 0}), iv({1, 0, 1}), iv({0, 1, 1})});
    CHECK_FALSE(lattice_member(tri, iv({1, 1, 1})));
    CHECK(lattice_member(tri, iv({2, 2, 2})));
    CHECK(lattice_determinant(tri) == 2);
    CHECK(lattice_determinant(IntLatticeBasis(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})})) == 1);
    CHECK(lattice_determinant(IntLatticeBasis(2, {iv({2, 0}), iv({0, 3})})) == 6);
    CHECK_THROWS_AS(lattice_determinant(IntLatticeBasis(2, {iv({1, 0})})), Error);
    CHECK_THROWS_AS(IntLatticeBasis(2, {iv({1, 1}), iv({2, 2})}), Error);
    CHECK_THROWS_AS(lattice_member(even, iv({1})), Error);

    const auto y = lattice_coordinates(tri, iv({2, 2, 2}));
    REQUIRE(y.has_value());
    IntVector back(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t c = 0; c < 3; ++c) back[c] += (*y)[i] * tri.vectors()[i][c];
    CHECK(back == iv({2, 2, 2}));

    const IntLatticeBasis gen = IntLatticeBasis::generated_by(2, std::vector<IntVector>{iv({2, 0}), iv({0, 2}), iv({1, 1})});
    CHECK(lattice_determinant(gen) == 2);
  }

  TEST_CASE("exact feasibility") {
    const RatMatrix id = RatMatrix::identity(2);
    CHECK(*lp_feasible(id, rv({1, 1}), {true, true}) == rv({1, 1}));
    CHECK_FALSE(lp_feasible(id, rv({-1, 0}), {true, true}).has_value());
    CHECK(lp_feasible(id, rv({-1, 0}), {false, true}).has_value());
    const RatMatrix lifts = RatMatrix::from_rows({rv({1, 0, 0, 0, 1, 0}), rv({1, 1, 1, 1, 1, 1})}, 6).transpose();
    CHECK(*lp_feasible(lifts, rv({2, 1, 1, 1, 2, 1}), {true, true}) == rv({1, 1}));
    CHECK_FALSE(lp_feasible(rm({{1, 1}}), rv({1}), {true, true}) == std::nullopt);
    CHECK_FALSE(lp_feasible(rm({{1, -1}, {1, 1}}), rv({3, -1}), {true, true}).has_value());
  }

  TEST_CASE("feasible points satisfy the system") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 200; ++t) {
      RatMatrix a(3, 5);
      RatVector b(3);
      std::vector<bool> nonneg(5);
      for (std::size_t i = 0; i < 3; ++i) {
        b[i] = entry(rng);
        for (std::size_t j = 0; j < 5; ++j) a(i, j) = entry(rng);
      }
      for (std::size_t j = 0; j < 5; ++j) nonneg[j] = coin(rng);
      if (auto x = lp_feasible(a, b, nonneg)) {
        CHECK(mat_vec(a, *x) == b);
        for (std::size_t j = 0; j < 5; ++j)
          if (nonneg[j]) CHECK((*x)[j] >= 0);
      } else {
        // Without sign constraints a feasible system must be consistent.
        if (std::none_of(nonneg.begin(), nonneg.end(), [](bool v) { return v; })) CHECK_FALSE(solve(a, b).has_value());
      }
    }
  }
}
