#include <doctest.h>

#include <random>

#include "qmt/simplex.hpp"

using namespace qmt;

namespace {

std::vector<Rational> row(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (std::size_t i = 0; i < lp.a.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < lp.columns; ++j) s += lp.a[i][j] * x[j];
    if (s != lp.b[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small optimum") {
  // x + y + s = 4, x + 3y + t = 6; maximize x + 2y -> (3, 1), value 5.
  LinearProgram lp{4, {row({1, 1, 1, 0}), row({1, 3, 0, 1})}, row({4, 6})};
  const auto r = solve_lp(lp, row({1, 2, 0, 0}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == 5);
  CHECK(r.x[0] == 3);
  CHECK(r.x[1] == 1);
}

TEST_CASE("redundant and negative rows") {
  // Row 2 repeats row 1; row 3 reads -x = -1/2.
  LinearProgram lp{2, {row({1, 1}), row({2, 2}), row({-1, 0})}, {1, 2, Rational(-1, 2)}};
  const auto r = solve_lp(lp, row({0, 1}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == Rational(1, 2));
  CHECK(satisfies(lp, r.x));
}

TEST_CASE("degenerate vertex does not cycle") {
  // The classic Beale example, in equality form with slacks.
  LinearProgram lp{7,
                   {{Rational(1, 4), -60, Rational(-1, 25), 9, 1, 0, 0},
                    {Rational(1, 2), -90, Rational(-1, 50), 3, 0, 1, 0},
                    {0, 0, 1, 0, 0, 0, 1}},
                   row({0, 0, 1})};
  const auto r = solve_lp(lp, {Rational(3, 4), -150, Rational(1, 50), -6, 0, 0, 0});
  CHECK(r.x[0] == Rational(1, 25));
  CHECK(r.x[2] == 1);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == Rational(1, 20));
  CHECK(satisfies(lp, r.x));
}

TEST_CASE("unbounded") {
  LinearProgram lp{2, {row({1, -1})}, row({1})};
  CHECK(solve_lp(lp, row({1, 0})).status == LpStatus::unbounded);
  CHECK(solve_lp(lp).status == LpStatus::optimal);
}

TEST_CASE("infeasible with certificate") {
  LinearProgram lp{2, {row({1, 1}), row({1, 1})}, row({1, 2})};
  const auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::infeasible);
  Rational yb = r.farkas[0] * lp.b[0] + r.farkas[1] * lp.b[1];
  CHECK(sgn(yb) > 0);
  for (std::size_t j = 0; j < 2; ++j) CHECK(sgn(r.farkas[0] * lp.a[0][j] + r.farkas[1] * lp.a[1][j]) <= 0);
}

TEST_CASE("random systems: feasible vertex or certificate") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 5;
    LinearProgram lp{n, {}, {}};
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<Rational> a;
      for (std::size_t j = 0; j < n; ++j) a.emplace_back(static_cast<long>(rng() % 5) - 2);
      lp.a.push_back(a);
      lp.b.emplace_back(static_cast<long>(rng() % 7) - 3);
    }
    const auto r = solve_lp(lp);
    if (r.status == LpStatus::optimal) {
      CHECK(satisfies(lp, r.x));
    } else {
      REQUIRE(r.status == LpStatus::infeasible);
      Rational yb = 0;
      for (std::size_t k = 0; k < m; ++k) yb += r.farkas[k] * lp.b[k];
      CHECK(sgn(yb) > 0);
      for (std::size_t j = 0; j < n; ++j) {
        Rational ya = 0;
        for (std::size_t k = 0; k < m; ++k) ya += r.farkas[k] * lp.a[k][j];
        CHECK(sgn(ya) <= 0);
      }
    }
  }
}
