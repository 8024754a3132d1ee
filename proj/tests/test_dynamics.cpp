#include <doctest.h>

#include "fixtures.hpp"
#include "lemmas.hpp"

using namespace qmt;
using fixtures::coin;
using fixtures::t3;

namespace {

std::vector<Rational> product(const FeasibilitySystem& system, const std::vector<Rational>& x) {
  std::vector<Rational> out;
  for (const auto& row : system.rows) {
    Rational sum = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (row.coefficients[j]) sum += x[j];
    }
    out.push_back(sum);
  }
  return out;
}

void check_witness(const FeasibilitySystem& system, const FeasibilityResult& r) {
  REQUIRE(r.assignment.size() == system.coevents.size());
  for (const auto& v : r.assignment) CHECK(sgn(v) >= 0);
  const auto lhs = product(system, r.assignment);
  for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == system.rows[i].rhs);
}

void check_farkas(const FeasibilitySystem& system, const FeasibilityResult& r) {
  REQUIRE(r.farkas.size() == system.rows.size());
  Rational yb = 0;
  for (std::size_t i = 0; i < system.rows.size(); ++i) yb += r.farkas[i] * system.rows[i].rhs;
  CHECK(sgn(yb) > 0);
  for (std::size_t j = 0; j < system.coevents.size(); ++j) {
    Rational ya = 0;
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
      if (system.rows[i].coefficients[j]) ya += r.farkas[i];
    }
    CHECK(sgn(ya) <= 0);
  }
}

}  // namespace

TEST_CASE("Q and R values") {
  const SampleSpace three({"a", "b", "c"});
  const auto a = three.event({"a"}), b = three.event({"b"}), c = three.event({"c"});
  const auto top3 = dual(three.full());
  CHECK(q_value(top3, a, b, c));
  CHECK(r_value(top3, a, b, c) == 1);

  const SampleSpace two({"h", "t"});
  CHECK_FALSE(q_value(dual(two.full()), two.event({"h"}), two.event({"t"}), two.empty()));

  for (unsigned g = 0; g < 3; ++g) {
    CHECK_FALSE(q_value(dual(three.singleton(g)), a, b, c));
    CHECK(r_value(dual(three.singleton(g)), a, b, c) == 0);
  }

  EventBitmap truth(3);
  truth.set(0b111);
  truth.set(0b001);
  const auto phi = CoEvent::from_table(truth);
  CHECK(r_value(phi, a, b, c) == 2);
  CHECK_FALSE(q_value(phi, a, b, c));

  CHECK_THROWS_AS(q_value(top3, three.event({"a", "b"}), b, c), InvalidArgument);
}

TEST_CASE("quadraticity") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned g = 0; g < n; ++g) CHECK(is_quadratic(dual(Event::singleton(g, n))).is_quadratic);
  }
  CHECK(is_quadratic(dual(Event::full(2))).is_quadratic);
  const auto r = is_quadratic(dual(Event::full(3)));
  CHECK_FALSE(r.is_quadratic);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness)[0] == Event(0b001, 3));
  CHECK((*r.witness)[1] == Event(0b010, 3));
  CHECK((*r.witness)[2] == Event(0b100, 3));
}

TEST_CASE("multiplicative co-events are quadratic iff the dual has at most two histories") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& phi : all_multiplicative(n)) {
      CHECK(is_quadratic(phi).is_quadratic == (phi.dual().cardinality() <= 2));
      if (n <= 4) CHECK(satisfies_quadratic_identity(phi) == (phi.dual().cardinality() <= 2));
    }
  }
}

TEST_CASE("quadratic witness does not depend on the thread count") {
  Limits many;
  many.threads = 4;
  for (EventMask d : {0x7U, 0x380U, 0xE00U, 0xFFFU, 0x3U}) {
    const auto phi = dual(Event(d, 12));
    const auto one = is_quadratic(phi);
    const auto four = is_quadratic(phi, many);
    CHECK(one.is_quadratic == four.is_quadratic);
    CHECK(one.witness == four.witness);
  }
  CHECK_THROWS_AS(is_quadratic(dual(Event::full(13))), CapExceeded);
}

TEST_CASE("Q, R and the quadratic identity lemmas") {
  const auto r = acceptance::quadratic_lemmas(5);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("feasibility examples") {
  const auto c = coin(Rational(1, 3));
  const auto& s = c.space();
  const auto sys = build_feasibility(c, {dual(s.event({"h"})), dual(s.event({"t"}))});
  const auto r = solve_feasibility(sys);
  REQUIRE(r.feasible());
  CHECK(r.assignment == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});

  const auto full = build_feasibility(c, all_multiplicative(2));
  CHECK(max_probability(full, 2) == 0);
  CHECK(max_probability(full, 0) == Rational(1, 3));

  const auto t = t3();
  const auto bad = build_feasibility(t, {dual(t.space().event({"a", "c"}))});
  const auto br = solve_feasibility(bad);
  CHECK(br.status == FeasibilityStatus::inconsistent_row);
  REQUIRE(br.row.has_value());
  CHECK(bad.rows[*br.row].event == t.space().event({"a"}));
  CHECK_THROWS_AS(max_probability(bad, 0), InvalidArgument);

  const auto u = gen::uniform_table(3);
  const auto usys = build_feasibility(u, all_multiplicative(3));
  const auto ur = solve_feasibility(usys);
  REQUIRE(ur.feasible());
  check_witness(usys, ur);
  for (std::size_t j = 0; j < usys.coevents.size(); ++j) {
    const unsigned card = usys.coevents[j].dual().cardinality();
    CHECK(ur.assignment[j] == (card == 1 ? Rational(1, 3) : Rational(0)));
  }
  CHECK(max_probability(usys, 6) == 0);
}

TEST_CASE("feasibility builder rejects bad co-event sets") {
  const auto c = coin(Rational(1, 3));
  CHECK_THROWS_AS(build_feasibility(c, {}), InvalidArgument);
  const auto h = dual(c.space().event({"h"}));
  CHECK_THROWS_AS(build_feasibility(c, {h, h}), InvalidArgument);
  EventBitmap odd(2);
  odd.set(0b01);
  odd.set(0b10);
  CHECK_THROWS_AS(build_feasibility(c, {CoEvent::from_table(odd)}), InvalidArgument);
}

TEST_CASE("feasibility modes select rows") {
  const auto c = coin(Rational(1, 3));
  const auto all = build_feasibility(c, all_multiplicative(2));
  CHECK(all.rows.size() == 4);
  const auto binary = build_feasibility(c, all_multiplicative(2), FeasibilityMode::binary);
  CHECK(binary.rows.size() == 2);
  const auto obs = build_feasibility(c, all_multiplicative(2), FeasibilityMode::observable, {c.space().event({"h"})});
  REQUIRE(obs.rows.size() == 2);
  CHECK(obs.rows[0].event == c.space().event({"h"}));
  CHECK_FALSE(obs.rows[1].event.has_value());
}

TEST_CASE("positive-probability co-events of quadratic measures are quadratic") {
  gen::Rng rng(41);
  int feasible = 0;
  for (int i = 0; i < 40; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(i) % 3;
    // mu = sum of weights on random co-events with duals of one or two histories.
    std::vector<Rational> mu(std::size_t{1} << n);
    Rational total = 0;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
      EventMask d = 1U << (rng() % n);
      d |= rng() % 2 ? 1U << (rng() % n) : 0;
      const Rational w(1 + static_cast<long>(rng() % 4));
      total += w;
      for (EventMask a = 0; a < mu.size(); ++a) {
        if ((a & d) == d) mu[a] += w;
      }
    }
    for (auto& v : mu) v /= total;
    const auto theory = HistoriesTheory::from_table(SampleSpace::anonymous(n), mu);
    CHECK(level(theory) <= 2);
    const auto sys = build_feasibility(theory, all_multiplicative(n));
    const auto r = solve_feasibility(sys);
    REQUIRE(r.feasible());
    ++feasible;
    check_witness(sys, r);
    for (std::size_t j = 0; j < sys.coevents.size(); ++j) {
      if (sgn(max_probability(sys, j)) > 0) CHECK(is_quadratic(sys.coevents[j]).is_quadratic);
    }
  }
  CHECK(feasible == 40);
}

TEST_CASE("infeasible systems carry a valid Farkas certificate") {
  gen::Rng rng(42);
  int certified = 0;
  for (int i = 0; i < 60; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(i) % 3;
    const auto theory = gen::decoherence_theory(rng, n);
    const auto sys = build_feasibility(theory, all_multiplicative(n));
    const auto r = solve_feasibility(sys);
    if (r.status == FeasibilityStatus::infeasible) {
      check_farkas(sys, r);
      ++certified;
    } else if (r.feasible()) {
      check_witness(sys, r);
    }
  }
  CHECK(certified > 0);
}
