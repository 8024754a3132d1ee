#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "lemmas.hpp"

using namespace qmt;
using fixtures::coin;
using fixtures::t3;

namespace {

std::vector<EventMask> duals_of(const std::vector<CoEvent>& set) {
  std::vector<EventMask> out;
  for (const auto& phi : set) out.push_back(phi.dual().mask());
  return out;
}

}  // namespace

TEST_CASE("evaluation") {
  const auto c = coin(Rational(1, 3));
  const auto& s = c.space();
  const auto omega = CoEvent::multiplicative(s.full());
  CHECK_FALSE(eval(omega, s.event({"h"})));
  CHECK(eval(omega, s.full()));
  CHECK(eval(CoEvent::multiplicative(s.event({"h"})), s.full()));

  const auto t = t3();
  const auto ac = CoEvent::multiplicative(t.space().event({"a", "c"}));
  CHECK_FALSE(ac(t.space().event({"a", "b"})));
  CHECK(ac(t.space().full()));
  CHECK_THROWS_AS(CoEvent::multiplicative(t.space().empty()), InvalidArgument);
}

TEST_CASE("duality") {
  const SampleSpace s({"a", "b", "c"});
  const Event ac = s.event({"a", "c"});
  CHECK(dual(dual(ac)) == ac);
  CHECK(dual(s.singleton(1)).dual() == s.singleton(1));
  const auto top = dual(s.full());
  for (EventMask m = 0; m < 8; ++m) CHECK(top(s.event(m)) == (m == 7));
}

TEST_CASE("table co-events") {
  EventBitmap truth(2);
  truth.set(0b11);
  truth.set(0b01);
  const auto phi = CoEvent::from_table(truth);
  CHECK(is_multiplicative(phi));
  CHECK(is_homomorphism(phi));
  REQUIRE(to_multiplicative(phi).has_value());
  CHECK(to_multiplicative(phi)->dual() == Event(0b01, 2));

  EventBitmap zero(2);
  CHECK_THROWS_AS(CoEvent::from_table(zero), InvalidArgument);
  EventBitmap empty_true(2);
  empty_true.set(0);
  CHECK_THROWS_AS(CoEvent::from_table(empty_true), InvalidArgument);

  EventBitmap odd(2);
  odd.set(0b01);
  odd.set(0b10);
  const auto psi = CoEvent::from_table(odd);
  CHECK_FALSE(is_multiplicative(psi));
  CHECK_FALSE(to_multiplicative(psi).has_value());
  CHECK_THROWS_AS(psi.dual(), InvalidArgument);
}

TEST_CASE("preclusion") {
  const auto c = coin(Rational(1, 3));
  const auto& s = c.space();
  for (const Event& e : {s.event({"h"}), s.event({"t"}), s.full()}) CHECK(is_preclusive(dual(e), c));
  const auto t = t3();
  CHECK_FALSE(is_preclusive(dual(t.space().event({"b"})), t));
  CHECK(is_preclusive(dual(t.space().event({"a", "c"})), t));
}

TEST_CASE("approximate preclusion of single tosses") {
  // 2^-10 < 1/1000 <= 2^-9, so every singleton is precluded at ten tosses and none at nine.
  const Rational eps(1, 1000);
  CHECK(singleton_preclusion(BernoulliModel(10, Rational(1, 2), eps)).all_precluded());
  CHECK(singleton_preclusion(BernoulliModel(9, Rational(1, 2), eps)).none_precluded());
}

TEST_CASE("domination") {
  const SampleSpace s({"a", "b", "c"});
  const auto h = dual(s.event({"a"}));
  CHECK(dominates(h, dual(s.full())));
  CHECK(dominates(h, dual(s.event({"a", "c"}))));
  CHECK_FALSE(dominates(h, h));
  CHECK_FALSE(dominates(dual(s.full()), h));
  CHECK_FALSE(dominates(dual(s.event({"b"})), dual(s.event({"a", "c"}))));
}

TEST_CASE("primitives and classical co-events") {
  const auto c = coin(Rational(1, 3));
  CHECK(duals_of(primitives(c)) == std::vector<EventMask>{0x1, 0x2});
  CHECK(duals_of(classical_coevents(c)) == std::vector<EventMask>{0x1, 0x2});

  const auto t = t3();
  CHECK(duals_of(primitives(t)) == std::vector<EventMask>{0x5});
  CHECK(classical_coevents(t).empty());

  const auto sure = HistoriesTheory::from_table(SampleSpace({"a", "b"}), {0, 1, 0, 1});
  CHECK(duals_of(classical_coevents(sure)) == std::vector<EventMask>{0x1});
  CHECK(duals_of(primitives(sure)) == std::vector<EventMask>{0x1});
}

TEST_CASE("classicality on a partition") {
  const auto c = coin(Rational(1, 3));
  CHECK_FALSE(is_classical_on(dual(c.space().full()), Partition::singletons(2)));
  const auto t = t3();
  const Partition p({t.space().event({"a", "c"}), t.space().event({"b"})});
  CHECK(is_classical_on(dual(t.space().event({"a", "c"})), p));
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& part : all_partitions(n)) {
      for (unsigned g = 0; g < n; ++g) CHECK(is_classical_on(dual(Event::singleton(g, n)), part));
    }
  }
}

TEST_CASE("homomorphisms are exactly the single-history co-events") {
  const auto r = acceptance::homomorphisms_are_singletons(4);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("multiplicative truth sets are principal filters") {
  const auto r = acceptance::principal_filters(5);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("classical measures have the single-history co-events as primitives") {
  gen::Rng rng(21);
  const auto r = acceptance::classical_primitives(rng, 40, 6);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("every non-negligible event is caught by a primitive") {
  gen::Rng rng(22);
  const auto r = acceptance::primitive_existence(rng, 15, 6, {Rational(0), Rational(1, 7), Rational(2, 5)});
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("primitives match the minimal non-negligible oracle up to twelve histories") {
  gen::Rng rng(23);
  for (unsigned n = 1; n <= 12; ++n) {
    for (int i = 0; i < 3; ++i) {
      const auto theory = i == 0 ? gen::classical_table(rng, n) : gen::decoherence_theory(rng, n);
      const Rational eps = i == 2 ? Rational(1, 1 + static_cast<long>(rng() % 9)) : Rational(0);
      CHECK(duals_of(primitives(theory, eps)) == oracle::primitive_duals(theory.mu_table(), eps));
    }
  }
}

TEST_CASE("domination is a strict partial order and primitives are the undominated preclusive co-events") {
  gen::Rng rng(24);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto all = all_multiplicative(n);
    for (const auto& x : all) {
      CHECK_FALSE(dominates(x, x));
      for (const auto& y : all) {
        if (dominates(x, y)) CHECK_FALSE(dominates(y, x));
        for (const auto& z : all) {
          if (dominates(x, y) && dominates(y, z)) CHECK(dominates(x, z));
        }
      }
    }
    for (int i = 0; i < 5; ++i) {
      const auto theory = gen::decoherence_theory(rng, n);
      std::vector<EventMask> undominated;
      for (const auto& phi : all) {
        if (!is_preclusive(phi, theory)) continue;
        const bool beaten = std::any_of(all.begin(), all.end(), [&](const CoEvent& psi) {
          return is_preclusive(psi, theory) && dominates(psi, phi);
        });
        if (!beaten) undominated.push_back(phi.dual().mask());
      }
      CHECK(duals_of(primitives(theory)) == undominated);
    }
  }
}
