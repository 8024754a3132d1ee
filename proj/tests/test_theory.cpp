#include <doctest.h>

#include "fixtures.hpp"

using namespace qmt;
using fixtures::coin;
using fixtures::t3;

TEST_CASE("measure values") {
  const auto c = coin(Rational(1, 3));
  CHECK(c.mu(c.space().event({"h"})) == Rational(1, 3));
  const auto t = t3();
  const auto& s = t.space();
  CHECK(t.mu(s.empty()) == 0);
  CHECK(t.mu(s.full()) == 1);
  CHECK(t.mu(s.event({"a", "b"})) == 0);
  CHECK(t.mu(s.event({"a", "c"})) == 4);
  CHECK_THROWS_AS(t.mu(Event(1, 2)), InvalidArgument);
}

TEST_CASE("decoherence measures match the double sum") {
  qmt::gen::Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(i) % 6;
    const auto theory = gen::decoherence_theory(rng, n);
    for (EventMask a = 0; a < (1U << n); ++a) {
      const auto direct = oracle::measure_from_matrix(theory.decoherence(), a);
      CHECK(sgn(direct.im) == 0);
      CHECK(theory.mu(Event(a, n)) == direct.re);
    }
  }
}

TEST_CASE("interference terms") {
  const auto c = coin(Rational(1, 3));
  const Event h = c.space().event({"h"}), t = c.space().event({"t"});
  CHECK(interference(c, std::vector<Event>{h, t}) == 0);
  const auto theory = t3();
  const auto& s = theory.space();
  const Event a = s.event({"a"}), b = s.event({"b"}), cc = s.event({"c"});
  CHECK(interference(theory, std::vector<Event>{b, cc}) == -2);
  CHECK(interference(theory, std::vector<Event>{a, b, cc}) == 0);
  CHECK(interference(theory, std::vector<Event>{a}) == theory.mu(a));
  CHECK_THROWS_AS(interference(theory, std::vector<Event>{s.event({"a", "b"}), b}), InvalidArgument);
}

TEST_CASE("level") {
  CHECK(level(coin(Rational(1, 3))) == 1);
  CHECK(level(t3()) == 2);
  // Uniform table with mu({a,b}) moved from 2/3 to 1/2: I_3 = 1/6 on ({a},{b},{c}).
  const std::vector<Rational> mu = {0, Rational(1, 3), Rational(1, 3), Rational(1, 2),
                                    Rational(1, 3), Rational(2, 3), Rational(2, 3), 1};
  const auto theory = HistoriesTheory::from_table(SampleSpace({"a", "b", "c"}), mu);
  CHECK(oracle::level(theory.mu_table(), 3) == 3);
  CHECK(level(theory) == 3);
}

TEST_CASE("level agrees with the tuple-scan oracle") {
  qmt::gen::Rng rng(4);
  for (int i = 0; i < 60; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(i) % 5;
    // Random tables with arbitrary values exercise levels above 2.
    std::vector<Rational> mu(std::size_t{1} << n);
    for (std::size_t a = 1; a < mu.size(); ++a) mu[a] = Rational(static_cast<long>(rng() % 5), 4);
    const auto theory = HistoriesTheory::from_table(SampleSpace::anonymous(n), mu);
    CHECK(level(theory) == oracle::level(theory.mu_table(), n));
  }
}

TEST_CASE("level one iff I_2 vanishes iff Kolmogorov additivity") {
  qmt::gen::Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(i) % 4;
    const auto theory = i % 2 ? gen::classical_table(rng, n) : gen::decoherence_theory(rng, n);
    bool i2_zero = true;
    bool additive = true;
    for (EventMask x = 0; x < (1U << n); ++x) {
      for (EventMask y = 0; y < (1U << n); ++y) {
        if (x & y) continue;
        const Event ex(x, n), ey(y, n);
        if (sgn(interference(theory, std::vector<Event>{ex, ey})) != 0) i2_zero = false;
        if (theory.mu(Event(x | y, n)) != theory.mu(ex) + theory.mu(ey)) additive = false;
      }
    }
    CHECK((level(theory) == 1) == i2_zero);
    CHECK(i2_zero == additive);
  }
}

TEST_CASE("decoherence functional is additive in its first argument") {
  qmt::gen::Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(i) % 5;
    const auto theory = gen::decoherence_theory(rng, n);
    for (EventMask x = 0; x < (1U << n); ++x) {
      for (EventMask y = 0; y < (1U << n); ++y) {
        if (x & y) continue;
        for (EventMask z = 0; z < (1U << n); ++z) {
          const Event ex(x, n), ey(y, n), ez(z, n);
          CHECK(decoherence(theory, Event(x | y, n), ez) == decoherence(theory, ex, ez) + decoherence(theory, ey, ez));
        }
      }
    }
  }
}

TEST_CASE("coarse graining") {
  const auto whole = coarse_grain(t3(), Partition::whole(3));
  CHECK(whole.size() == 1);
  CHECK(whole.mu(Event::full(1)) == 1);

  const auto two = product_theory(2, Rational(1, 3));
  // Toss 1 is bit 0 of the history index, so block 0 = {tt, th} is tails first.
  const Partition by_first({Event(0b1010, 4), Event(0b0101, 4)});
  const auto first = coarse_grain(two, by_first);
  CHECK(first.mu(Event(0b01, 2)) == Rational(2, 3));
  CHECK(first.mu(Event(0b10, 2)) == Rational(1, 3));

  const auto t = t3();
  const auto g = coarse_grain(t, Partition({t.space().event({"a", "c"}), t.space().event({"b"})}));
  CHECK(g.mu(Event(0b01, 2)) == 4);
  CHECK(g.mu(Event(0b10, 2)) == 1);
  CHECK(g.mu(Event(0b11, 2)) == 1);
  CHECK_FALSE(g.has_decoherence());
}

TEST_CASE("coarse-grained measure agrees on every block union") {
  qmt::gen::Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(i) % 4;
    const auto theory = gen::decoherence_theory(rng, n);
    const auto parts = all_partitions(n);
    const Partition& p = parts[rng() % parts.size()];
    const auto g = coarse_grain(theory, p);
    for (EventMask sel = 0; sel < (1U << p.block_count()); ++sel) {
      CHECK(g.mu(Event(sel, static_cast<unsigned>(p.block_count()))) == theory.mu(p.union_of(sel)));
    }
  }
}

TEST_CASE("validation") {
  CHECK(validate(coin(Rational(1, 3))).valid());
  const auto bad = HistoriesTheory::from_table(SampleSpace({"a", "b"}), {0, -1, 2, 1});
  const auto report = validate(bad);
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations.front().axiom == Axiom::positivity);
  CHECK(*report.violations.front().event == bad.space().event({"a"}));

  const auto t = t3();
  const auto r = validate(t);
  CHECK(r.valid());
  std::vector<EventMask> nulls;
  for (const auto& e : r.null_family.events()) nulls.push_back(e.mask());
  CHECK(nulls == std::vector<EventMask>{0x0, 0x3, 0x6});
}

TEST_CASE("normalization is enforced unless relaxed") {
  DecoherenceMatrix d(2);
  d(0, 0) = ComplexRational(1);
  d(1, 1) = ComplexRational(1);
  const auto theory = HistoriesTheory::from_decoherence(SampleSpace({"x", "y"}), d);
  CHECK_FALSE(validate(theory).valid());
  const auto relaxed = validate(theory, {true});
  CHECK(relaxed.valid());
  CHECK(relaxed.warnings.size() == 1);
}

TEST_CASE("non-Hermitian matrices are reported") {
  DecoherenceMatrix d(2);
  d(0, 0) = ComplexRational(Rational(1, 2));
  d(1, 1) = ComplexRational(Rational(1, 2));
  d(0, 1) = ComplexRational(0, 1);
  const auto theory = HistoriesTheory::from_decoherence(SampleSpace({"x", "y"}), d);
  const auto report = validate(theory);
  bool hermiticity = false, imaginary = false;
  for (const auto& v : report.violations) {
    hermiticity = hermiticity || v.axiom == Axiom::hermiticity;
    imaginary = imaginary || v.axiom == Axiom::real_measure;
  }
  CHECK(hermiticity);
  CHECK(imaginary);
}

TEST_CASE("negligible family is the downward closure of the null family") {
  qmt::gen::Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(i) % 7;
    const auto theory = i % 2 ? gen::decoherence_theory(rng, n) : gen::classical_table(rng, n);
    for (const Rational& eps : {Rational(0), Rational(1, 5)}) {
      const auto nulls = theory.nulls(eps);
      const auto expected = oracle::negligible_family(theory.mu_table(), eps);
      for (EventMask a = 0; a < (1U << n); ++a) CHECK(nulls.negligible.test(a) == expected[a]);
    }
  }
}

TEST_CASE("theories beyond the enumeration cap need an override") {
  std::vector<Rational> w(17, Rational(1, 17));
  CHECK_THROWS_AS(HistoriesTheory::from_decoherence(SampleSpace::anonymous(17), DecoherenceMatrix::diagonal(w)),
                  CapExceeded);
}
