#include <doctest.h>

#include <random>

#include "qmt/qmt.hpp"

using namespace qmt;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("0.5"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("scientific formatting rounds and carries") {
  CHECK(to_scientific(BigInt(14436), 2) == "1.4e4");
  CHECK(to_scientific(BigInt(996), 2) == "1.0e3");
  CHECK(to_scientific(Rational(1, 1024), 3) == "9.77e-4");
  CHECK(to_scientific(Rational(0), 3) == "0");
  CHECK(ceil(Rational(24, 1000)) == 1);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("event ring operations") {
  const SampleSpace s({"a", "b", "c"});
  const Event ab = s.event({"a", "b"}), bc = s.event({"b", "c"});
  CHECK(ab + bc == s.event({"a", "c"}));
  CHECK(ab * bc == s.event({"b"}));
  CHECK(ab + ab == s.empty());
  CHECK(ab * s.full() == ab);
  CHECK(ab * s.empty() == s.empty());
  const SampleSpace coin({"h", "t"});
  CHECK(coin.event({"h"}) + coin.event({"t"}) == coin.full());
  CHECK_THROWS_AS(ab + Event(1, 2), InvalidArgument);
  CHECK_THROWS_AS(Event(8, 3), InvalidArgument);
  CHECK(s.describe(s.event(0x5)) == "{a,c}");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    auto pick = [&] { return Event(static_cast<EventMask>(rng()) & ((1U << n) - 1), n); };
    const Event a = pick(), b = pick(), c = pick();
    const Event zero = Event::empty(n), one = Event::full(n);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a + zero == a);
    CHECK(a + a == zero);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * one == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * a == a);
  }
}

TEST_CASE("hex masks") {
  CHECK(to_hex(EventMask{5}) == "0x5");
  CHECK(parse_hex_mask("0xFf") == 255);
  CHECK(parse_hex_mask("a") == 10);
  CHECK_THROWS_AS(parse_hex_mask("0xg"), InvalidArgument);
  CHECK_THROWS_AS(parse_hex_mask(""), InvalidArgument);
}

TEST_CASE("sample spaces reject bad labels") {
  CHECK_THROWS_AS(SampleSpace({"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(SampleSpace(std::vector<std::string>{}), InvalidArgument);
  CHECK_THROWS_AS(SampleSpace::anonymous(25), InvalidArgument);
  CHECK(SampleSpace::anonymous(3).label(2) == "h2");
}
