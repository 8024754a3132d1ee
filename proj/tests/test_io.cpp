#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

using namespace qmt;

TEST_CASE("rationals") {
  CHECK(rational_from_json(Json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(Json(-2)) == -2);
  CHECK(rational_to_json(Rational(1, 3)) == Json("1/3"));
  CHECK(rational_to_json(Rational(4)) == Json("4"));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InvalidArgument);
  CHECK_THROWS_AS(rational_from_json(Json("x")), InvalidArgument);
}

TEST_CASE("theory round trips") {
  const auto t = fixtures::t3();
  const auto back = theory_from_json(theory_to_json(t));
  CHECK(back.space() == t.space());
  CHECK(back.has_decoherence());
  for (EventMask a = 0; a < 8; ++a) CHECK(back.mu(Event(a, 3)) == t.mu(Event(a, 3)));

  const auto c = fixtures::coin(Rational(1, 3));
  const auto cb = theory_from_json(theory_to_json(c));
  CHECK_FALSE(cb.has_decoherence());
  CHECK(std::vector<Rational>(cb.mu_table().begin(), cb.mu_table().end()) ==
        std::vector<Rational>(c.mu_table().begin(), c.mu_table().end()));
}

TEST_CASE("scalar decoherence entries are real") {
  const auto doc = Json::parse(R"({"histories": ["x", "y"],
    "measure": {"type": "decoherence", "matrix": [["1/2", 0], [0, "1/2"]]}})");
  const auto theory = theory_from_json(doc);
  CHECK(theory.mu(Event(0b01, 2)) == Rational(1, 2));
}

TEST_CASE("malformed theories") {
  CHECK_THROWS_AS(theory_from_json(Json::parse(R"({"measure": {}})")), InvalidArgument);
  CHECK_THROWS_AS(theory_from_json(Json::parse(R"({"histories": ["a", "a"],
    "measure": {"type": "table", "values": {"0x0": 0, "0x1": 1, "0x2": 1, "0x3": 1}}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(theory_from_json(Json::parse(R"({"histories": ["a", "b"],
    "measure": {"type": "table", "values": {"0x0": 0, "0x1": 1, "0x3": 1}}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(theory_from_json(Json::parse(R"({"histories": ["a", "b"],
    "measure": {"type": "table", "values": {"0x0": 0, "0x1": 1, "0x2": 0, "0x3": 1, "0x4": 1}}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(theory_from_json(Json::parse(R"({"histories": ["a", "b"],
    "measure": {"type": "decoherence", "matrix": [[1, 0]]}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(theory_from_json(Json::parse(R"({"histories": ["a"], "measure": {"type": "other"}})")),
                  InvalidArgument);
}

TEST_CASE("co-events and partitions") {
  const auto phi = coevent_from_json(Json::parse(R"({"dual": "0x5"})"), 3);
  CHECK(phi.dual() == Event(0b101, 3));
  CHECK(coevent_to_json(phi) == Json::parse(R"({"dual": "0x5"})"));

  const auto table = coevent_from_json(Json::parse(R"({"table": {"0x7": 1, "0x1": 1}})"), 3);
  CHECK(table(Event(0b001, 3)));
  CHECK_FALSE(table(Event(0b011, 3)));
  CHECK(coevent_from_json(coevent_to_json(table), 3) == table);

  CHECK_THROWS_AS(coevent_from_json(Json::parse(R"({"dual": "0x8"})"), 3), InvalidArgument);
  CHECK_THROWS_AS(coevent_from_json(Json::parse(R"({"table": {"0x1": 2}})"), 3), InvalidArgument);
  CHECK_THROWS_AS(coevent_from_json(Json::parse(R"({"other": 1})"), 3), InvalidArgument);

  const auto p = partition_from_json(Json::parse(R"(["0x2", "0x5"])"), 3);
  CHECK(p.blocks().front() == Event(0b101, 3));
  CHECK(partition_to_json(p) == Json::parse(R"(["0x5", "0x2"])"));
  CHECK_THROWS_AS(partition_from_json(Json::parse(R"(["0x3", "0x6"])"), 3), InvalidArgument);
}

TEST_CASE("feasibility serialization") {
  const auto t = fixtures::t3();
  const auto sys = build_feasibility(t, {dual(t.space().event({"a", "c"}))});
  const auto doc = feasibility_to_json(sys, solve_feasibility(sys));
  CHECK(doc.dump().find("inconsistent-row") != std::string::npos);

  const auto c = fixtures::coin(Rational(1, 3));
  const auto cs = build_feasibility(c, all_multiplicative(2));
  const auto cdoc = feasibility_to_json(cs, solve_feasibility(cs));
  CHECK(cdoc.dump().find("\"1/3\"") != std::string::npos);
  CHECK(system_to_json(cs).dump().find("0x3") != std::string::npos);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "qmt_io_good.json";
  const auto bad = dir / "qmt_io_bad.json";
  std::ofstream(good) << theory_to_json(fixtures::t3()).dump();
  std::ofstream(bad) << "{ not json";
  CHECK(load_theory(good).size() == 3);
  CHECK_THROWS_AS(read_json_file(bad), InvalidArgument);
  CHECK_THROWS_AS(read_json_file(dir / "qmt_io_missing.json"), InvalidArgument);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}
