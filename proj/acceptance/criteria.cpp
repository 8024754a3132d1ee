#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "lemmas.hpp"

namespace qmt::acceptance {

namespace {

struct Outcome {
  bool correct = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && correct) detail = what;
    correct = correct && ok;
  }
  void note(const std::string& s) {
    if (correct) detail += (detail.empty() ? "" : "; ") + s;
  }
};

HistoriesTheory coin(const Rational& p) {
  return HistoriesTheory::from_table(SampleSpace({"h", "t"}), {0, p, 1 - p, 1});
}

Outcome coin_coevents() {
  Outcome o;
  const auto theory = coin(Rational(1, 3));
  const auto& s = theory.space();
  const std::vector<CoEvent> expected = {dual(s.event({"h"})), dual(s.event({"t"}))};
  o.require(classical_coevents(theory) == expected, "classical co-events are not {h*, t*}");
  o.require(primitives(theory) == expected, "primitives are not {h*, t*}");
  const CoEvent omega = dual(s.full());
  std::string row;
  for (EventMask a = 0; a < 4; ++a) row += eval(omega, s.event(a)) ? '1' : '0';
  o.require(row == "0001", "Omega* truth table on (empty, h, t, Omega) is " + row);
  o.note("C = M = {h*, t*}; Omega* row " + row);
  return o;
}

Outcome single_histories() {
  Outcome o;
  const Rational eps(1, 1000);
  const auto ten = singleton_preclusion(BernoulliModel(10, Rational(1, 2), eps));
  const auto nine = singleton_preclusion(BernoulliModel(9, Rational(1, 2), eps));
  o.require(ten.all_precluded(), "n = 10: not every singleton dual fails");
  o.require(nine.none_precluded(), "n = 9: some singleton dual fails");
  o.note("n=10: " + ten.precluded.get_str() + "/" + ten.total.get_str() + " singletons eps-null; n=9: " +
         nine.precluded.get_str() + "/" + nine.total.get_str());
  return o;
}

Outcome h_eps_1000() {
  Outcome o;
  const BernoulliModel model(1000, Rational(1, 2), Rational(1, 1000));
  const auto h = h_epsilon(model);
  o.require(h && *h == 450, "H_eps is " + (h ? std::to_string(*h) : std::string("undefined")));
  const BinomialTail tail(model);
  o.require(tail.cumulative(450) < model.eps(), "P(L_450) >= eps");
  o.require(!(tail.cumulative(451) < model.eps()), "P(L_451) < eps");
  o.note("H_eps = 450; P(L_450) = " + to_scientific(tail.cumulative(450), 4) +
         ", P(L_451) = " + to_scientific(tail.cumulative(451), 4));
  return o;
}

Outcome straddle() {
  Outcome o;
  const BernoulliModel model(1000, Rational(1, 2), Rational(1, 1000));
  const BigInt s = straddle_set_cardinality(model);
  const std::string sci = to_scientific(s, 2);
  o.require(sci == "1.4e297", "|S| prints as " + sci);
  const BinomialTail tail(model);
  const Rational pn(BigInt(1), tail.denominator());
  const Rational total = tail.cumulative(450) + pn * s;
  o.require(model.eps() <= total, "eps > P(L_450) + p^n |S|");
  o.require(total < model.eps() + pn, "P(L_450) + p^n |S| >= eps + p^n");
  o.note("|S| = " + to_scientific(s, 6) + " (" + std::to_string(s.get_str().size()) + " digits); sandwich holds");
  return o;
}

Outcome even_odd() {
  Outcome o;
  const auto r = even_odd_witness(2000, Rational(1, 1000));
  o.require(r.h_even == 450 && r.h_odd == 450, "H^E, H^O = " + std::to_string(r.h_even) + ", " + std::to_string(r.h_odd));
  o.require(r.greater_exceeds_threshold, "|G_{H^E}| <= eps 2^2000");
  o.require(r.certified(), "even/odd witness not certified");
  const Check small = even_odd_small_scale();
  o.require(small.ok, "small-scale cross-check: " + small.detail);
  o.note("H^E = H^O = 450; |G_{H^E}| = " + to_scientific(r.greater_even, 4) + " > eps 2^2000 = " +
         to_scientific(r.threshold, 4) + "; explicit 2m=8 (eps=5/16) and 2m=4 cross-checks match");
  return o;
}

Outcome uniform_collapse(const HistoriesTheory& four_tosses) {
  Outcome o;
  const auto coarse = principle_classical_partition(four_tosses, Rational(3, 16));
  const auto fine = principle_classical_partition(four_tosses, Rational(1, 32));
  o.require(coarse.partition == Partition::whole(16), "eps = 3/16 does not collapse to {Omega}");
  o.require(fine.partition == Partition::singletons(16), "eps = 1/32 is not all singletons");
  o.note("4 fair tosses: eps=3/16 -> {Omega}; eps=1/32 -> 16 singletons");
  return o;
}

Outcome quadratic_support() {
  Outcome o;
  const auto theory = HistoriesTheory::from_table(
      SampleSpace({"a", "b", "c"}),
      {0, Rational(1, 3), Rational(1, 3), Rational(2, 3), Rational(1, 3), Rational(2, 3), Rational(2, 3), 1});
  const auto system = build_feasibility(theory, all_multiplicative(3));
  const auto solved = solve_feasibility(system);
  o.require(solved.feasible(), "uniform 3-history system is infeasible");
  int non_quadratic = 0;
  for (std::size_t k = 0; k < system.coevents.size(); ++k) {
    if (is_quadratic(system.coevents[k]).is_quadratic) continue;
    ++non_quadratic;
    o.require(sgn(max_probability(system, k)) == 0, "max p > 0 for non-quadratic " + to_hex(system.coevents[k].dual()));
  }
  const auto omega = is_quadratic(dual(theory.space().full()));
  const auto& s = theory.space();
  o.require(!omega.is_quadratic, "Omega* reported quadratic");
  o.require(omega.witness && (*omega.witness)[0] == s.event({"a"}) && (*omega.witness)[1] == s.event({"b"}) &&
                (*omega.witness)[2] == s.event({"c"}),
            "Omega* witness is not ({a},{b},{c})");
  o.note(std::to_string(non_quadratic) + " non-quadratic co-events, all with max p = 0; Omega* witness ({a},{b},{c})");
  return o;
}

Outcome lemma_suites() {
  Outcome o;
  gen::Rng rng(20240601);
  const std::pair<const char*, Check> checks[] = {
      {"homomorphisms", homomorphisms_are_singletons(4)},
      {"principal filters", principal_filters(5)},
      {"classical primitives", classical_primitives(rng, 100, 6)},
      {"primitive existence", primitive_existence(rng, 34, 6, {Rational(0), Rational(1, 7), Rational(1, 13)})},
      {"quadratic lemmas", quadratic_lemmas(5)},
      {"principle partition minimality", principle_partition_minimality(rng, 100, 6)},
  };
  long cases = 0;
  for (const auto& [name, c] : checks) {
    o.require(c.ok, std::string(name) + ": " + c.detail);
    cases += c.cases;
  }
  o.note(std::to_string(cases) + " cases across 6 suites");
  return o;
}

Outcome hierarchy() {
  Outcome o;
  gen::Rng rng(77);
  const Check c = interference_hierarchy(rng, 100, 6);
  o.require(c.ok, c.detail);
  o.note(std::to_string(c.cases) + " triples and diagonal theories checked");
  return o;
}

Outcome calibration(unsigned threads) {
  Outcome o;
  const auto r = calibrate_rejection_rate(100, Rational(1, 2), Rational(1, 100), 100000, 1, threads);
  o.require(r.within(3.0), "rejection frequency off by " + std::to_string(r.deviation_sigmas) + " sd");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu/%llu rejected (%.5f) vs exact %.5f, %.2f sd",
                static_cast<unsigned long long>(r.rejections), static_cast<unsigned long long>(r.trials), r.frequency,
                r.rejection_mass.get_d(), r.deviation_sigmas);
  o.note(buf);
  return o;
}

template <class F>
CriterionResult timed(int id, std::string title, double budget, F&& body, bool warm_up) {
  using clock = std::chrono::steady_clock;
  CriterionResult r{id, std::move(title), false, 0, budget, {}};
  try {
    if (warm_up) (void)body();
    const auto start = clock::now();
    Outcome o = body();
    r.seconds = std::chrono::duration<double>(clock::now() - start).count();
    r.correct = o.correct;
    r.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    r.correct = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const Limits& limits, const std::vector<int>& only) {
  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  std::vector<CriterionResult> out;
  if (wanted(1)) out.push_back(timed(1, "coin co-events at p = 1/3", 1e-3, coin_coevents, true));
  if (wanted(2)) out.push_back(timed(2, "single histories at n = 10 vs n = 9", 1e-3, single_histories, true));
  if (wanted(3)) out.push_back(timed(3, "H_eps = 450 for 1000 fair tosses", 5, h_eps_1000, false));
  if (wanted(4)) out.push_back(timed(4, "straddle set |S| ~ 1.4e297", 5, straddle, false));
  if (wanted(5)) out.push_back(timed(5, "even/odd witness at 2m = 2000", 10, even_odd, false));
  if (wanted(6)) {
    // The explicit 16-history theory is set up outside the timed region.
    const auto four_tosses = product_theory(4, Rational(1, 2), limits);
    out.push_back(timed(6, "uniform-trial collapse of the principle partition", 10e-3,
                        [&] { return uniform_collapse(four_tosses); }, true));
  }
  if (wanted(7)) out.push_back(timed(7, "quadratic rule forced on feasible co-event measures", 0.1, quadratic_support, true));
  if (wanted(8)) out.push_back(timed(8, "lemma suites", 60, lemma_suites, false));
  if (wanted(9)) out.push_back(timed(9, "interference hierarchy on random decoherence functionals", 30, hierarchy, false));
  if (wanted(10)) {
    out.push_back(timed(10, "weak-Cournot rejection calibration", 30, [&] { return calibration(limits.threads); }, false));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  if (r.budget_seconds < 1) {
    std::snprintf(timing, sizeof timing, "%.3f ms / %.0f ms", r.seconds * 1e3, r.budget_seconds * 1e3);
  } else {
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", r.seconds, r.budget_seconds);
  }
  std::ostringstream line;
  line << (r.passed() ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  [" << timing << "]";
  if (r.correct && !r.passed()) line << "  over time budget";
  if (!r.detail.empty()) line << "  " << r.detail;
  return line.str();
}

}  // namespace qmt::acceptance
