// Command-line front end. Exit codes: 0 success, 1 malformed input or failed check,
// 2 size cap exceeded, 3 internal error.
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "qmt/qmt.hpp"

namespace {

using qmt::Json;
using qmt::Rational;

enum class Format { human, json, csv };

struct Globals {
  std::string format = "human";
  unsigned threads = 1;
  bool allow_large = false;
  bool relax_normalization = false;

  Format fmt() const { return format == "json" ? Format::json : format == "csv" ? Format::csv : Format::human; }
  qmt::Limits limits() const {
    qmt::Limits l = allow_large ? qmt::Limits::large() : qmt::Limits{};
    l.threads = std::max(1U, threads);
    return l;
  }
};

void print_json(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

std::vector<qmt::Event> parse_events(const std::vector<std::string>& hex, unsigned n) {
  std::vector<qmt::Event> out;
  for (const auto& h : hex) {
    const qmt::EventMask m = qmt::parse_hex_mask(h);
    if (n < 32 && (m >> n) != 0) throw qmt::InvalidArgument("event " + h + " lies outside the sample space");
    out.emplace_back(m, n);
  }
  return out;
}

Json events_json(const std::vector<qmt::Event>& events) {
  Json a = Json::array();
  for (const auto& e : events) a.push_back(qmt::to_hex(e));
  return a;
}

// Accepts inline JSON text or a path to a JSON file.
Json json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw qmt::InvalidArgument(std::string("malformed JSON argument: ") + e.what());
    }
  }
  return qmt::read_json_file(text);
}

// validate ---------------------------------------------------------------------------------

int run_validate(const Globals& g, const std::string& path) {
  const auto theory = qmt::load_theory(path, g.limits());
  const auto report = qmt::validate(theory, {g.relax_normalization});
  const auto& space = theory.space();
  auto violation_json = [&](const qmt::Violation& v) {
    Json j;
    j["axiom"] = std::string(qmt::name(v.axiom));
    j["event"] = v.event ? Json(qmt::to_hex(*v.event)) : Json(nullptr);
    j["detail"] = v.detail;
    return j;
  };
  if (g.fmt() == Format::json) {
    Json doc;
    doc["valid"] = report.valid();
    doc["violations"] = Json::array();
    for (const auto& v : report.violations) doc["violations"].push_back(violation_json(v));
    doc["warnings"] = Json::array();
    for (const auto& v : report.warnings) doc["warnings"].push_back(violation_json(v));
    doc["null"] = events_json(report.null_family.events());
    doc["negligible"] = events_json(report.negligible_family.events());
    print_json(doc);
  } else {
    std::cout << (report.valid() ? "valid" : "invalid") << '\n';
    for (const auto& v : report.violations) {
      std::cout << "violation " << qmt::name(v.axiom) << (v.event ? " at " + space.describe(*v.event) : "") << ": "
                << v.detail << '\n';
    }
    for (const auto& v : report.warnings) std::cout << "warning " << qmt::name(v.axiom) << ": " << v.detail << '\n';
    std::cout << "null:";
    for (const auto& e : report.null_family.events()) std::cout << ' ' << space.describe(e);
    std::cout << "\nnegligible:";
    for (const auto& e : report.negligible_family.events()) std::cout << ' ' << space.describe(e);
    std::cout << '\n';
  }
  return report.valid() ? 0 : 1;
}

// measure ----------------------------------------------------------------------------------

int run_measure(const Globals& g, const std::string& path, const std::vector<std::string>& events,
                const std::vector<std::string>& interference_args) {
  const auto theory = qmt::load_theory(path, g.limits());
  const unsigned n = theory.size();
  std::vector<qmt::Event> selected = parse_events(events, n);
  if (selected.empty() && interference_args.empty()) {
    for (qmt::EventMask a = 0; a < (qmt::EventMask{1} << n); ++a) selected.emplace_back(a, n);
  }
  std::optional<Rational> ik;
  if (!interference_args.empty()) ik = qmt::interference(theory, parse_events(interference_args, n));
  const unsigned level = qmt::level(theory);

  switch (g.fmt()) {
    case Format::json: {
      Json doc;
      Json mu = Json::object();
      for (const auto& e : selected) mu[qmt::to_hex(e)] = qmt::to_string(theory.mu(e));
      doc["mu"] = std::move(mu);
      if (ik) doc["interference"] = {{"k", interference_args.size()}, {"value", qmt::to_string(*ik)}};
      doc["level"] = level;
      print_json(doc);
      break;
    }
    case Format::csv:
      std::cout << "event,mu\n";
      for (const auto& e : selected) std::cout << qmt::to_hex(e) << ',' << qmt::to_string(theory.mu(e)) << '\n';
      break;
    case Format::human:
      for (const auto& e : selected) {
        std::cout << "mu(" << theory.space().describe(e) << ") = " << qmt::to_string(theory.mu(e)) << '\n';
      }
      if (ik) std::cout << "I_" << interference_args.size() << " = " << qmt::to_string(*ik) << '\n';
      std::cout << "level = " << level << '\n';
      break;
  }
  return 0;
}

// primitives -------------------------------------------------------------------------------

int run_primitives(const Globals& g, const std::string& path, const std::string& eps_text, bool classical) {
  const auto theory = qmt::load_theory(path, g.limits());
  const Rational eps = qmt::parse_rational(eps_text);
  const auto set = classical ? qmt::classical_coevents(theory) : qmt::primitives(theory, eps);
  switch (g.fmt()) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& phi : set) a.push_back(qmt::coevent_to_json(phi));
      print_json(a);
      break;
    }
    case Format::csv:
      std::cout << "dual,histories\n";
      for (const auto& phi : set) {
        std::cout << qmt::to_hex(phi.dual()) << ",\"" << theory.space().describe(phi.dual()) << "\"\n";
      }
      break;
    case Format::human:
      for (const auto& phi : set) std::cout << qmt::coevent_to_json(phi).dump() << '\n';
      break;
  }
  return 0;
}

// partition --------------------------------------------------------------------------------

int run_partition(const Globals& g, const std::string& path, const std::string& check, const std::string& blocks_text,
                  const std::string& eps_text) {
  const auto theory = qmt::load_theory(path, g.limits());
  const Rational eps = qmt::parse_rational(eps_text);
  const auto& space = theory.space();
  auto describe = [&](const qmt::Partition& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.block_count(); ++i) s += (i ? "," : "") + space.describe(p.blocks()[i]);
    return s + "}";
  };

  if (check == "principle") {
    const auto pcp = qmt::principle_classical_partition(theory, eps);
    if (g.fmt() == Format::json) {
      Json doc;
      doc["partition"] = qmt::partition_to_json(pcp.partition);
      Json classes = Json::array();
      for (const auto& c : pcp.fat.classes) classes.push_back(events_json(c));
      doc["classes"] = std::move(classes);
      doc["fat_duals"] = events_json(pcp.fat.fat_duals);
      doc["uncovered"] = events_json(pcp.fat.uncovered);
      print_json(doc);
    } else {
      std::cout << "principle classical partition: " << describe(pcp.partition) << '\n';
      for (std::size_t i = 0; i < pcp.fat.classes.size(); ++i) {
        std::cout << "fat dual " << space.describe(pcp.fat.fat_duals[i]) << " from " << pcp.fat.classes[i].size()
                  << " primitive dual(s)\n";
      }
      for (const auto& e : pcp.fat.uncovered) std::cout << "uncovered " << space.describe(e) << '\n';
    }
    return 0;
  }

  if (blocks_text.empty()) throw qmt::InvalidArgument("--blocks is required for the " + check + " check");
  const auto partition = qmt::partition_from_json(json_argument(blocks_text), theory.size());
  bool verdict = false;
  if (check == "decoherent") {
    verdict = qmt::is_decoherent(theory, partition);
  } else if (check == "separable") {
    verdict = qmt::is_preclusively_separable(theory, partition);
  } else {
    verdict = qmt::is_classical_wrt_primitives(theory, partition, eps);
  }
  if (g.fmt() == Format::json) {
    print_json({{"check", check}, {"partition", qmt::partition_to_json(partition)}, {"result", verdict}});
  } else {
    std::cout << check << ' ' << describe(partition) << ": " << (verdict ? "true" : "false") << '\n';
  }
  return 0;
}

// coin -------------------------------------------------------------------------------------

struct CoinArgs {
  unsigned n = 0;
  std::string p = "1/2";
  std::string eps = "1/1000";
  std::string action;
  unsigned heads = 0;
  bool exact = false;
};

int run_coin(const Globals& g, const CoinArgs& a) {
  const Rational p = qmt::parse_rational(a.p);
  const Rational eps = qmt::parse_rational(a.eps);
  const bool json = g.fmt() == Format::json;

  if (a.action == "even-odd") {
    const auto r = qmt::even_odd_witness(a.n, eps);
    if (json) {
      print_json({{"m", r.m},
                  {"h_even", r.h_even},
                  {"h_odd", r.h_odd},
                  {"greater_even", r.greater_even.get_str()},
                  {"threshold", qmt::to_string(r.threshold)},
                  {"greater_exceeds_threshold", r.greater_exceeds_threshold},
                  {"primitive_cardinality", r.primitive_cardinality.get_str()},
                  {"witness", r.witness},
                  {"greater_even_lesser_odd", r.greater_even_lesser_odd.get_str()},
                  {"odd_partition_nonclassical", r.odd_partition_nonclassical},
                  {"certified", r.certified()}});
    } else {
      std::cout << "H^E_eps = H^O_eps = " << r.h_even << '\n'
                << "|G_{H^E}| = " << qmt::to_scientific(r.greater_even, 6) << " > eps 2^" << a.n << " = "
                << qmt::to_scientific(r.threshold, 6) << ": " << (r.greater_exceeds_threshold ? "yes" : "no") << '\n'
                << "primitive dual size Int(eps 2^" << a.n << ") = " << qmt::to_scientific(r.primitive_cardinality, 6)
                << '\n'
                << "gamma_E = " << (r.witness.size() > 16 ? r.witness.substr(0, 16) + "..." : r.witness)
                << " in G_{H^E} and L_{H^O}\n"
                << "|G_{H^E} n L_{H^O}| = " << qmt::to_scientific(r.greater_even_lesser_odd, 6)
                << " < Int(eps 2^" << a.n << "): " << (r.odd_partition_nonclassical ? "yes" : "no") << '\n'
                << (r.certified() ? "certified" : "not certified") << '\n';
    }
    return r.certified() ? 0 : 1;
  }

  const qmt::BernoulliModel model(a.n, p, eps);
  if (a.action == "h-epsilon") {
    const auto h = qmt::h_epsilon(model);
    if (json) {
      print_json({{"h_epsilon", h ? Json(*h) : Json(nullptr)}});
    } else {
      std::cout << (h ? std::to_string(*h) : std::string("none")) << '\n';
    }
  } else if (a.action == "straddle" || a.action == "primitive-cardinality") {
    const auto v = a.action == "straddle" ? qmt::straddle_set_cardinality(model)
                                          : qmt::uniform_primitive_cardinality(model);
    if (json) {
      print_json({{"value", v.get_str()}, {"scientific", qmt::to_scientific(v, 6)}});
    } else {
      const bool short_enough = mpz_sizeinbase(v.get_mpz_t(), 10) <= 15;
      std::cout << (a.exact || short_enough ? v.get_str() : qmt::to_scientific(v, 6)) << '\n';
    }
  } else if (a.action == "singletons") {
    const auto s = qmt::singleton_preclusion(model);
    if (json) {
      print_json({{"precluded", s.precluded.get_str()}, {"total", s.total.get_str()}});
    } else {
      std::cout << s.precluded.get_str() << " of " << s.total.get_str() << " single histories have probability below eps\n";
    }
  } else if (a.action == "cumulative") {
    const auto v = qmt::cumulative(model, a.heads);
    if (json) {
      print_json({{"heads", a.heads}, {"cumulative", qmt::to_string(v)}});
    } else {
      std::cout << (a.exact ? qmt::to_string(v) : qmt::to_scientific(v, 17)) << '\n';
    }
  } else {  // tail-csv
    const qmt::BinomialTail tail(model);
    std::cout << "H,P(N_H),P(L_H)\n";
    for (unsigned h = 0; h <= a.n; ++h) {
      if (a.exact) {
        std::cout << h << ',' << qmt::to_string(tail.count(h)) << ',' << qmt::to_string(tail.cumulative(h)) << '\n';
      } else {
        std::cout << h << ',' << qmt::to_scientific(tail.count(h), 17) << ','
                  << qmt::to_scientific(tail.cumulative(h), 17) << '\n';
      }
    }
  }
  return 0;
}

// feasibility ------------------------------------------------------------------------------

struct FeasibilityArgs {
  std::string theory;
  std::string action = "solve";
  std::string coevents;
  std::string mode = "all-events";
  std::vector<std::string> observable;
  std::string phi;
};

int run_feasibility(const Globals& g, const FeasibilityArgs& a) {
  const auto theory = qmt::load_theory(a.theory, g.limits());
  const unsigned n = theory.size();
  std::vector<qmt::CoEvent> set;
  if (a.coevents.empty()) {
    set = qmt::all_multiplicative(n);
  } else {
    const Json doc = json_argument(a.coevents);
    if (!doc.is_array()) throw qmt::InvalidArgument("--coevents must be a JSON array of co-events");
    for (const auto& c : doc) set.push_back(qmt::coevent_from_json(c, n));
  }
  const auto mode = a.mode == "binary"       ? qmt::FeasibilityMode::binary
                    : a.mode == "observable" ? qmt::FeasibilityMode::observable
                                             : qmt::FeasibilityMode::all_events;
  const auto system = qmt::build_feasibility(theory, std::move(set), mode, parse_events(a.observable, n));
  const bool json = g.fmt() == Format::json;

  if (a.action == "build") {
    if (json) {
      print_json(qmt::system_to_json(system));
    } else {
      for (const auto& row : system.rows) {
        std::string lhs;
        for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
          if (row.coefficients[k]) lhs += (lhs.empty() ? "" : " + ") + ("p" + qmt::to_hex(system.coevents[k].dual()));
        }
        std::cout << (row.event ? theory.space().describe(*row.event) : std::string("sum")) << ": "
                  << (lhs.empty() ? "0" : lhs) << " = " << qmt::to_string(row.rhs) << '\n';
      }
    }
    return 0;
  }

  if (a.action == "max") {
    if (a.phi.empty()) throw qmt::InvalidArgument("--phi is required for max");
    const auto target = qmt::CoEvent::multiplicative(parse_events({a.phi}, n).front());
    const auto it = std::find(system.coevents.begin(), system.coevents.end(), target);
    if (it == system.coevents.end()) throw qmt::InvalidArgument("co-event " + a.phi + " is not in the set");
    const auto index = static_cast<std::size_t>(it - system.coevents.begin());
    const Rational best = qmt::max_probability(system, index);
    const auto report = qmt::is_quadratic(target, g.limits());
    if (json) {
      print_json({{"dual", a.phi}, {"max_probability", qmt::to_string(best)}, {"quadratic", report.is_quadratic}});
    } else {
      std::cout << "max p(" << theory.space().describe(target.dual()) << ") = " << qmt::to_string(best)
                << (report.is_quadratic ? " (quadratic)" : " (not quadratic)") << '\n';
    }
    return 0;
  }

  const auto result = qmt::solve_feasibility(system);
  if (json) {
    print_json(qmt::feasibility_to_json(system, result));
  } else if (result.feasible()) {
    std::cout << "feasible\n";
    for (std::size_t k = 0; k < system.coevents.size(); ++k) {
      std::cout << "p(" << theory.space().describe(system.coevents[k].dual())
                << ") = " << qmt::to_string(result.assignment[k]) << '\n';
    }
  } else if (result.status == qmt::FeasibilityStatus::inconsistent_row) {
    const auto& row = system.rows[*result.row];
    std::cout << "infeasible: row " << *result.row << " ("
              << (row.event ? theory.space().describe(*row.event) : std::string("sum")) << ") reads 0 = "
              << qmt::to_string(row.rhs) << '\n';
  } else {
    std::cout << "infeasible: Farkas multipliers";
    for (const auto& y : result.farkas) std::cout << ' ' << qmt::to_string(y);
    std::cout << '\n';
  }
  return 0;
}

// hypothesis -------------------------------------------------------------------------------

struct HypothesisArgs {
  unsigned n = 20;
  std::string p = "1/2";
  std::string p0 = "1/2";
  std::string eps = "1/1000";
  std::uint64_t seed = 1;
  std::string sequence;
  std::uint64_t calibrate = 0;
};

int run_hypothesis(const Globals& g, const HypothesisArgs& a) {
  const Rational p0 = qmt::parse_rational(a.p0);
  const Rational eps = qmt::parse_rational(a.eps);
  const bool json = g.fmt() == Format::json;
  if (a.calibrate > 0) {
    const auto r = qmt::calibrate_rejection_rate(a.n, p0, eps, a.calibrate, a.seed, g.limits().threads);
    if (json) {
      print_json({{"trials", r.trials},
                  {"rejections", r.rejections},
                  {"exact_rejection_mass", qmt::to_string(r.rejection_mass)},
                  {"deviation_sd", r.deviation_sigmas}});
    } else {
      std::cout << r.rejections << " of " << r.trials << " rejected; exact rejection mass "
                << qmt::to_scientific(r.rejection_mass, 6) << "; " << r.deviation_sigmas << " sd\n";
    }
    return 0;
  }
  const auto seq = a.sequence.empty() ? qmt::simulate(a.n, qmt::parse_rational(a.p), a.seed)
                                      : qmt::TrialSequence::parse(a.sequence);
  const auto r = qmt::hypothesis_test(seq, p0, eps);
  const char* verdict = r.verdict == qmt::TestVerdict::reject ? "reject" : "fail-to-reject";
  if (json) {
    print_json({{"sequence", seq.to_string()},
                {"heads", r.heads},
                {"cumulative", qmt::to_string(r.cumulative)},
                {"verdict", verdict}});
  } else {
    std::cout << seq.to_string() << '\n'
              << "heads = " << r.heads << ", P(L_H) = " << qmt::to_scientific(r.cumulative, 6) << ": " << verdict
              << '\n';
  }
  return 0;
}

// paper-check: every acceptance criterion -------------------------------------------------

int run_paper_check(const Globals& g, bool timings) {
  bool all = true;
  Json doc = Json::array();
  for (auto r : qmt::acceptance::run_criteria(g.limits())) {
    all = all && r.passed();
    if (g.fmt() == Format::json) {
      doc.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"detail", r.detail}});
      continue;
    }
    if (timings) {
      std::cout << qmt::acceptance::format_line(r) << '\n';
    } else {
      std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << '\n';
    }
  }
  if (g.fmt() == Format::json) print_json(doc);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum measure theory and co-event analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads for exhaustive scans");
  app.add_flag("--allow-large", g.allow_large, "Raise the explicit enumeration cap to 24 histories");
  app.add_flag("--relax-normalization", g.relax_normalization, "Report D(Omega,Omega) != 1 as a warning");

  std::string theory_path;
  auto* validate = app.add_subcommand("validate", "Check the measure axioms of a theory file");
  validate->add_option("--theory", theory_path, "Theory JSON")->required();

  std::vector<std::string> events, interference_args;
  auto* measure = app.add_subcommand("measure", "Measures, interference terms and level");
  measure->add_option("--theory", theory_path, "Theory JSON")->required();
  measure->add_option("--event", events, "Hex event masks (default: all events)");
  measure->add_option("--interference", interference_args, "Disjoint hex events for I_k");

  std::string eps_text = "0";
  bool classical = false;
  auto* prim = app.add_subcommand("primitives", "Primitive preclusive multiplicative co-events");
  prim->add_option("--theory", theory_path, "Theory JSON")->required();
  prim->add_option("--eps", eps_text, "Preclusion threshold as p/q (0 = exact)");
  prim->add_flag("--classical", classical, "List the preclusive classical co-events instead");

  std::string check, blocks;
  auto* part = app.add_subcommand("partition", "Partition predicates and the principle classical partition");
  part->add_option("--theory", theory_path, "Theory JSON")->required();
  part->add_option("check", check, "decoherent | separable | classical | principle")
      ->required()
      ->check(CLI::IsMember({"decoherent", "separable", "classical", "principle"}));
  part->add_option("--blocks", blocks, "Partition as a JSON array of hex masks, or a file");
  part->add_option("--eps", eps_text, "Preclusion threshold as p/q");

  CoinArgs coin_args;
  auto* coin = app.add_subcommand("coin", "Repeated-coin analytics");
  coin->add_option("--n", coin_args.n, "Number of tosses")->required();
  coin->add_option("--p", coin_args.p, "Heads probability as p/q");
  coin->add_option("--eps", coin_args.eps, "Threshold as p/q");
  coin->add_option("--heads", coin_args.heads, "Heads count for cumulative");
  coin->add_flag("--exact", coin_args.exact, "Print exact integers and rationals");
  coin->add_option("action", coin_args.action)
      ->required()
      ->check(CLI::IsMember(
          {"h-epsilon", "straddle", "even-odd", "tail-csv", "primitive-cardinality", "singletons", "cumulative"}));

  FeasibilityArgs feas_args;
  auto* feas = app.add_subcommand("feasibility", "Probability measures on co-event sets");
  feas->add_option("--theory", feas_args.theory, "Theory JSON")->required();
  feas->add_option("--coevents", feas_args.coevents, "JSON array of co-events or a file (default: all multiplicative)");
  feas->add_option("--mode", feas_args.mode)->check(CLI::IsMember({"all-events", "binary", "observable"}));
  feas->add_option("--observable", feas_args.observable, "Observable hex events for --mode observable");
  feas->add_option("--phi", feas_args.phi, "Dual of the co-event to maximize");
  feas->add_option("action", feas_args.action)->check(CLI::IsMember({"build", "solve", "max"}));

  HypothesisArgs hyp_args;
  auto* hyp = app.add_subcommand("hypothesis", "Simulate a repeated trial and run the one-tailed test");
  hyp->add_option("--n", hyp_args.n, "Number of tosses");
  hyp->add_option("--p", hyp_args.p, "True heads probability for simulation");
  hyp->add_option("--p0", hyp_args.p0, "Hypothesized heads probability");
  hyp->add_option("--eps", hyp_args.eps, "Rejection level");
  hyp->add_option("--seed", hyp_args.seed, "Generator seed");
  hyp->add_option("--sequence", hyp_args.sequence, "Test this h/t sequence instead of simulating");
  hyp->add_option("--calibrate", hyp_args.calibrate, "Simulate this many sequences under p0 and count rejections");

  bool timings = false;
  auto* check_all = app.add_subcommand("paper-check", "Run every acceptance criterion");
  check_all->add_flag("--timings", timings, "Show measured times against budgets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) return run_validate(g, theory_path);
    if (*measure) return run_measure(g, theory_path, events, interference_args);
    if (*prim) return run_primitives(g, theory_path, eps_text, classical);
    if (*part) return run_partition(g, theory_path, check, blocks, eps_text);
    if (*coin) return run_coin(g, coin_args);
    if (*feas) return run_feasibility(g, feas_args);
    if (*hyp) return run_hypothesis(g, hyp_args);
    if (*check_all) return run_paper_check(g, timings);
  } catch (const qmt::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qmt::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
