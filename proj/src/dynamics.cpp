#include "qmt/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "qmt/error.hpp"
#include "qmt/simplex.hpp"

namespace qmt {

namespace {

// Truth of phi on a raw mask, without per-call space checks.
class Truth {
 public:
  explicit Truth(const CoEvent& phi) {
    if (phi.is_multiplicative_form()) {
      dual_ = phi.dual().mask();
    } else {
      table_ = phi.table();
    }
  }
  bool operator()(EventMask m) const { return dual_ ? (*dual_ & ~m) == 0 : table_.test(m); }

 private:
  std::optional<EventMask> dual_;
  EventBitmap table_;
};

void require_disjoint_triple(const CoEvent& phi, const Event& a, const Event& b, const Event& c) {
  const unsigned n = phi.space_size();
  if (a.size() != n || b.size() != n || c.size() != n) throw InvalidArgument("triple is over a different space");
  if ((a.mask() & b.mask()) || (b.mask() & c.mask()) || (a.mask() & c.mask())) {
    throw InvalidArgument("the triple must be pairwise disjoint");
  }
}

int r_masks(const Truth& t, EventMask a, EventMask b, EventMask c) {
  return int(t(a | b | c)) - int(t(a | b)) - int(t(b | c)) - int(t(c | a)) + int(t(a)) + int(t(b)) + int(t(c));
}

}  // namespace

bool q_value(const CoEvent& phi, const Event& a, const Event& b, const Event& c) {
  require_disjoint_triple(phi, a, b, c);
  return (r_masks(Truth(phi), a.mask(), b.mask(), c.mask()) & 1) != 0;
}

int r_value(const CoEvent& phi, const Event& a, const Event& b, const Event& c) {
  require_disjoint_triple(phi, a, b, c);
  return r_masks(Truth(phi), a.mask(), b.mask(), c.mask());
}

QuadraticReport is_quadratic(const CoEvent& phi, const Limits& limits) {
  const unsigned n = phi.space_size();
  require_within(n, limits.triple_scan_cap, "disjoint-triple scan");
  const Truth truth(phi);
  const std::uint64_t total = std::uint64_t{1} << (2 * n);

  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::uint64_t> {
    for (std::uint64_t t = begin; t < end; ++t) {
      EventMask part[4] = {0, 0, 0, 0};
      for (unsigned i = 0; i < n; ++i) part[(t >> (2 * (n - 1 - i))) & 3U] |= EventMask{1} << i;
      if ((r_masks(truth, part[1], part[2], part[3]) & 1) != 0) return t;
    }
    return std::nullopt;
  };

  const unsigned threads = total >= 4096 ? std::max(1U, limits.threads) : 1U;
  std::vector<std::optional<std::uint64_t>> found(threads);
  if (threads == 1) {
    found[0] = scan(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back([&, k] { found[k] = scan(std::min(total, k * chunk), std::min(total, (k + 1) * chunk)); });
    }
    for (auto& th : pool) th.join();
  }

  QuadraticReport report;
  for (const auto& f : found) {
    if (!f) continue;
    // Chunks are in index order, so the first hit is the global minimum.
    EventMask part[4] = {0, 0, 0, 0};
    for (unsigned i = 0; i < n; ++i) part[(*f >> (2 * (n - 1 - i))) & 3U] |= EventMask{1} << i;
    report.is_quadratic = false;
    report.witness = std::array<Event, 3>{Event(part[1], n), Event(part[2], n), Event(part[3], n)};
    break;
  }
  return report;
}

bool satisfies_quadratic_identity(const CoEvent& phi) {
  const unsigned n = phi.space_size();
  require_within(n, 8, "unrestricted triple identity");
  const Truth t(phi);
  const EventMask count = EventMask{1} << n;
  for (EventMask a = 0; a < count; ++a) {
    for (EventMask b = 0; b < count; ++b) {
      for (EventMask c = 0; c < count; ++c) {
        const bool lhs = t(a ^ b ^ c);
        const bool rhs = t(a ^ b) ^ t(b ^ c) ^ t(c ^ a) ^ t(a) ^ t(b) ^ t(c);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

FeasibilitySystem build_feasibility(const HistoriesTheory& theory, std::vector<CoEvent> coevents, FeasibilityMode mode,
                                    const std::vector<Event>& observable) {
  if (coevents.empty()) throw InvalidArgument("feasibility needs a nonempty co-event set");
  const unsigned n = theory.size();
  for (std::size_t k = 0; k < coevents.size(); ++k) {
    if (!coevents[k].is_multiplicative_form()) throw InvalidArgument("feasibility requires multiplicative co-events");
    if (coevents[k].space_size() != n) throw InvalidArgument("co-event over a different space than the theory");
    for (std::size_t j = 0; j < k; ++j) {
      if (coevents[j] == coevents[k]) throw InvalidArgument("duplicate co-event " + to_hex(coevents[k].dual()));
    }
  }

  std::vector<EventMask> events;
  const EventMask count = EventMask{1} << n;
  switch (mode) {
    case FeasibilityMode::all_events:
      for (EventMask a = 0; a < count; ++a) events.push_back(a);
      break;
    case FeasibilityMode::binary:
      for (EventMask a = 0; a < count; ++a) {
        const Rational& m = theory.mu(Event(a, n));
        if (sgn(m) == 0 || m == 1) events.push_back(a);
      }
      break;
    case FeasibilityMode::observable:
      for (const Event& e : observable) {
        require_event_of(theory, e);
        events.push_back(e.mask());
      }
      std::sort(events.begin(), events.end());
      events.erase(std::unique(events.begin(), events.end()), events.end());
      break;
  }

  FeasibilitySystem system{n, mode, std::move(coevents), {}};
  bool normalized = false;
  for (EventMask a : events) {
    FeasibilityRow row{Event(a, n), {}, theory.mu(Event(a, n))};
    for (const CoEvent& phi : system.coevents) row.coefficients.push_back((phi.dual().mask() & ~a) == 0 ? 1 : 0);
    if (a == count - 1 && row.rhs == 1) normalized = true;
    system.rows.push_back(std::move(row));
  }
  if (!normalized) {
    system.rows.push_back({std::nullopt, std::vector<std::uint8_t>(system.coevents.size(), 1), Rational(1)});
  }
  return system;
}

namespace {

LinearProgram to_program(const FeasibilitySystem& system) {
  LinearProgram lp;
  lp.columns = system.coevents.size();
  for (const auto& row : system.rows) {
    std::vector<Rational> coeffs(row.coefficients.begin(), row.coefficients.end());
    lp.a.push_back(std::move(coeffs));
    lp.b.push_back(row.rhs);
  }
  return lp;
}

std::optional<std::size_t> inconsistent_row(const FeasibilitySystem& system) {
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    const auto& row = system.rows[r];
    const bool zero = std::all_of(row.coefficients.begin(), row.coefficients.end(), [](std::uint8_t c) { return c == 0; });
    if (zero && sgn(row.rhs) != 0) return r;
  }
  return std::nullopt;
}

}  // namespace

FeasibilityResult solve_feasibility(const FeasibilitySystem& system) {
  FeasibilityResult result;
  if (auto r = inconsistent_row(system)) {
    result.status = FeasibilityStatus::inconsistent_row;
    result.row = r;
    return result;
  }
  LpResult lp = solve_lp(to_program(system));
  if (lp.status == LpStatus::infeasible) {
    result.status = FeasibilityStatus::infeasible;
    result.farkas = std::move(lp.farkas);
  } else {
    result.status = FeasibilityStatus::feasible;
    result.assignment = std::move(lp.x);
  }
  return result;
}

Rational max_probability(const FeasibilitySystem& system, std::size_t index) {
  if (index >= system.coevents.size()) throw InvalidArgument("co-event index out of range");
  if (inconsistent_row(system)) throw InvalidArgument("feasibility system is infeasible");
  std::vector<Rational> objective(system.coevents.size(), Rational(0));
  objective[index] = 1;
  LpResult lp = solve_lp(to_program(system), objective);
  if (lp.status == LpStatus::infeasible) throw InvalidArgument("feasibility system is infeasible");
  if (lp.status == LpStatus::unbounded) throw Error("probability objective is unbounded");
  return lp.objective;
}

std::vector<CoEvent> all_multiplicative(unsigned n) {
  require_within(n, kMaxHistories, "co-event enumeration");
  std::vector<CoEvent> out;
  for (EventMask a = 1; a < (EventMask{1} << n); ++a) out.push_back(CoEvent::multiplicative(Event(a, n)));
  return out;
}

}  // namespace qmt
