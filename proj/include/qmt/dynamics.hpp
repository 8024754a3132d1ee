#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qmt/coevent.hpp"
#include "qmt/event.hpp"
#include "qmt/limits.hpp"
#include "qmt/rational.hpp"
#include "qmt/theory.hpp"

namespace qmt {

// Q_ABC(phi) in Z2 for a disjoint triple (empty components allowed).
bool q_value(const CoEvent& phi, const Event& a, const Event& b, const Event& c);

// R_ABC(phi) = phi(ABC) - phi(AB) - phi(BC) - phi(CA) + phi(A) + phi(B) + phi(C), with phi
// lifted to the integers 0 and 1.
int r_value(const CoEvent& phi, const Event& a, const Event& b, const Event& c);

struct QuadraticReport {
  bool is_quadratic = true;
  std::optional<std::array<Event, 3>> witness;
};

// Q = 0 on every disjoint triple. Triples are scanned as base-4 strings (digit for history 0 most
// significant; 0 = none, 1 = A, 2 = B, 3 = C) and the witness is the first failure in that order.
QuadraticReport is_quadratic(const CoEvent& phi, const Limits& limits = {});

// phi(A+B+C) = phi(A+B) + phi(B+C) + phi(C+A) + phi(A) + phi(B) + phi(C) over Z2 for all triples,
// disjoint or not. Costs 8^n; capped at 8 histories.
bool satisfies_quadratic_identity(const CoEvent& phi);

enum class FeasibilityMode {
  all_events,  // P_S(phi(A) = 1) = mu(A) for every event
  binary,      // only rows where mu(A) is 0 or 1
  observable,  // only for the supplied observable events
};

struct FeasibilityRow {
  std::optional<Event> event;  // nullopt for the normalization row sum p = 1
  std::vector<std::uint8_t> coefficients;
  Rational rhs;
};

struct FeasibilitySystem {
  unsigned space_size = 0;
  FeasibilityMode mode = FeasibilityMode::all_events;
  std::vector<CoEvent> coevents;
  std::vector<FeasibilityRow> rows;
};

// Rows in ascending event order. A normalization row is appended unless the Omega row is present
// with right-hand side 1 (it always has unit coefficients for multiplicative S).
FeasibilitySystem build_feasibility(const HistoriesTheory& theory, std::vector<CoEvent> coevents,
                                    FeasibilityMode mode = FeasibilityMode::all_events,
                                    const std::vector<Event>& observable = {});

enum class FeasibilityStatus { feasible, inconsistent_row, infeasible };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::infeasible;
  std::vector<Rational> assignment;         // feasible: p_phi in the order of system.coevents
  std::optional<std::size_t> row;           // inconsistent_row: an all-zero row with nonzero rhs
  std::vector<Rational> farkas;             // infeasible: y with y^T A <= 0 and y^T b > 0

  bool feasible() const { return status == FeasibilityStatus::feasible; }
};

FeasibilityResult solve_feasibility(const FeasibilitySystem& system);

// Largest p_phi over the feasible region, for the co-event at `index` in system.coevents.
// Throws InvalidArgument when the system is infeasible.
Rational max_probability(const FeasibilitySystem& system, std::size_t index);

// Every multiplicative co-event on n histories, ascending by dual mask.
std::vector<CoEvent> all_multiplicative(unsigned n);

}  // namespace qmt
