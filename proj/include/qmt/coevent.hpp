#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qmt/event.hpp"
#include "qmt/event_bitmap.hpp"
#include "qmt/limits.hpp"
#include "qmt/rational.hpp"
#include "qmt/theory.hpp"

namespace qmt {

class Partition;

// A truth valuation EA -> Z2 sending the empty event to 0 and not identically zero.
// Multiplicative co-events are stored by their dual (principal element); arbitrary co-events
// are stored as a table with one bit per event.
class CoEvent {
 public:
  // dual^*: true exactly on supersets of `dual`. Throws for the empty event.
  static CoEvent multiplicative(const Event& dual);
  // Throws if the table sends the empty event to 1 or is the zero map.
  static CoEvent from_table(EventBitmap truth);

  unsigned space_size() const;
  bool is_multiplicative_form() const { return std::holds_alternative<Event>(rep_); }
  // Principal element; throws for table form.
  const Event& dual() const;
  // Truth table for either form.
  EventBitmap table() const;

  bool operator()(const Event& event) const;

  friend bool operator==(const CoEvent&, const CoEvent&) = default;

 private:
  explicit CoEvent(std::variant<Event, EventBitmap> rep) : rep_(std::move(rep)) {}
  std::variant<Event, EventBitmap> rep_;
};

bool eval(const CoEvent& phi, const Event& event);

// The duality * between nonempty events and multiplicative co-events.
CoEvent dual(const Event& event);
Event dual(const CoEvent& phi);

// phi(AB) = phi(A) phi(B) for all A, B (exhaustive over the table).
bool is_multiplicative(const CoEvent& phi);
// Multiplicative and additive: a ring homomorphism EA -> Z2.
bool is_homomorphism(const CoEvent& phi);
// Multiplicative form when the co-event is multiplicative, else nullopt.
std::optional<CoEvent> to_multiplicative(const CoEvent& phi);

// No event with mu < eps (mu = 0 when eps = 0) takes the value 1. Multiplicative form only.
bool is_preclusive(const CoEvent& phi, const HistoriesTheory& theory, const Rational& eps = 0);
bool is_preclusive(const CoEvent& phi, const NullStructure& nulls);

// psi dominates phi iff psi* is a proper subset of phi*.
bool dominates(const CoEvent& psi, const CoEvent& phi);

// Multiplicative co-events whose duals are minimal among the non-negligible events, ascending by
// dual mask.
std::vector<CoEvent> primitives(const HistoriesTheory& theory, const Rational& eps = 0);
std::vector<CoEvent> primitives(const NullStructure& nulls);

// gamma^* for every history gamma whose singleton is not negligible.
std::vector<CoEvent> classical_coevents(const HistoriesTheory& theory);

// Restriction to the subalgebra generated by the partition is a homomorphism; for multiplicative
// phi this holds iff phi* lies inside a single block.
bool is_classical_on(const CoEvent& phi, const Partition& partition);

}  // namespace qmt
