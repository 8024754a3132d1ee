#include "qmt/coevent.hpp"

#include "qmt/error.hpp"
#include "qmt/partition.hpp"

namespace qmt {

namespace {

const Event& require_multiplicative(const CoEvent& phi, const char* op) {
  if (!phi.is_multiplicative_form()) {
    throw InvalidArgument(std::string(op) + " requires a multiplicative co-event");
  }
  return phi.dual();
}

}  // namespace

CoEvent CoEvent::multiplicative(const Event& dual) {
  if (dual.is_empty()) throw InvalidArgument("the dual of the empty event would be the zero map");
  return CoEvent(dual);
}

CoEvent CoEvent::from_table(EventBitmap truth) {
  if (truth.event_count() == 0 || truth.space_size() == 0) throw InvalidArgument("empty co-event table");
  if (truth.test(EventMask{0})) throw InvalidArgument("a co-event must send the empty event to 0");
  if (truth.none()) throw InvalidArgument("the zero map is not a co-event");
  return CoEvent(std::move(truth));
}

unsigned CoEvent::space_size() const {
  return std::visit(
      [](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Event>) {
          return r.size();
        } else {
          return r.space_size();
        }
      },
      rep_);
}

const Event& CoEvent::dual() const {
  if (!is_multiplicative_form()) throw InvalidArgument("table-form co-event has no stored dual");
  return std::get<Event>(rep_);
}

EventBitmap CoEvent::table() const {
  if (!is_multiplicative_form()) return std::get<EventBitmap>(rep_);
  const Event& d = std::get<Event>(rep_);
  EventBitmap out(d.size());
  for (std::size_t a = 0; a < out.event_count(); ++a) {
    if ((d.mask() & ~static_cast<EventMask>(a)) == 0) out.set(static_cast<EventMask>(a));
  }
  return out;
}

bool CoEvent::operator()(const Event& event) const {
  if (event.size() != space_size()) throw InvalidArgument("co-event evaluated on an event of another space");
  if (is_multiplicative_form()) return (std::get<Event>(rep_).mask() & ~event.mask()) == 0;
  return std::get<EventBitmap>(rep_).test(event);
}

bool eval(const CoEvent& phi, const Event& event) { return phi(event); }

CoEvent dual(const Event& event) { return CoEvent::multiplicative(event); }

Event dual(const CoEvent& phi) { return require_multiplicative(phi, "dual"); }

bool is_multiplicative(const CoEvent& phi) {
  if (phi.is_multiplicative_form()) return true;
  const EventBitmap t = phi.table();
  const std::size_t count = t.event_count();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      if (t.test(static_cast<EventMask>(a & b)) != (t.test(static_cast<EventMask>(a)) && t.test(static_cast<EventMask>(b)))) {
        return false;
      }
    }
  }
  return true;
}

bool is_homomorphism(const CoEvent& phi) {
  if (!is_multiplicative(phi)) return false;
  const EventBitmap t = phi.table();
  const std::size_t count = t.event_count();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      if (t.test(static_cast<EventMask>(a ^ b)) != (t.test(static_cast<EventMask>(a)) != t.test(static_cast<EventMask>(b)))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<CoEvent> to_multiplicative(const CoEvent& phi) {
  if (phi.is_multiplicative_form()) return phi;
  if (!is_multiplicative(phi)) return std::nullopt;
  // The principal element is the intersection of every event valued 1.
  const EventBitmap t = phi.table();
  EventMask meet = Event::full(t.space_size()).mask();
  for (std::size_t a = 0; a < t.event_count(); ++a) {
    if (t.test(static_cast<EventMask>(a))) meet &= static_cast<EventMask>(a);
  }
  return CoEvent::multiplicative(Event(meet, t.space_size()));
}

bool is_preclusive(const CoEvent& phi, const NullStructure& nulls) {
  const Event& d = require_multiplicative(phi, "is_preclusive");
  if (d.size() != nulls.negligible.space_size()) throw InvalidArgument("co-event and theory spaces differ");
  return !nulls.negligible.test(d);
}

bool is_preclusive(const CoEvent& phi, const HistoriesTheory& theory, const Rational& eps) {
  if (sgn(eps) == 0) return is_preclusive(phi, theory.exact_nulls());
  return is_preclusive(phi, theory.nulls(eps));
}

bool dominates(const CoEvent& psi, const CoEvent& phi) {
  const Event& a = require_multiplicative(psi, "dominates");
  const Event& b = require_multiplicative(phi, "dominates");
  return a.subset_of(b) && a != b;
}

std::vector<CoEvent> primitives(const NullStructure& nulls) {
  std::vector<CoEvent> out;
  for (const Event& e : nulls.negligible.minimal_outside().events()) {
    if (!e.is_empty()) out.push_back(CoEvent::multiplicative(e));  // empty only when mu(empty) != 0
  }
  return out;
}

std::vector<CoEvent> primitives(const HistoriesTheory& theory, const Rational& eps) {
  if (sgn(eps) == 0) return primitives(theory.exact_nulls());
  return primitives(theory.nulls(eps));
}

std::vector<CoEvent> classical_coevents(const HistoriesTheory& theory) {
  std::vector<CoEvent> out;
  const auto& negligible = theory.exact_nulls().negligible;
  for (unsigned i = 0; i < theory.size(); ++i) {
    const Event s = theory.space().singleton(i);
    if (!negligible.test(s)) out.push_back(CoEvent::multiplicative(s));
  }
  return out;
}

bool is_classical_on(const CoEvent& phi, const Partition& partition) {
  const Event& d = require_multiplicative(phi, "is_classical_on");
  if (d.size() != partition.space_size()) throw InvalidArgument("co-event and partition spaces differ");
  for (const Event& block : partition.blocks()) {
    if (d.subset_of(block)) return true;
  }
  return false;
}

}  // namespace qmt
