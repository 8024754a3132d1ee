#include "qmt/theory.hpp"

#include <bit>

#include "qmt/error.hpp"
#include "qmt/partition.hpp"

namespace qmt {

void require_within(unsigned n, unsigned cap, const std::string& what) {
  if (n > cap) {
    throw CapExceeded(what + " over " + std::to_string(n) + " histories exceeds the cap of " + std::to_string(cap) +
                      " (raise it explicitly to proceed)");
  }
}

DecoherenceMatrix DecoherenceMatrix::from_amplitudes(std::span<const ComplexRational> amplitudes) {
  DecoherenceMatrix d(static_cast<unsigned>(amplitudes.size()));
  for (unsigned i = 0; i < d.size(); ++i) {
    for (unsigned j = 0; j < d.size(); ++j) d(i, j) = amplitudes[i] * amplitudes[j].conj();
  }
  return d;
}

DecoherenceMatrix DecoherenceMatrix::diagonal(std::span<const Rational> weights) {
  DecoherenceMatrix d(static_cast<unsigned>(weights.size()));
  for (unsigned i = 0; i < d.size(); ++i) d(i, i) = ComplexRational(weights[i]);
  return d;
}

ComplexRational DecoherenceMatrix::between(const Event& x, const Event& y) const {
  if (x.size() != n_ || y.size() != n_) throw InvalidArgument("event does not belong to the decoherence matrix space");
  ComplexRational sum;
  for (unsigned i : x.members()) {
    for (unsigned j : y.members()) sum += (*this)(i, j);
  }
  return sum;
}

HistoriesTheory HistoriesTheory::from_table(SampleSpace space, std::vector<Rational> values, const Limits& limits) {
  const unsigned n = space.size();
  require_within(n, limits.enumeration_cap, "explicit theory");
  if (values.size() != (std::size_t{1} << n)) {
    throw InvalidArgument("measure table needs all " + std::to_string(std::size_t{1} << n) + " events, got " +
                          std::to_string(values.size()));
  }
  Data data{std::move(space), MeasureTable{values}, std::move(values), std::nullopt, {}};
  return finish(std::move(data));
}

HistoriesTheory HistoriesTheory::from_decoherence(SampleSpace space, DecoherenceMatrix matrix, const Limits& limits) {
  const unsigned n = space.size();
  require_within(n, limits.enumeration_cap, "explicit theory");
  if (matrix.size() != n) throw InvalidArgument("decoherence matrix size does not match the number of histories");

  // D(A, A) built up one history at a time: adding history i to B contributes D_ii plus the
  // cross terms D_ij + D_ji for j in B.
  const std::size_t count = std::size_t{1} << n;
  std::vector<ComplexRational> full(count);
  for (std::size_t a = 1; a < count; ++a) {
    const unsigned i = static_cast<unsigned>(std::bit_width(a) - 1);
    const std::size_t rest = a & ~(std::size_t{1} << i);
    ComplexRational v = full[rest] + matrix(i, i);
    for (std::size_t b = rest; b != 0; b &= b - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(b));
      v += matrix(i, j);
      v += matrix(j, i);
    }
    full[a] = std::move(v);
  }
  std::vector<Rational> mu(count);
  std::optional<Event> witness;
  for (std::size_t a = 0; a < count; ++a) {
    if (!witness && sgn(full[a].im) != 0) witness = Event(static_cast<EventMask>(a), n);
    mu[a] = full[a].re;
  }
  Data data{std::move(space), std::move(matrix), std::move(mu), witness, {}};
  return finish(std::move(data));
}

HistoriesTheory HistoriesTheory::finish(Data data) {
  data.exact.threshold = 0;
  data.exact.null = EventBitmap(data.space.size());
  for (std::size_t a = 0; a < data.mu.size(); ++a) {
    if (sgn(data.mu[a]) == 0) data.exact.null.set(static_cast<EventMask>(a));
  }
  data.exact.negligible = data.exact.null.downward_closure();
  return HistoriesTheory(std::make_shared<const Data>(std::move(data)));
}

const DecoherenceMatrix& HistoriesTheory::decoherence() const {
  if (!has_decoherence()) throw InvalidArgument("theory is given by a measure table; off-diagonal D is unknown");
  return std::get<DecoherenceMatrix>(data_->source);
}

const Rational& HistoriesTheory::mu(const Event& event) const {
  require_event_of(*this, event);
  return data_->mu[event.mask()];
}

NullStructure HistoriesTheory::nulls(const Rational& threshold) const {
  if (sgn(threshold) < 0) throw InvalidArgument("preclusion threshold must be nonnegative");
  if (sgn(threshold) == 0) return data_->exact;
  NullStructure out{threshold, EventBitmap(size()), {}};
  for (std::size_t a = 0; a < data_->mu.size(); ++a) {
    if (data_->mu[a] < threshold) out.null.set(static_cast<EventMask>(a));
  }
  out.negligible = out.null.downward_closure();
  return out;
}

void require_event_of(const HistoriesTheory& theory, const Event& event) {
  if (event.size() != theory.size()) {
    throw InvalidArgument("event over " + std::to_string(event.size()) + " histories used with a theory over " +
                          std::to_string(theory.size()));
  }
}

ComplexRational decoherence(const HistoriesTheory& theory, const Event& x, const Event& y) {
  require_event_of(theory, x);
  require_event_of(theory, y);
  return theory.decoherence().between(x, y);
}

Rational interference(const HistoriesTheory& theory, std::span<const Event> args) {
  const std::size_t k = args.size();
  if (k == 0) throw InvalidArgument("interference needs at least one argument");
  if (k > 24) throw InvalidArgument("interference order too large");
  for (std::size_t i = 0; i < k; ++i) {
    require_event_of(theory, args[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (!args[i].disjoint_from(args[j])) {
        throw InvalidArgument("interference arguments " + to_hex(args[j]) + " and " + to_hex(args[i]) +
                              " are not disjoint");
      }
    }
  }
  Rational total = 0;
  const auto mu = theory.mu_table();
  for (std::size_t s = 1; s < (std::size_t{1} << k); ++s) {
    EventMask u = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1U) u |= args[i].mask();
    }
    if ((k - static_cast<std::size_t>(std::popcount(s))) % 2 == 0) {
      total += mu[u];
    } else {
      total -= mu[u];
    }
  }
  return total;
}

std::vector<Rational> moebius_coefficients(const HistoriesTheory& theory) {
  const auto mu = theory.mu_table();
  std::vector<Rational> m(mu.begin(), mu.end());
  const unsigned n = theory.size();
  for (unsigned i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (a & bit) m[a] -= m[a ^ bit];
    }
  }
  return m;
}

unsigned level(const HistoriesTheory& theory) {
  const auto m = moebius_coefficients(theory);
  unsigned k = 1;
  for (std::size_t a = 1; a < m.size(); ++a) {
    if (sgn(m[a]) != 0) k = std::max(k, static_cast<unsigned>(std::popcount(a)));
  }
  return k;
}

HistoriesTheory coarse_grain(const HistoriesTheory& theory, const Partition& partition, const Limits& limits) {
  if (partition.space_size() != theory.size()) throw InvalidArgument("partition does not cover the theory's space");
  std::vector<std::string> labels;
  for (const auto& block : partition.blocks()) labels.push_back(theory.space().describe(block));
  const std::size_t blocks = partition.blocks().size();
  std::vector<Rational> values(std::size_t{1} << blocks);
  const auto mu = theory.mu_table();
  for (std::size_t s = 0; s < values.size(); ++s) values[s] = mu[partition.union_of(static_cast<EventMask>(s)).mask()];
  return HistoriesTheory::from_table(SampleSpace(std::move(labels)), std::move(values), limits);
}

std::string_view name(Axiom axiom) {
  switch (axiom) {
    case Axiom::empty_event:
      return "empty-event";
    case Axiom::positivity:
      return "positivity";
    case Axiom::unitality:
      return "unitality";
    case Axiom::hermiticity:
      return "hermiticity";
    case Axiom::normalization:
      return "normalization";
    case Axiom::real_measure:
      return "real-measure";
  }
  return "?";
}

ValidationReport validate(const HistoriesTheory& theory, const ValidationOptions& options) {
  ValidationReport report;
  const unsigned n = theory.size();
  const auto& space = theory.space();
  const auto mu = theory.mu_table();

  if (theory.has_decoherence()) {
    const auto& d = theory.decoherence();
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i; j < n; ++j) {
        if (!(d(i, j) == d(j, i).conj())) {
          EventMask pair = (EventMask{1} << i) | (EventMask{1} << j);
          report.violations.push_back({Axiom::hermiticity, Event(pair, n),
                                       "D(" + space.label(i) + "," + space.label(j) + ") = " + to_string(d(i, j)) +
                                           " but conj(D(" + space.label(j) + "," + space.label(i) + ")) = " +
                                           to_string(d(j, i).conj())});
        }
      }
    }
    if (const auto& w = theory.imaginary_measure_witness()) {
      report.violations.push_back({Axiom::real_measure, *w, "D(X,X) has a nonzero imaginary part"});
    }
    if (mu.back() != 1) {
      Violation v{Axiom::normalization, space.full(), "D(Omega,Omega) = " + to_string(mu.back())};
      (options.relax_normalization ? report.warnings : report.violations).push_back(std::move(v));
    }
  } else {
    if (sgn(mu[0]) != 0) {
      report.violations.push_back({Axiom::empty_event, space.empty(), "mu(empty) = " + to_string(mu[0])});
    }
    if (mu.back() != 1) {
      report.violations.push_back({Axiom::unitality, space.full(), "mu(Omega) = " + to_string(mu.back())});
    }
  }
  for (std::size_t a = 0; a < mu.size(); ++a) {
    if (sgn(mu[a]) < 0) {
      Event e(static_cast<EventMask>(a), n);
      report.violations.push_back({Axiom::positivity, e, "mu(" + space.describe(e) + ") = " + to_string(mu[a])});
    }
  }
  report.null_family = theory.exact_nulls().null;
  report.negligible_family = theory.exact_nulls().negligible;
  return report;
}

}  // namespace qmt
