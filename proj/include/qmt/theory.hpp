#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qmt/event.hpp"
#include "qmt/event_bitmap.hpp"
#include "qmt/limits.hpp"
#include "qmt/rational.hpp"

namespace qmt {

class Partition;

// Measure given directly on every event, indexed by event mask.
struct MeasureTable {
  std::vector<Rational> values;
};

// Decoherence functional on pairs of histories; D(X, Y) is the sum of entries over X x Y.
class DecoherenceMatrix {
 public:
  DecoherenceMatrix() = default;
  explicit DecoherenceMatrix(unsigned n) : n_(n), entries_(std::size_t{n} * n) {}

  // D_ij = a_i * conj(a_j): the matrix of a single amplitude vector.
  static DecoherenceMatrix from_amplitudes(std::span<const ComplexRational> amplitudes);
  static DecoherenceMatrix diagonal(std::span<const Rational> weights);

  unsigned size() const { return n_; }
  ComplexRational& operator()(unsigned i, unsigned j) { return entries_[std::size_t{i} * n_ + j]; }
  const ComplexRational& operator()(unsigned i, unsigned j) const { return entries_[std::size_t{i} * n_ + j]; }

  ComplexRational between(const Event& x, const Event& y) const;

 private:
  unsigned n_ = 0;
  std::vector<ComplexRational> entries_;
};

using MeasureSource = std::variant<MeasureTable, DecoherenceMatrix>;

// Null (mu = 0, or mu < threshold when the threshold is positive) and negligible (subset of a
// null event) families of a theory.
struct NullStructure {
  Rational threshold;
  EventBitmap null;
  EventBitmap negligible;
};

// A finite histories theory over the full power set of its sample space. Immutable; copies share
// the tabulated measure.
class HistoriesTheory {
 public:
  static HistoriesTheory from_table(SampleSpace space, std::vector<Rational> values, const Limits& limits = {});
  static HistoriesTheory from_decoherence(SampleSpace space, DecoherenceMatrix matrix, const Limits& limits = {});

  const SampleSpace& space() const { return data_->space; }
  unsigned size() const { return data_->space.size(); }
  const MeasureSource& source() const { return data_->source; }
  bool has_decoherence() const { return std::holds_alternative<DecoherenceMatrix>(data_->source); }
  // Throws InvalidArgument for table-form theories.
  const DecoherenceMatrix& decoherence() const;

  const Rational& mu(const Event& event) const;
  std::span<const Rational> mu_table() const { return data_->mu; }

  // Imaginary part of D(X, X) for the first event where it is nonzero (decoherence form only).
  const std::optional<Event>& imaginary_measure_witness() const { return data_->imaginary_witness; }

  const NullStructure& exact_nulls() const { return data_->exact; }
  // Threshold 0 gives the exact structure; a positive threshold gives the epsilon-null one.
  NullStructure nulls(const Rational& threshold) const;

 private:
  struct Data {
    SampleSpace space;
    MeasureSource source;
    std::vector<Rational> mu;
    std::optional<Event> imaginary_witness;
    NullStructure exact;
  };
  explicit HistoriesTheory(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static HistoriesTheory finish(Data data);

  std::shared_ptr<const Data> data_;
};

void require_event_of(const HistoriesTheory& theory, const Event& event);

// D(X, Y); decoherence-form theories only.
ComplexRational decoherence(const HistoriesTheory& theory, const Event& x, const Event& y);

// I_k(X_1, ..., X_k) by inclusion-exclusion; arguments must be pairwise disjoint.
Rational interference(const HistoriesTheory& theory, std::span<const Event> args);

// Smallest k >= 1 such that I_{k+1} vanishes on every disjoint tuple. Computed from the Moebius
// inverse of the measure: I_j on singletons is the Moebius coefficient, and every I_j on general
// disjoint events is a sum of those coefficients.
unsigned level(const HistoriesTheory& theory);

// Moebius inverse m(S) = sum over T in S of (-1)^{|S|-|T|} mu(T), indexed by mask.
std::vector<Rational> moebius_coefficients(const HistoriesTheory& theory);

// Theory on the blocks of `partition`, in table form.
HistoriesTheory coarse_grain(const HistoriesTheory& theory, const Partition& partition, const Limits& limits = {});

enum class Axiom { empty_event, positivity, unitality, hermiticity, normalization, real_measure };

std::string_view name(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::optional<Event> event;
  std::string detail;
};

struct ValidationOptions {
  // Report D(Omega, Omega) != 1 as a warning instead of a violation.
  bool relax_normalization = false;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;
  EventBitmap null_family;
  EventBitmap negligible_family;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const HistoriesTheory& theory, const ValidationOptions& options = {});

}  // namespace qmt
