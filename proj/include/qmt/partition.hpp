#pragma once

#include <vector>

#include "qmt/coevent.hpp"
#include "qmt/event.hpp"
#include "qmt/rational.hpp"
#include "qmt/theory.hpp"

namespace qmt {

// Pairwise-disjoint nonempty blocks covering the sample space, ordered by least member.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless the blocks are nonempty, disjoint and cover the space.
  explicit Partition(std::vector<Event> blocks);

  static Partition singletons(unsigned n);
  static Partition whole(unsigned n);
  // Histories with equal labels[i] share a block.
  static Partition from_labels(const std::vector<unsigned>& block_of_history);

  unsigned space_size() const { return n_; }
  const std::vector<Event>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(unsigned history) const;

  // Union of the blocks selected by bit i of `selection`.
  Event union_of(EventMask selection) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  unsigned n_ = 0;
  std::vector<Event> blocks_;
};

// Every block of `coarse` is a union of blocks of `fine`.
bool refines(const Partition& fine, const Partition& coarse);

// D(X, Y) = 0 for all distinct blocks. Decoherence-form theories only.
bool is_decoherent(const HistoriesTheory& theory, const Partition& partition);

// For every null Z and block A: Z and A are disjoint, or A contains a null Z_A with Z_A ⊇ A ∩ Z.
bool is_preclusively_separable(const HistoriesTheory& theory, const Partition& partition);

// Every primitive dual lies inside a block.
bool is_classical_wrt_primitives(const HistoriesTheory& theory, const Partition& partition, const Rational& eps = 0);
bool is_classical_wrt_primitives(const std::vector<CoEvent>& primitive_set, const Partition& partition);

// Primitive duals grouped by the transitive closure of pairwise intersection.
struct FatCoEventSet {
  std::vector<std::vector<Event>> classes;  // primitive duals per class, ascending
  std::vector<Event> fat_duals;             // union of each class, same order as `classes`
  std::vector<Event> uncovered;             // singletons of histories in no primitive dual
};

struct PrincipleClassicalPartition {
  Partition partition;
  FatCoEventSet fat;
};

// Finest partition classical with respect to the primitive co-events at threshold eps.
PrincipleClassicalPartition principle_classical_partition(const HistoriesTheory& theory, const Rational& eps = 0);
PrincipleClassicalPartition principle_classical_partition(unsigned n, const std::vector<CoEvent>& primitive_set);

// Every set partition of an n-history space (Bell(n) of them), in restricted-growth order.
std::vector<Partition> all_partitions(unsigned n);

}  // namespace qmt
