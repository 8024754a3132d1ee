#include "qmt/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qmt/error.hpp"

namespace qmt {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool least_member_order(const Event& a, const Event& b) {
  return std::countr_zero(a.mask()) < std::countr_zero(b.mask());
}

}  // namespace

Partition::Partition(std::vector<Event> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidArgument("a partition needs at least one block");
  n_ = blocks_.front().size();
  EventMask covered = 0;
  for (const Event& b : blocks_) {
    if (b.size() != n_) throw InvalidArgument("partition blocks live on different sample spaces");
    if (b.is_empty()) throw InvalidArgument("partition blocks must be nonempty");
    if (covered & b.mask()) throw InvalidArgument("partition blocks overlap at " + to_hex(covered & b.mask()));
    covered |= b.mask();
  }
  if (covered != Event::full(n_).mask()) {
    throw InvalidArgument("partition blocks leave " + to_hex(Event::full(n_).mask() & ~covered) + " uncovered");
  }
  std::sort(blocks_.begin(), blocks_.end(), least_member_order);
}

Partition Partition::singletons(unsigned n) {
  std::vector<Event> blocks;
  for (unsigned i = 0; i < n; ++i) blocks.push_back(Event::singleton(i, n));
  return Partition(std::move(blocks));
}

Partition Partition::whole(unsigned n) { return Partition({Event::full(n)}); }

Partition Partition::from_labels(const std::vector<unsigned>& block_of_history) {
  const unsigned n = static_cast<unsigned>(block_of_history.size());
  std::map<unsigned, EventMask> groups;
  for (unsigned i = 0; i < n; ++i) groups[block_of_history[i]] |= EventMask{1} << i;
  std::vector<Event> blocks;
  for (const auto& [label, mask] : groups) blocks.emplace_back(mask, n);
  return Partition(std::move(blocks));
}

std::size_t Partition::block_of(unsigned history) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].contains(history)) return b;
  }
  throw InvalidArgument("history index out of range");
}

Event Partition::union_of(EventMask selection) const {
  EventMask u = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if ((selection >> b) & 1U) u |= blocks_[b].mask();
  }
  return Event(u, n_);
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.space_size() != coarse.space_size()) throw InvalidArgument("partitions of different spaces");
  // Each fine block must sit inside one coarse block.
  for (const Event& f : fine.blocks()) {
    const bool inside = std::any_of(coarse.blocks().begin(), coarse.blocks().end(),
                                    [&](const Event& c) { return f.subset_of(c); });
    if (!inside) return false;
  }
  return true;
}

bool is_decoherent(const HistoriesTheory& theory, const Partition& partition) {
  if (partition.space_size() != theory.size()) throw InvalidArgument("partition does not match the theory's space");
  const auto& d = theory.decoherence();
  const auto& blocks = partition.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i != j && !d.between(blocks[i], blocks[j]).is_zero()) return false;
    }
  }
  return true;
}

bool is_preclusively_separable(const HistoriesTheory& theory, const Partition& partition) {
  if (partition.space_size() != theory.size()) throw InvalidArgument("partition does not match the theory's space");
  const EventBitmap& nulls = theory.exact_nulls().null;
  const std::vector<Event> null_events = nulls.events();
  for (const Event& block : partition.blocks()) {
    // Subsets of the block covered by a null event that itself lies inside the block.
    EventBitmap inside(theory.size());
    for (const Event& z : null_events) {
      if (z.subset_of(block)) inside.set(z.mask());
    }
    inside = inside.downward_closure();
    for (const Event& z : null_events) {
      const Event cut = z * block;
      if (!cut.is_empty() && !inside.test(cut)) return false;
    }
  }
  return true;
}

bool is_classical_wrt_primitives(const std::vector<CoEvent>& primitive_set, const Partition& partition) {
  return std::all_of(primitive_set.begin(), primitive_set.end(),
                     [&](const CoEvent& phi) { return is_classical_on(phi, partition); });
}

bool is_classical_wrt_primitives(const HistoriesTheory& theory, const Partition& partition, const Rational& eps) {
  if (partition.space_size() != theory.size()) throw InvalidArgument("partition does not match the theory's space");
  return is_classical_wrt_primitives(primitives(theory, eps), partition);
}

PrincipleClassicalPartition principle_classical_partition(unsigned n, const std::vector<CoEvent>& primitive_set) {
  // Union-find over the primitive duals; two duals are joined when they intersect. Intersection
  // is detected through the first dual seen at each history.
  DisjointSet sets(primitive_set.size());
  std::vector<std::size_t> first_at(n, primitive_set.size());
  for (std::size_t k = 0; k < primitive_set.size(); ++k) {
    const Event& d = primitive_set[k].dual();
    if (d.size() != n) throw InvalidArgument("primitive co-event over the wrong space");
    for (unsigned h : d.members()) {
      if (first_at[h] == primitive_set.size()) {
        first_at[h] = k;
      } else {
        sets.unite(first_at[h], k);
      }
    }
  }

  std::map<std::size_t, std::size_t> class_index;
  FatCoEventSet fat;
  std::vector<EventMask> fat_masks;
  for (std::size_t k = 0; k < primitive_set.size(); ++k) {
    const std::size_t root = sets.find(k);
    auto [it, inserted] = class_index.try_emplace(root, fat.classes.size());
    if (inserted) {
      fat.classes.emplace_back();
      fat_masks.push_back(0);
    }
    fat.classes[it->second].push_back(primitive_set[k].dual());
    fat_masks[it->second] |= primitive_set[k].dual().mask();
  }
  for (auto& c : fat.classes) std::sort(c.begin(), c.end());
  for (EventMask m : fat_masks) fat.fat_duals.emplace_back(m, n);

  std::vector<Event> blocks = fat.fat_duals;
  for (unsigned h = 0; h < n; ++h) {
    if (first_at[h] == primitive_set.size()) {
      fat.uncovered.push_back(Event::singleton(h, n));
      blocks.push_back(Event::singleton(h, n));
    }
  }
  return {Partition(std::move(blocks)), std::move(fat)};
}

PrincipleClassicalPartition principle_classical_partition(const HistoriesTheory& theory, const Rational& eps) {
  return principle_classical_partition(theory.size(), primitives(theory, eps));
}

std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<unsigned> label(n, 0);
  std::vector<unsigned> max_before(n, 0);
  // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
  while (true) {
    out.push_back(Partition::from_labels(label));
    int i = static_cast<int>(n) - 1;
    while (i > 0 && label[i] == max_before[i] + 1) --i;
    if (i <= 0) break;
    ++label[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < n; ++j) {
      max_before[j] = std::max(max_before[j - 1], label[j - 1]);
      label[j] = 0;
    }
  }
  return out;
}

}  // namespace qmt
