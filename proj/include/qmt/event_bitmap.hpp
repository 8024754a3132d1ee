#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmt/event.hpp"

namespace qmt {

// A family of events over an n-history space, one bit per event mask.
class EventBitmap {
 public:
  EventBitmap() = default;
  explicit EventBitmap(unsigned n);

  unsigned space_size() const { return n_; }
  std::size_t event_count() const { return std::size_t{1} << n_; }

  bool test(EventMask mask) const { return (words_[mask >> 6] >> (mask & 63)) & 1U; }
  bool test(const Event& e) const { return test(e.mask()); }
  void set(EventMask mask) { words_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }
  void reset(EventMask mask) { words_[mask >> 6] &= ~(std::uint64_t{1} << (mask & 63)); }
  void assign(EventMask mask, bool value) { value ? set(mask) : reset(mask); }

  std::size_t count() const;
  bool none() const { return count() == 0; }

  // Members in ascending mask order.
  std::vector<Event> events() const;

  // Family of all subsets of members (downward closure).
  EventBitmap downward_closure() const;
  // Minimal events outside this family; meaningful when the family is downward closed.
  EventBitmap minimal_outside() const;

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const EventBitmap&, const EventBitmap&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qmt
