#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmt {

// Largest sample space whose events can be stored at all.
inline constexpr unsigned kMaxHistories = 24;

using EventMask = std::uint32_t;

// A subset of a sample space of `size` histories, encoded with bit i = membership of history i.
// Events form a ring over Z2: + is symmetric difference, * is intersection.
class Event {
 public:
  constexpr Event() = default;
  Event(EventMask mask, unsigned size);

  static Event empty(unsigned size) { return Event(0, size); }
  static Event full(unsigned size);
  static Event singleton(unsigned index, unsigned size);

  constexpr EventMask mask() const { return mask_; }
  constexpr unsigned size() const { return size_; }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool contains(unsigned index) const { return (mask_ >> index) & 1U; }
  constexpr unsigned cardinality() const { return static_cast<unsigned>(std::popcount(mask_)); }

  // Both arguments must live on the same space; otherwise InvalidArgument.
  bool subset_of(const Event& other) const;
  bool disjoint_from(const Event& other) const;

  Event complement() const;
  Event unite(const Event& other) const;
  Event minus(const Event& other) const;

  friend Event operator+(const Event& a, const Event& b);  // symmetric difference
  friend Event operator*(const Event& a, const Event& b);  // intersection

  friend constexpr bool operator==(const Event&, const Event&) = default;
  friend constexpr auto operator<=>(const Event& a, const Event& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

  // Indices of member histories in ascending order.
  std::vector<unsigned> members() const;

 private:
  EventMask mask_ = 0;
  unsigned size_ = 0;
};

void require_same_space(const Event& a, const Event& b);

// "0x5" style hexadecimal mask; the canonical wire encoding of an event.
std::string to_hex(EventMask mask);
std::string to_hex(const Event& event);
EventMask parse_hex_mask(std::string_view text);

// Ordered list of distinct history labels.
class SampleSpace {
 public:
  SampleSpace() = default;
  explicit SampleSpace(std::vector<std::string> labels);

  // Labels h0, h1, ... for n anonymous histories.
  static SampleSpace anonymous(unsigned n);

  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(unsigned index) const { return labels_.at(index); }
  unsigned index_of(std::string_view label) const;

  Event empty() const { return Event::empty(size()); }
  Event full() const { return Event::full(size()); }
  Event singleton(unsigned index) const { return Event::singleton(index, size()); }
  Event event(EventMask mask) const { return Event(mask, size()); }
  Event event(const std::vector<std::string>& labels) const;

  // "{a,c}"
  std::string describe(const Event& event) const;

  friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace qmt
