#include "qmt/event.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qmt/error.hpp"

namespace qmt {

namespace {

EventMask full_mask(unsigned size) { return size == 32 ? ~EventMask{0} : ((EventMask{1} << size) - 1); }

}  // namespace

Event::Event(EventMask mask, unsigned size) : mask_(mask), size_(size) {
  if (size > kMaxHistories) {
    throw InvalidArgument("sample space of " + std::to_string(size) + " histories exceeds the storage cap of " +
                          std::to_string(kMaxHistories));
  }
  if ((mask & ~full_mask(size)) != 0) {
    throw InvalidArgument("event " + to_hex(mask) + " has members outside a space of " + std::to_string(size) +
                          " histories");
  }
}

Event Event::full(unsigned size) { return Event(full_mask(size), size); }

Event Event::singleton(unsigned index, unsigned size) {
  if (index >= size) throw InvalidArgument("history index out of range");
  return Event(EventMask{1} << index, size);
}

void require_same_space(const Event& a, const Event& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("events live on different sample spaces (" + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + " histories)");
  }
}

bool Event::subset_of(const Event& other) const {
  require_same_space(*this, other);
  return (mask_ & ~other.mask_) == 0;
}

bool Event::disjoint_from(const Event& other) const {
  require_same_space(*this, other);
  return (mask_ & other.mask_) == 0;
}

Event Event::complement() const { return Event(~mask_ & full_mask(size_), size_); }

Event Event::unite(const Event& other) const {
  require_same_space(*this, other);
  return Event(mask_ | other.mask_, size_);
}

Event Event::minus(const Event& other) const {
  require_same_space(*this, other);
  return Event(mask_ & ~other.mask_, size_);
}

Event operator+(const Event& a, const Event& b) {
  require_same_space(a, b);
  return Event(a.mask_ ^ b.mask_, a.size_);
}

Event operator*(const Event& a, const Event& b) {
  require_same_space(a, b);
  return Event(a.mask_ & b.mask_, a.size_);
}

std::vector<unsigned> Event::members() const {
  std::vector<unsigned> out;
  for (EventMask m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)));
  return out;
}

std::string to_hex(EventMask mask) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string digits;
  do {
    digits.push_back(kDigits[mask & 0xF]);
    mask >>= 4;
  } while (mask != 0);
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

std::string to_hex(const Event& event) { return to_hex(event.mask()); }

EventMask parse_hex_mask(std::string_view text) {
  std::string_view s = text;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 8) throw InvalidArgument("malformed event mask '" + std::string(text) + "'");
  EventMask value = 0;
  for (char c : s) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      throw InvalidArgument("malformed event mask '" + std::string(text) + "'");
    }
    value = (value << 4) | static_cast<EventMask>(digit);
  }
  return value;
}

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("a sample space needs at least one history");
  if (labels_.size() > kMaxHistories) {
    throw InvalidArgument("sample space of " + std::to_string(labels_.size()) +
                          " histories exceeds the storage cap of " + std::to_string(kMaxHistories));
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InvalidArgument("duplicate history label '" + l + "'");
  }
}

SampleSpace SampleSpace::anonymous(unsigned n) {
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back("h" + std::to_string(i));
  return SampleSpace(std::move(labels));
}

unsigned SampleSpace::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidArgument("unknown history label '" + std::string(label) + "'");
  return static_cast<unsigned>(it - labels_.begin());
}

Event SampleSpace::event(const std::vector<std::string>& labels) const {
  EventMask mask = 0;
  for (const auto& l : labels) mask |= EventMask{1} << index_of(l);
  return Event(mask, size());
}

std::string SampleSpace::describe(const Event& event) const {
  if (event.size() != size()) throw InvalidArgument("event does not belong to this sample space");
  std::string out = "{";
  bool first = true;
  for (unsigned i : event.members()) {
    if (!first) out += ",";
    out += labels_[i];
    first = false;
  }
  return out + "}";
}

}  // namespace qmt
