#include "qmt/event_bitmap.hpp"

#include <bit>

#include "qmt/error.hpp"
#include "qmt/kernels/bitmap_kernels.hpp"

namespace qmt {

EventBitmap::EventBitmap(unsigned n) : n_(n) {
  if (n > kMaxHistories) throw InvalidArgument("event family over more than 24 histories");
  words_.assign(kernels::word_count(n), 0);
}

std::size_t EventBitmap::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Event> EventBitmap::events() const {
  std::vector<Event> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.emplace_back(static_cast<EventMask>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))), n_);
    }
  }
  return out;
}

EventBitmap EventBitmap::downward_closure() const {
  EventBitmap out = *this;
  kernels::superset_or(out.words_, n_);
  return out;
}

EventBitmap EventBitmap::minimal_outside() const {
  EventBitmap out(n_);
  kernels::minimal_outside(words_, out.words_, n_);
  return out;
}

}  // namespace qmt
