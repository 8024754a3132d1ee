#include "qmt/kernels/bitmap_kernels.hpp"

namespace qmt::kernels::scalar {

using detail::kLowHalf;

void superset_or(std::span<std::uint64_t> bits, unsigned n) {
  const std::size_t words = word_count(n);
  for (unsigned level = 0; level < n && level < 6; ++level) {
    const unsigned shift = 1U << level;
    for (std::size_t w = 0; w < words; ++w) bits[w] |= (bits[w] >> shift) & kLowHalf[level];
  }
  for (unsigned level = 6; level < n; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; ++k) bits[base + k] |= bits[base + stride + k];
    }
  }
  bits[0] &= detail::valid_bits(n);
}

void minimal_outside(std::span<const std::uint64_t> closed, std::span<std::uint64_t> out, unsigned n) {
  const std::size_t words = word_count(n);
  for (std::size_t w = 0; w < words; ++w) out[w] = ~closed[w];
  for (unsigned level = 0; level < n && level < 6; ++level) {
    const unsigned shift = 1U << level;
    for (std::size_t w = 0; w < words; ++w) {
      out[w] &= kLowHalf[level] | ((closed[w] << shift) & ~kLowHalf[level]);
    }
  }
  for (unsigned level = 6; level < n; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; ++k) out[base + stride + k] &= closed[base + k];
    }
  }
  out[0] &= detail::valid_bits(n);
}

}  // namespace qmt::kernels::scalar
