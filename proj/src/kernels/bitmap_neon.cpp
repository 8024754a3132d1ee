#include <arm_neon.h>

#include "qmt/kernels/bitmap_kernels.hpp"

namespace qmt::kernels::neon {

using detail::kLowHalf;

namespace {
constexpr unsigned kFirstVectorLevel = 7;
}  // namespace

void superset_or(std::span<std::uint64_t> bits, unsigned n) {
  if (n < kFirstVectorLevel) {
    scalar::superset_or(bits, n);
    return;
  }
  const std::size_t words = word_count(n);
  std::uint64_t* data = bits.data();
  for (unsigned level = 0; level < 6; ++level) {
    const int64x2_t right = vdupq_n_s64(-static_cast<std::int64_t>(1U << level));
    const uint64x2_t low = vdupq_n_u64(kLowHalf[level]);
    for (std::size_t w = 0; w < words; w += 2) {
      const uint64x2_t v = vld1q_u64(data + w);
      vst1q_u64(data + w, vorrq_u64(v, vandq_u64(vshlq_u64(v, right), low)));
    }
  }
  for (std::size_t w = 0; w < words; w += 2) data[w] |= data[w + 1];  // level 6
  for (unsigned level = kFirstVectorLevel; level < n; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; k += 2) {
        vst1q_u64(data + base + k, vorrq_u64(vld1q_u64(data + base + k), vld1q_u64(data + base + stride + k)));
      }
    }
  }
}

void minimal_outside(std::span<const std::uint64_t> closed, std::span<std::uint64_t> out, unsigned n) {
  if (n < kFirstVectorLevel) {
    scalar::minimal_outside(closed, out, n);
    return;
  }
  const std::size_t words = word_count(n);
  const std::uint64_t* c = closed.data();
  std::uint64_t* o = out.data();
  for (std::size_t w = 0; w < words; w += 2) {
    const uint64x2_t cw = vld1q_u64(c + w);
    uint64x2_t acc = vreinterpretq_u64_u8(vmvnq_u8(vreinterpretq_u8_u64(cw)));
    for (unsigned level = 0; level < 6; ++level) {
      const int64x2_t left = vdupq_n_s64(static_cast<std::int64_t>(1U << level));
      const uint64x2_t low = vdupq_n_u64(kLowHalf[level]);
      const uint64x2_t shifted = vbicq_u64(vshlq_u64(cw, left), low);
      acc = vandq_u64(acc, vorrq_u64(low, shifted));
    }
    vst1q_u64(o + w, acc);
  }
  for (std::size_t w = 0; w < words; w += 2) o[w + 1] &= c[w];  // level 6
  for (unsigned level = kFirstVectorLevel; level < n; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; k += 2) {
        std::uint64_t* dst = o + base + stride + k;
        vst1q_u64(dst, vandq_u64(vld1q_u64(dst), vld1q_u64(c + base + k)));
      }
    }
  }
}

}  // namespace qmt::kernels::neon
