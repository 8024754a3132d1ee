#include <immintrin.h>

#include "qmt/kernels/bitmap_kernels.hpp"

namespace qmt::kernels::avx2 {

using detail::kLowHalf;

namespace {

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::uint64_t* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Word-level passes need at least four words per half block to fill a register.
constexpr unsigned kFirstVectorLevel = 8;

}  // namespace

void superset_or(std::span<std::uint64_t> bits, unsigned n) {
  if (n < kFirstVectorLevel) {
    scalar::superset_or(bits, n);
    return;
  }
  const std::size_t words = word_count(n);
  std::uint64_t* data = bits.data();
  for (unsigned level = 0; level < 6; ++level) {
    const __m128i count = _mm_cvtsi32_si128(static_cast<int>(1U << level));
    const __m256i low = _mm256_set1_epi64x(static_cast<long long>(kLowHalf[level]));
    for (std::size_t w = 0; w < words; w += 4) {
      const __m256i v = load(data + w);
      store(data + w, _mm256_or_si256(v, _mm256_and_si256(_mm256_srl_epi64(v, count), low)));
    }
  }
  for (unsigned level = 6; level < kFirstVectorLevel; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; ++k) data[base + k] |= data[base + stride + k];
    }
  }
  for (unsigned level = kFirstVectorLevel; level < n; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; k += 4) {
        store(data + base + k, _mm256_or_si256(load(data + base + k), load(data + base + stride + k)));
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
  const __m256i ones = _mm256_set1_epi64x(-1);
  for (std::size_t w = 0; w < words; w += 4) {
    __m256i acc = _mm256_xor_si256(load(c + w), ones);
    const __m256i cw = load(c + w);
    for (unsigned level = 0; level < 6; ++level) {
      const __m128i count = _mm_cvtsi32_si128(static_cast<int>(1U << level));
      const __m256i low = _mm256_set1_epi64x(static_cast<long long>(kLowHalf[level]));
      const __m256i shifted = _mm256_andnot_si256(low, _mm256_sll_epi64(cw, count));
      acc = _mm256_and_si256(acc, _mm256_or_si256(low, shifted));
    }
    store(o + w, acc);
  }
  for (unsigned level = 6; level < kFirstVectorLevel; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; ++k) o[base + stride + k] &= c[base + k];
    }
  }
  for (unsigned level = kFirstVectorLevel; level < n; ++level) {
    const std::size_t stride = std::size_t{1} << (level - 6);
    for (std::size_t base = 0; base < words; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; k += 4) {
        std::uint64_t* dst = o + base + stride + k;
        store(dst, _mm256_and_si256(load(dst), load(c + base + k)));
      }
    }
  }
}

}  // namespace qmt::kernels::avx2
