#pragma once

// Data-parallel transforms over bitmaps indexed by event masks (bit A of the bitmap stands for
// the event with mask A). A bitmap for an n-history space holds max(1, 2^n / 64) words; bits at
// positions >= 2^n must be zero on input and are zero on output.

#include <cstdint>
#include <span>
#include <string_view>

namespace qmt::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa);
bool available(Isa isa);

// Best available instruction set unless overridden by force_isa() or QMT_KERNEL_ISA=scalar|avx2|neon.
Isa active_isa();
// Throws InvalidArgument when the ISA is not compiled in or not supported by this CPU.
void force_isa(Isa isa);
void reset_isa();

// After the call, bit A is set iff some superset of A was set (downward closure of a family).
void superset_or(std::span<std::uint64_t> bits, unsigned n);

// out[A] = !closed[A] && closed[A \ {i}] for every i in A.
// With `closed` downward closed this marks the minimal events outside the family.
void minimal_outside(std::span<const std::uint64_t> closed, std::span<std::uint64_t> out, unsigned n);

std::size_t word_count(unsigned n);

namespace scalar {
void superset_or(std::span<std::uint64_t> bits, unsigned n);
void minimal_outside(std::span<const std::uint64_t> closed, std::span<std::uint64_t> out, unsigned n);
}  // namespace scalar

namespace avx2 {
void superset_or(std::span<std::uint64_t> bits, unsigned n);
void minimal_outside(std::span<const std::uint64_t> closed, std::span<std::uint64_t> out, unsigned n);
}  // namespace avx2

namespace neon {
void superset_or(std::span<std::uint64_t> bits, unsigned n);
void minimal_outside(std::span<const std::uint64_t> closed, std::span<std::uint64_t> out, unsigned n);
}  // namespace neon

namespace detail {

// Word with bit p set iff bit `level` of p is clear, for level < 6.
inline constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

inline std::uint64_t valid_bits(unsigned n) { return n >= 6 ? ~0ULL : ((1ULL << (1U << n)) - 1); }

}  // namespace detail

}  // namespace qmt::kernels
