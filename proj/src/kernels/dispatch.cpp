#include <atomic>
#include <cstdlib>
#include <string>

#include "qmt/error.hpp"
#include "qmt/kernels/bitmap_kernels.hpp"

namespace qmt::kernels {

namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(QMT_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(QMT_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect() {
  if (const char* env = std::getenv("QMT_KERNEL_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == name(isa) && cpu_supports(isa)) return isa;
    }
  }
  if (cpu_supports(Isa::avx2)) return Isa::avx2;
  if (cpu_supports(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

// -1: not yet resolved
std::atomic<int> g_isa{-1};

}  // namespace

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

bool available(Isa isa) { return cpu_supports(isa); }

Isa active_isa() {
  int v = g_isa.load(std::memory_order_relaxed);
  if (v < 0) {
    v = static_cast<int>(detect());
    g_isa.store(v, std::memory_order_relaxed);
  }
  return static_cast<Isa>(v);
}

void force_isa(Isa isa) {
  if (!cpu_supports(isa)) throw InvalidArgument("kernel ISA '" + std::string(name(isa)) + "' is not available");
  g_isa.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_isa.store(-1, std::memory_order_relaxed); }

std::size_t word_count(unsigned n) { return n <= 6 ? 1 : (std::size_t{1} << (n - 6)); }

void superset_or(std::span<std::uint64_t> bits, unsigned n) {
  switch (active_isa()) {
#if defined(QMT_HAVE_AVX2_KERNELS)
    case Isa::avx2:
      return avx2::superset_or(bits, n);
#endif
#if defined(QMT_HAVE_NEON_KERNELS)
    case Isa::neon:
      return neon::superset_or(bits, n);
#endif
    default:
      return scalar::superset_or(bits, n);
  }
}

void minimal_outside(std::span<const std::uint64_t> closed, std::span<std::uint64_t> out, unsigned n) {
  switch (active_isa()) {
#if defined(QMT_HAVE_AVX2_KERNELS)
    case Isa::avx2:
      return avx2::minimal_outside(closed, out, n);
#endif
#if defined(QMT_HAVE_NEON_KERNELS)
    case Isa::neon:
      return neon::minimal_outside(closed, out, n);
#endif
    default:
      return scalar::minimal_outside(closed, out, n);
  }
}

}  // namespace qmt::kernels
