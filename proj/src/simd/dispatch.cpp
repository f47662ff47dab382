#include <atomic>

#include "rposet/simd/bitops.hpp"

namespace rposet::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(RPOSET_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable& best_available() noexcept {
  if (const KernelTable* t = avx2_kernels()) return *t;
  return detail::kScalarTable;
}

std::atomic<const KernelTable*> g_override{nullptr};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return detail::kScalarTable; }

const KernelTable* avx2_kernels() noexcept {
#if defined(RPOSET_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  if (const KernelTable* t = g_override.load(std::memory_order_acquire)) return *t;
  static const KernelTable& best = best_available();
  return best;
}

bool force_kernels(KernelKind kind) noexcept {
  const KernelTable* table = kind == KernelKind::scalar ? &detail::kScalarTable : avx2_kernels();
  if (!table) return false;
  g_override.store(table, std::memory_order_release);
  return true;
}

void reset_kernels() noexcept { g_override.store(nullptr, std::memory_order_release); }

}  // namespace rposet::simd
