#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level kernels behind Bitset. Every entry point has a portable scalar
// reference; vector variants must produce bit-identical results.
namespace rposet::simd {

using Word = std::uint64_t;

enum class KernelKind { scalar, avx2 };

struct KernelTable {
  KernelKind kind;
  std::string_view name;
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  void (*andnot_into)(Word* dst, const Word* src, std::size_t words);  // dst &= ~src
  // dst = ~(a | b), caller masks tail bits.
  void (*nor)(Word* dst, const Word* a, const Word* b, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);  // a ⊆ b
  bool (*equal)(const Word* a, const Word* b, std::size_t words);
};

const KernelTable& scalar_kernels() noexcept;

// Null when the build or the running CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

// Best table for this machine, unless overridden by force_kernels().
const KernelTable& active_kernels() noexcept;

// Pins dispatch to a specific table; returns false if it is unavailable.
bool force_kernels(KernelKind kind) noexcept;
void reset_kernels() noexcept;

namespace detail {
// Per-ISA tables; the avx2 one exists only when compiled in.
extern const KernelTable kScalarTable;
#if defined(RPOSET_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace rposet::simd
