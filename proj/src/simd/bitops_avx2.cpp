// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include "rposet/simd/bitops.hpp"

namespace rposet::simd {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per 256-bit register

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256(a, b) computes ~a & b.
  for (; i + kLanes <= words; i += kLanes) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
  for (; i < words; ++i) dst[i] &= ~src[i];
}

void nor(Word* dst, const Word* a, const Word* b, std::size_t words) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes)
    store(dst + i, _mm256_xor_si256(_mm256_or_si256(load(a + i), load(b + i)), ones));
  for (; i < words; ++i) dst[i] = ~(a[i] | b[i]);
}

std::size_t popcount(const Word* a, std::size_t words) {
  // AVX2 has no vector popcount; unrolled hardware popcnt keeps four chains busy.
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    c0 += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    c1 += static_cast<std::size_t>(_mm_popcnt_u64(a[i + 1]));
    c2 += static_cast<std::size_t>(_mm_popcnt_u64(a[i + 2]));
    c3 += static_cast<std::size_t>(_mm_popcnt_u64(a[i + 3]));
  }
  for (; i < words; ++i) c0 += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return c0 + c1 + c2 + c3;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    const __m256i x = _mm256_and_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) return true;
  }
  for (; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  // testc(b, a) is 1 iff (~b & a) == 0.
  for (; i + kLanes <= words; i += kLanes)
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  for (; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool equal(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLanes <= words; i += kLanes) {
    const __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < words; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{KernelKind::avx2, "avx2", or_into, and_into, andnot_into, nor,
                             popcount, intersects, is_subset, equal};
}  // namespace detail

}  // namespace rposet::simd
