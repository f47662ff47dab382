#include <bit>

#include "rposet/simd/bitops.hpp"

namespace rposet::simd {
namespace {

void or_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

void nor(Word* dst, const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = ~(a[i] | b[i]);
}

std::size_t popcount(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool equal(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{KernelKind::scalar, "scalar", or_into, and_into, andnot_into, nor,
                               popcount, intersects, is_subset, equal};
}  // namespace detail

}  // namespace rposet::simd
