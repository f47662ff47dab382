#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rposet/simd/bitops.hpp"

namespace rposet {

// Fixed-universe bitset over element indices [0, size). Bulk operations route
// through the runtime-selected word kernels.
class Bitset {
public:
  using Word = simd::Word;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~Word{0};
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }
  Word* data() noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const noexcept { return simd::active_kernels().popcount(data(), word_count()); }
  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  Bitset& operator|=(const Bitset& o) noexcept {
    simd::active_kernels().or_into(data(), o.data(), word_count());
    return *this;
  }
  Bitset& operator&=(const Bitset& o) noexcept {
    simd::active_kernels().and_into(data(), o.data(), word_count());
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) noexcept {
    simd::active_kernels().andnot_into(data(), o.data(), word_count());
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a.subtract(b); }

  // Complement of (a | b) within the universe.
  static Bitset nor(const Bitset& a, const Bitset& b) {
    Bitset out(a.size_);
    simd::active_kernels().nor(out.data(), a.data(), b.data(), out.word_count());
    out.trim();
    return out;
  }

  bool intersects(const Bitset& o) const noexcept {
    return simd::active_kernels().intersects(data(), o.data(), word_count());
  }
  bool is_subset_of(const Bitset& o) const noexcept {
    return simd::active_kernels().is_subset(data(), o.data(), word_count());
  }
  friend bool operator==(const Bitset& a, const Bitset& b) noexcept {
    return a.size_ == b.size_ && simd::active_kernels().equal(a.data(), b.data(), a.word_count());
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<std::uint32_t>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  template <class Range>
  static Bitset from(std::size_t size, const Range& items) {
    Bitset b(size);
    for (auto i : items) b.set(static_cast<std::size_t>(i));
    return b;
  }

private:
  void trim() noexcept {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace rposet
