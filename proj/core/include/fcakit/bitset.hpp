#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fcakit {

// Fixed-universe bitset; the closure and enumeration kernel works on these.
// All binary operations require both sides to share the same universe size.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(std::size_t universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~0ull;
    b.trim();
    return b;
  }

  std::size_t universe() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  Bitset& set(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] |= 1ull << (i & 63);
    return *this;
  }

  Bitset& reset(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(1ull << (i & 63));
    return *this;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bitset& operator-=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const = default;

  std::size_t find_first() const { return scan_from(0); }

  std::size_t find_next(std::size_t i) const { return scan_from(i + 1); }

  // True when the two sets agree on every element strictly below `limit`.
  bool equal_below(const Bitset& o, std::size_t limit) const {
    assert(size_ == o.size_);
    const std::size_t wlimit = limit >> 6;
    for (std::size_t i = 0; i < wlimit; ++i)
      if (words_[i] != o.words_[i]) return false;
    const unsigned rest = limit & 63;
    if (rest == 0 || wlimit >= words_.size()) return true;
    const std::uint64_t mask = (1ull << rest) - 1;
    return (words_[wlimit] & mask) == (o.words_[wlimit] & mask);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void trim() {
    const unsigned rest = size_ & 63;
    if (rest && !words_.empty()) words_.back() &= (1ull << rest) - 1;
  }

  std::size_t scan_from(std::size_t i) const {
    if (i >= size_) return npos;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~0ull << (i & 63));
    while (true) {
      if (w) return wi * 64 + static_cast<unsigned>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace fcakit
