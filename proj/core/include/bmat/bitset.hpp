#ifndef BMAT_BITSET_HPP_
#define BMAT_BITSET_HPP_

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace bmat {

/// Fixed-width dynamic bit vector backed by 64-bit words.
///
/// Bits beyond `width()-1` in the last word are kept zero at all times, so
/// whole-word comparisons and hashing are valid.
class Bitset {
 public:
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(int width)
      : width_(width), words_(static_cast<std::size_t>(word_count(width)), 0) {}

  static int word_count(int width) { return (width + kWordBits - 1) / kWordBits; }

  int width() const { return width_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i / kWordBits)] >>
            (static_cast<unsigned>(i) % kWordBits)) & 1u;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i / kWordBits)] |=
        std::uint64_t{1} << (static_cast<unsigned>(i) % kWordBits);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i / kWordBits)] &=
        ~(std::uint64_t{1} << (static_cast<unsigned>(i) % kWordBits));
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  /// Set difference: clears every bit that is set in `other`.
  Bitset& operator-=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset&) const = default;

  /// Index of the lowest set bit, or -1 when empty.
  int find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    return -1;
  }

  /// Calls fn(index) for every set bit in increasing order.
  template <class F>
  void for_each_set(F&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        fn(static_cast<int>(i) * kWordBits + b);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(width_);
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace bmat

#endif  // BMAT_BITSET_HPP_
