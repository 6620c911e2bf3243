#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace linext {

// Fixed-width dynamic bitset. Rows of a poset's comparability relation and
// order ideals are stored in these; subset tests are word-parallel.
class bitvec {
 public:
  bitvec() = default;
  explicit bitvec(int nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const bitvec& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool intersects(const bitvec& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  bitvec& operator|=(const bitvec& other) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] |= other.words_[k];
    return *this;
  }

  bitvec& operator&=(const bitvec& other) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= other.words_[k];
    return *this;
  }

  friend bool operator==(const bitvec& a, const bitvec& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  // Word-lexicographic order, used only to make enumeration deterministic.
  friend bool operator<(const bitvec& a, const bitvec& b) {
    return a.words_ < b.words_;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(nbits_));
  }

  template <typename F>
  void for_each_bit(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct bitvec_hash {
  std::size_t operator()(const bitvec& v) const { return v.hash(); }
};

}  // namespace linext
