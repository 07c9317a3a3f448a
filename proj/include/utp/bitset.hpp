#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace utp {

// Fixed-size bitset with direct word access. Row sets of extensional
// predicates live here; the enumeration kernels write whole 64-bit words so
// parallel fills never race on a shared word.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t n, bool fill = false)
      : n_(n), w_((n + 63) / 64, fill ? ~0ULL : 0ULL) {
    clamp_tail();
  }

  std::uint64_t size() const { return n_; }
  std::size_t words() const { return w_.size(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }
  void set_word(std::size_t i, std::uint64_t v) { w_[i] = v; }

  bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(std::uint64_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::uint64_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.w_) w = ~w;
    r.clamp_tail();
    return r;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  // lowest set index, or size() when empty
  std::uint64_t first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return (static_cast<std::uint64_t>(i) << 6) +
                        static_cast<std::uint64_t>(std::countr_zero(w_[i]));
    }
    return n_;
  }

  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        std::uint64_t b = static_cast<std::uint64_t>(std::countr_zero(w));
        fn((static_cast<std::uint64_t>(i) << 6) + b);
        w &= w - 1;
      }
    }
  }

  // zero any padding bits past size(); word-level writers call this once done
  void clamp_tail() {
    if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
  }

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace utp
