#pragma once

#include <memory>
#include <utility>

#include "utp/alphabet.hpp"
#include "utp/bitset.hpp"
#include "utp/errors.hpp"
#include "utp/kern.hpp"

namespace utp {

// An alphabetised relation, extensionally: the set of bindings (ranks of
// the alphabet's universe) that satisfy it.
class Predicate {
 public:
  Predicate(AlphabetPtr alpha, Bitset rows)
      : alpha_(std::move(alpha)), rows_(std::move(rows)) {}

  static Predicate top(AlphabetPtr a) {
    Bitset b(a->size(), true);
    return Predicate(std::move(a), std::move(b));
  }
  static Predicate bottom(AlphabetPtr a) {
    Bitset b(a->size(), false);
    return Predicate(std::move(a), std::move(b));
  }

  // builds rows from a per-rank membership function (parallel fill)
  template <class RankFn>
  static Predicate of_rows(AlphabetPtr a, RankFn&& fn) {
    Bitset b(a->size());
    const std::uint64_t n = a->size();
    kern::fill_words(b, [&](std::int64_t w) {
      std::uint64_t word = 0;
      const std::uint64_t base = static_cast<std::uint64_t>(w) << 6;
      const std::uint64_t hi = std::min<std::uint64_t>(base + 64, n);
      for (std::uint64_t r = base; r < hi; ++r)
        if (fn(r)) word |= 1ULL << (r - base);
      return word;
    });
    return Predicate(std::move(a), std::move(b));
  }

  // membership from the binding view of each rank
  template <class BindingFn>
  static Predicate of_bindings(AlphabetPtr a, BindingFn&& fn) {
    const Alphabet& al = *a;
    return of_rows(std::move(a), [&al, &fn](std::uint64_t r) {
      return fn(BindingView{&al, r});
    });
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Bitset& rows() const { return rows_; }
  Bitset& rows() { return rows_; }
  std::uint64_t count() const { return rows_.count(); }
  bool empty() const { return rows_.none(); }

  friend bool operator==(const Predicate& a, const Predicate& b) {
    return compatible(a.alpha_, b.alpha_) && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Predicate& a, const Predicate& b) { return !(a == b); }

 private:
  AlphabetPtr alpha_;
  Bitset rows_;
};

inline void require_same_alphabet(const Predicate& p, const Predicate& q,
                                  const char* op) {
  if (!compatible(p.alphabet(), q.alphabet()))
    throw AlphabetMismatch(std::string(op) + ": operands over different alphabets");
}

}  // namespace utp
