#pragma once

#include <cstdint>

#include "utp/bitset.hpp"

namespace utp::kern {

// Runtime switch between the OpenMP kernels and their serial reference
// twins. Results are identical either way: every work item derives its
// output from its own index alone, so schedule and thread count never
// show through.
struct Config {
  bool parallel = true;
  std::int64_t min_parallel_items = 2048;  // below this the serial twin runs
};

inline Config& config() {
  static Config c;
  return c;
}

namespace serial {

// word_fn(word_index) -> 64 membership bits
template <class WordFn>
void fill_words(Bitset& out, WordFn&& word_fn) {
  const std::int64_t nw = static_cast<std::int64_t>(out.words());
  for (std::int64_t w = 0; w < nw; ++w) out.set_word(static_cast<std::size_t>(w), word_fn(w));
  out.clamp_tail();
}

// case_fn(i) -> true when the case passes; returns the lowest failing
// index, or -1 when all pass
template <class CaseFn>
std::int64_t first_fail(std::int64_t n, CaseFn&& case_fn) {
  for (std::int64_t i = 0; i < n; ++i)
    if (!case_fn(i)) return i;
  return -1;
}

template <class Fn>
void for_each(std::int64_t n, Fn&& fn) {
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace serial

template <class WordFn>
void fill_words(Bitset& out, WordFn&& word_fn) {
  const std::int64_t nw = static_cast<std::int64_t>(out.words());
  if (!config().parallel || nw < config().min_parallel_items / 64) {
    serial::fill_words(out, word_fn);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < nw; ++w) out.set_word(static_cast<std::size_t>(w), word_fn(w));
  out.clamp_tail();
}

template <class CaseFn>
std::int64_t first_fail(std::int64_t n, CaseFn&& case_fn) {
  if (!config().parallel || n < config().min_parallel_items)
    return serial::first_fail(n, case_fn);
  std::int64_t lowest = n;
#pragma omp parallel for schedule(static) reduction(min : lowest)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i < lowest && !case_fn(i)) lowest = i;
  }
  return lowest == n ? -1 : lowest;
}

// fn(i) must touch only state owned by item i
template <class Fn>
void for_each(std::int64_t n, Fn&& fn) {
  if (!config().parallel || n < config().min_parallel_items) {
    serial::for_each(n, fn);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace utp::kern
