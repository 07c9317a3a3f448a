#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace utp {

// Finite event sequence. Events are opaque symbols; the declared event set
// lives in the model/universe that generates these, not in the value.
using EventSeq = std::vector<std::string>;

inline EventSeq seq_concat(const EventSeq& a, const EventSeq& b) {
  EventSeq r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline bool seq_prefix(const EventSeq& x, const EventSeq& y) {
  if (x.size() > y.size()) return false;
  return std::equal(x.begin(), x.end(), y.begin());
}

// y - x: the unique z with y = x ++ z when x is a prefix of y, else <>.
inline EventSeq seq_subtract(const EventSeq& y, const EventSeq& x) {
  if (!seq_prefix(x, y)) return {};
  return EventSeq(y.begin() + static_cast<std::ptrdiff_t>(x.size()), y.end());
}

inline std::string seq_str(const EventSeq& s) {
  std::string r = "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += ",";
    r += s[i];
  }
  return r + ">";
}

}  // namespace utp
