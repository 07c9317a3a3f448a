#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "utp/event_seq.hpp"
#include "utp/rational.hpp"
#include "utp/rng.hpp"
#include "utp/timed_trace.hpp"

namespace utp {

// A trace model bundles a carrier type with concatenation, the empty
// trace, the derived prefix/subtraction operators, a value generator for
// randomized law checking, a shrink order for counterexample minimisation,
// and (where finite) an enumerator for exhaustive checking.
//
// Each model implements:
//   using Value = ...;
//   Value empty() const;
//   Value concat(a, b) const;
//   bool  equal(a, b) const;
//   bool  prefix(a, b) const;
//   Value subtract(y, x) const;
//   Value sample(Rng&) const;
//   std::vector<Value> shrinks(v) const;       // strictly "smaller" candidates
//   std::optional<std::vector<Value>> enumerate() const;  // nullopt if infinite
//   std::string show(v) const;
//   nlohmann::json to_json(v) const;

// Finite event sequences over a declared event set.
class SeqModel {
 public:
  using Value = EventSeq;

  SeqModel(std::vector<std::string> events, std::size_t max_len)
      : events_(std::move(events)), max_len_(max_len) {}

  Value empty() const { return {}; }
  Value concat(const Value& a, const Value& b) const { return seq_concat(a, b); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  bool prefix(const Value& a, const Value& b) const { return seq_prefix(a, b); }
  Value subtract(const Value& y, const Value& x) const { return seq_subtract(y, x); }

  Value sample(Rng& rng) const {
    std::size_t len = rng.below(max_len_ + 1);
    Value v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i) v.push_back(events_[rng.below(events_.size())]);
    return v;
  }

  std::vector<Value> shrinks(const Value& v) const {
    std::vector<Value> out;
    if (v.empty()) return out;
    out.push_back({});
    for (std::size_t i = 0; i < v.size(); ++i) {
      Value w = v;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(w));
    }
    return out;
  }

  std::optional<std::vector<Value>> enumerate() const {
    std::vector<Value> all{{}};
    std::size_t lo = 0;
    for (std::size_t len = 1; len <= max_len_; ++len) {
      std::size_t hi = all.size();
      for (std::size_t i = lo; i < hi; ++i) {
        for (const std::string& e : events_) {
          Value v = all[i];
          v.push_back(e);
          all.push_back(std::move(v));
        }
      }
      lo = hi;
    }
    return all;
  }

  std::string show(const Value& v) const { return seq_str(v); }
  nlohmann::json to_json(const Value& v) const { return nlohmann::json(v); }

  const std::vector<std::string>& events() const { return events_; }
  std::size_t max_len() const { return max_len_; }

 private:
  std::vector<std::string> events_;
  std::size_t max_len_;
};

// Nonnegative rationals under addition. The carrier is exact: cancellation
// and the subtraction laws are iff-statements that rounding would break.
class RatModel {
 public:
  using Value = Rational;

  explicit RatModel(std::int64_t max_num = 100, std::int64_t max_den = 12)
      : max_num_(max_num), max_den_(max_den) {}

  Value empty() const { return Rational(0); }
  Value concat(const Value& a, const Value& b) const { return a + b; }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  bool prefix(const Value& a, const Value& b) const { return a <= b; }
  Value subtract(const Value& y, const Value& x) const {
    return x <= y ? y - x : Rational(0);
  }

  Value sample(Rng& rng) const {
    if (rng.chance(1, 10)) return Rational(0);
    return Rational(rng.range(0, max_num_), rng.range(1, max_den_));
  }

  std::vector<Value> shrinks(const Value& v) const {
    std::vector<Value> out;
    if (v.is_zero()) return out;
    out.push_back(Rational(0));
    if (!v.is_integer()) out.push_back(Rational(v.num() / v.den()));  // truncate
    out.push_back(v / Rational(2));
    if (v >= Rational(1)) out.push_back(v - Rational(1));
    return out;
  }

  std::optional<std::vector<Value>> enumerate() const { return std::nullopt; }

  std::string show(const Value& v) const { return v.str(); }
  nlohmann::json to_json(const Value& v) const { return nlohmann::json(v.str()); }

 private:
  std::int64_t max_num_;
  std::int64_t max_den_;
};

// Piecewise-polynomial timed traces over a fixed variable set. The
// generator produces 0-3 segments with durations from {1/4, 1/2, 1, 3/2}
// and valuations of degree <= 2 with coefficients in [-2, 2], always
// canonicalised, which exercises merge boundaries often.
class TimedModel {
 public:
  using Value = TimedTrace;

  explicit TimedModel(std::vector<std::string> vars = {"x", "y"}) : vars_(std::move(vars)) {}

  Value empty() const { return TimedTrace(); }
  Value concat(const Value& a, const Value& b) const { return tt_concat(a, b); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  bool prefix(const Value& a, const Value& b) const { return tt_prefix(a, b); }
  Value subtract(const Value& y, const Value& x) const { return tt_subtract(y, x); }

  Value sample(Rng& rng) const {
    static const Rational kDurations[] = {Rational(1, 4), Rational(1, 2), Rational(1),
                                          Rational(3, 2)};
    std::size_t n_segs = rng.below(4);  // 0..3
    std::vector<Segment> segs;
    segs.reserve(n_segs);
    for (std::size_t i = 0; i < n_segs; ++i) {
      Segment s;
      s.duration = kDurations[rng.below(4)];
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        std::vector<Rational> coeffs;
        std::size_t deg = rng.below(3);  // degree <= 2
        for (std::size_t c = 0; c <= deg; ++c) coeffs.emplace_back(rng.range(-2, 2));
        s.valuation.emplace_back(std::move(coeffs));
      }
      segs.push_back(std::move(s));
    }
    return TimedTrace::make(vars_, std::move(segs));
  }

  std::vector<Value> shrinks(const Value& v) const {
    std::vector<Value> out;
    if (v.empty()) return out;
    out.push_back(TimedTrace());
    const auto& segs = v.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
      std::vector<Segment> w;
      for (std::size_t j = 0; j < segs.size(); ++j)
        if (j != i) w.push_back(segs[j]);
      if (!w.empty()) out.push_back(TimedTrace::make(v.vars(), std::move(w)));
    }
    {
      std::vector<Segment> w = segs;
      w.back().duration = w.back().duration / Rational(2);
      out.push_back(TimedTrace::make(v.vars(), std::move(w)));
    }
    return out;
  }

  std::optional<std::vector<Value>> enumerate() const { return std::nullopt; }

  std::string show(const Value& v) const { return v.str(); }
  nlohmann::json to_json(const Value& v) const { return tt_to_json(v); }

  const std::vector<std::string>& vars() const { return vars_; }

 private:
  std::vector<std::string> vars_;
};

}  // namespace utp
