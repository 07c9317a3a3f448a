#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "utp/poly.hpp"
#include "utp/rational.hpp"

namespace utp {

// One continuous piece of a timed trace: a positive duration and, per
// variable, a polynomial in local time s in [0, duration). Valuations are
// aligned positionally with the owning trace's variable list.
struct Segment {
  Rational duration;
  std::vector<Poly> valuation;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.duration == b.duration && a.valuation == b.valuation;
  }
  friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
};

// A piecewise-polynomial function [0, t) -> values, kept in canonical form:
// variables sorted, every duration strictly positive, and no two adjacent
// segments mergeable (the right segment, re-based to the left segment's
// origin, never coincides coefficient-for-coefficient with the left one).
// The empty trace has no segments and an empty variable list; it
// concatenates with traces over any variable set.
class TimedTrace {
 public:
  TimedTrace() = default;

  // Canonicalises: sorts variables (re-aligning valuations), merges
  // mergeable neighbours, and clears the variable list when empty.
  // Throws std::invalid_argument on non-positive durations, duplicate
  // variables or arity mismatches.
  static TimedTrace make(std::vector<std::string> vars, std::vector<Segment> segments);

  static TimedTrace single(const std::vector<std::string>& vars, const Rational& duration,
                           const std::vector<Poly>& valuation) {
    return make(vars, {Segment{duration, valuation}});
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }

  friend bool operator==(const TimedTrace& a, const TimedTrace& b) {
    return a.vars_ == b.vars_ && a.segs_ == b.segs_;
  }
  friend bool operator!=(const TimedTrace& a, const TimedTrace& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Segment> segs_;
};

// End time: the sum of segment durations, i.e. min of the complement of
// the trace's domain [0, t).
Rational tt_end(const TimedTrace& f);

// Samples every variable at absolute time t. Throws OutOfDomain unless
// 0 <= t < tt_end(f); the domain is half-open, so the end point is out.
std::vector<Rational> tt_at(const TimedTrace& f, const Rational& t);

// f followed by g, with g's domain shifted to start at end(f). Throws
// VariableSetMismatch when both are nonempty over different variable sets.
TimedTrace tt_concat(const TimedTrace& f, const TimedTrace& g);

// x <= y iff some z extends x to y. On canonical forms this is: x's
// segments are an initial sublist of y's, except that x's last segment may
// be a strict truncation (same polynomials, smaller duration) of the
// matching segment of y.
bool tt_prefix(const TimedTrace& x, const TimedTrace& y);

// The unique z with y = x ^ z when x <= y, else the empty trace. A
// truncated first segment is re-based to its own local origin.
TimedTrace tt_subtract(const TimedTrace& y, const TimedTrace& x);

// Raw-list validator: positive durations, uniform arity, sorted unique
// variables, no mergeable adjacency. Rejects hand-built non-canonical
// segment lists that TimedTrace::make would have repaired.
bool tt_well_formed(const std::vector<std::string>& vars, const std::vector<Segment>& segments,
                    std::string* why = nullptr);

// Executable witness that concatenation stays inside the trace type:
// validates every representation invariant of tt_concat(f, g).
bool tt_closure_check(const TimedTrace& f, const TimedTrace& g);

// A timed trace viewed as a partial function shifted right by a
// nonnegative offset: defined on [offset, offset + end(base)).
class ShiftedView {
 public:
  ShiftedView(const TimedTrace& base, Rational offset)
      : base_(&base), offset_(std::move(offset)) {}

  bool defined(const Rational& t) const {
    return t >= offset_ && (t - offset_) < tt_end(*base_);
  }
  std::vector<Rational> at(const Rational& t) const;  // throws OutOfDomain
  ShiftedView shifted(const Rational& n) const { return ShiftedView(*base_, offset_ + n); }
  const Rational& offset() const { return offset_; }

 private:
  const TimedTrace* base_;
  Rational offset_;
};

inline ShiftedView tt_shift(const TimedTrace& f, const Rational& n) {
  return ShiftedView(f, n);
}

// Interchange form:
// {"vars": [...], "segments": [{"duration": "p/q", "valuation": {"x": ["c0","c1",...]}}]}
nlohmann::json tt_to_json(const TimedTrace& f);
TimedTrace tt_from_json(const nlohmann::json& j);

// Discrete-valued state is encoded as constant polynomials; this checks
// that every listed discrete variable is piecewise constant in f.
bool tt_discrete_ok(const TimedTrace& f, const std::vector<std::string>& discrete_vars);

}  // namespace utp
