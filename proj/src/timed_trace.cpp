#include "utp/timed_trace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "utp/errors.hpp"

namespace utp {

namespace {

bool mergeable(const Segment& a, const Segment& b) {
  for (std::size_t k = 0; k < a.valuation.size(); ++k) {
    if (a.valuation[k].shift_origin(a.duration) != b.valuation[k]) return false;
  }
  return true;
}

}  // namespace

TimedTrace TimedTrace::make(std::vector<std::string> vars, std::vector<Segment> segments) {
  // sort variables, re-aligning every valuation
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return vars[i] < vars[j]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vars[order[i - 1]] == vars[order[i]])
      throw std::invalid_argument("duplicate timed-trace variable: " + vars[order[i]]);
  }
  std::vector<std::string> svars;
  svars.reserve(vars.size());
  for (std::size_t i : order) svars.push_back(vars[i]);

  std::vector<Segment> out;
  out.reserve(segments.size());
  for (Segment& s : segments) {
    if (!(s.duration > Rational(0)))
      throw std::invalid_argument("segment duration must be positive");
    if (s.valuation.size() != vars.size())
      throw std::invalid_argument("segment arity does not match variable list");
    Segment t;
    t.duration = s.duration;
    t.valuation.reserve(order.size());
    for (std::size_t i : order) t.valuation.push_back(s.valuation[i]);
    if (!out.empty() && mergeable(out.back(), t)) {
      out.back().duration += t.duration;
    } else {
      out.push_back(std::move(t));
    }
  }

  TimedTrace f;
  if (!out.empty()) {
    f.vars_ = std::move(svars);
    f.segs_ = std::move(out);
  }
  return f;
}

std::string TimedTrace::str() const {
  if (segs_.empty()) return "eps";
  std::string r;
  for (const Segment& s : segs_) {
    r += "[d=" + s.duration.str();
    for (std::size_t k = 0; k < vars_.size(); ++k)
      r += ", " + vars_[k] + "->" + s.valuation[k].str();
    r += "]";
  }
  return r;
}

Rational tt_end(const TimedTrace& f) {
  Rational t(0);
  for (const Segment& s : f.segments()) t += s.duration;
  return t;
}

std::vector<Rational> tt_at(const TimedTrace& f, const Rational& t) {
  if (t < Rational(0)) throw OutOfDomain("tt_at: negative time " + t.str());
  Rational start(0);
  for (const Segment& s : f.segments()) {
    Rational stop = start + s.duration;
    if (t < stop) {
      Rational local = t - start;
      std::vector<Rational> vals;
      vals.reserve(s.valuation.size());
      for (const Poly& p : s.valuation) vals.push_back(p.eval(local));
      return vals;
    }
    start = stop;
  }
  throw OutOfDomain("tt_at: time " + t.str() + " is at or beyond the end " + start.str());
}

TimedTrace tt_concat(const TimedTrace& f, const TimedTrace& g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  if (f.vars() != g.vars())
    throw VariableSetMismatch("tt_concat: variable sets differ");
  std::vector<Segment> segs = f.segments();
  segs.insert(segs.end(), g.segments().begin(), g.segments().end());
  return TimedTrace::make(f.vars(), std::move(segs));
}

bool tt_prefix(const TimedTrace& x, const TimedTrace& y) {
  if (x.empty()) return true;
  if (y.empty()) return false;
  if (x.vars() != y.vars()) return false;
  const auto& xs = x.segments();
  const auto& ys = y.segments();
  if (xs.size() > ys.size()) return false;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] != ys[i]) return false;
  }
  const Segment& a = xs.back();
  const Segment& b = ys[xs.size() - 1];
  if (a.valuation != b.valuation) return false;
  if (a.duration > b.duration) return false;
  if (a.duration == b.duration) return true;
  return true;  // strict truncation of b
}

TimedTrace tt_subtract(const TimedTrace& y, const TimedTrace& x) {
  if (!tt_prefix(x, y)) return TimedTrace();
  if (x.empty()) return y;
  const auto& xs = x.segments();
  const auto& ys = y.segments();
  const Segment& a = xs.back();
  const Segment& b = ys[xs.size() - 1];
  std::vector<Segment> rest;
  if (a.duration < b.duration) {
    Segment head;
    head.duration = b.duration - a.duration;
    head.valuation.reserve(b.valuation.size());
    for (const Poly& p : b.valuation) head.valuation.push_back(p.shift_origin(a.duration));
    rest.push_back(std::move(head));
  }
  rest.insert(rest.end(), ys.begin() + static_cast<std::ptrdiff_t>(xs.size()), ys.end());
  if (rest.empty()) return TimedTrace();
  return TimedTrace::make(y.vars(), std::move(rest));
}

bool tt_well_formed(const std::vector<std::string>& vars, const std::vector<Segment>& segments,
                    std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!std::is_sorted(vars.begin(), vars.end())) return fail("variables not sorted");
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    return fail("duplicate variable");
  if (segments.empty() && !vars.empty()) return fail("empty trace must have no variables");
  for (const Segment& s : segments) {
    if (!(s.duration > Rational(0))) return fail("segment with non-positive duration");
    if (s.valuation.size() != vars.size()) return fail("segment arity mismatch");
  }
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    if (mergeable(segments[i], segments[i + 1]))
      return fail("mergeable adjacent segments at index " + std::to_string(i));
  }
  return true;
}

bool tt_closure_check(const TimedTrace& f, const TimedTrace& g) {
  TimedTrace h = tt_concat(f, g);
  if (!tt_well_formed(h.vars(), h.segments())) return false;
  return tt_end(h) == tt_end(f) + tt_end(g);
}

std::vector<Rational> ShiftedView::at(const Rational& t) const {
  if (t < offset_) throw OutOfDomain("shifted view sampled below its offset");
  return tt_at(*base_, t - offset_);
}

nlohmann::json tt_to_json(const TimedTrace& f) {
  nlohmann::json j;
  j["vars"] = f.vars();
  nlohmann::json segs = nlohmann::json::array();
  for (const Segment& s : f.segments()) {
    nlohmann::json seg;
    seg["duration"] = s.duration.str();
    nlohmann::json val;
    for (std::size_t k = 0; k < f.vars().size(); ++k) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rational& c : s.valuation[k].coeffs()) coeffs.push_back(c.str());
      val[f.vars()[k]] = coeffs;
    }
    seg["valuation"] = val;
    segs.push_back(seg);
  }
  j["segments"] = segs;
  return j;
}

TimedTrace tt_from_json(const nlohmann::json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  std::vector<Segment> segs;
  for (const auto& seg : j.at("segments")) {
    Segment s;
    s.duration = Rational::parse(seg.at("duration").get<std::string>());
    s.valuation.resize(vars.size());
    const auto& val = seg.at("valuation");
    for (std::size_t k = 0; k < vars.size(); ++k) {
      std::vector<Rational> coeffs;
      for (const auto& c : val.at(vars[k])) coeffs.push_back(Rational::parse(c.get<std::string>()));
      s.valuation[k] = Poly(std::move(coeffs));
    }
    segs.push_back(std::move(s));
  }
  return TimedTrace::make(std::move(vars), std::move(segs));
}

bool tt_discrete_ok(const TimedTrace& f, const std::vector<std::string>& discrete_vars) {
  for (const std::string& v : discrete_vars) {
    auto it = std::find(f.vars().begin(), f.vars().end(), v);
    if (it == f.vars().end()) continue;
    std::size_t k = static_cast<std::size_t>(it - f.vars().begin());
    for (const Segment& s : f.segments()) {
      if (!s.valuation[k].is_constant()) return false;
    }
  }
  return true;
}

}  // namespace utp
