#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "utp/kern.hpp"
#include "utp/rng.hpp"

namespace utp {

// One verdict per trace-algebra law. passed is true exactly when no
// counterexample was found; a generator failure is reported separately as
// a diagnostic and never counted as a law failure.
struct LawReport {
  std::string law;
  std::uint64_t cases = 0;
  bool passed = true;
  std::optional<nlohmann::json> counterexample;
  std::optional<std::string> diagnostic;

  bool clean() const { return passed && !diagnostic; }
};

inline nlohmann::json law_report_json(const LawReport& r) {
  nlohmann::json j;
  j["law"] = r.law;
  j["cases"] = r.cases;
  j["passed"] = r.passed;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (r.diagnostic) j["diagnostic"] = *r.diagnostic;
  return j;
}

struct LawConfig {
  enum class Mode { Exhaustive, Randomized };
  Mode mode = Mode::Randomized;
  std::uint64_t cases = 10000;  // randomized only
  std::uint64_t seed = 0;
};

namespace detail {

// Tuples are drawn so that the conditional laws fire: coordinates reuse
// earlier values, extend them, or collapse to the empty trace often enough
// that premises like x <= y and x = y hold in a steady fraction of cases.
template <class M>
std::array<typename M::Value, 3> law_tuple(const M& m, Rng& rng) {
  using V = typename M::Value;
  std::array<V, 3> t{};
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint64_t roll = rng.below(100);
    if (roll < 10) {
      t[i] = m.empty();
    } else if (roll < 25 && i > 0) {
      t[i] = t[rng.below(i)];
    } else if (roll < 40 && i > 0) {
      t[i] = m.concat(t[rng.below(i)], m.sample(rng));
    } else {
      t[i] = m.sample(rng);
    }
  }
  return t;
}

// Greedy minimisation: repeatedly replace one or two coordinates with
// shrink candidates while the law still fails.
template <class M, class Check>
std::array<typename M::Value, 3> shrink_tuple(const M& m, const Check& check,
                                              std::array<typename M::Value, 3> t) {
  using V = typename M::Value;
  for (int round = 0; round < 200; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < 3 && !improved; ++i) {
      for (const V& cand : m.shrinks(t[i])) {
        auto u = t;
        u[i] = cand;
        if (!check(u[0], u[1], u[2])) {
          t = std::move(u);
          improved = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < 3 && !improved; ++i) {
      for (std::size_t j = i + 1; j < 3 && !improved; ++j) {
        for (const V& ci : m.shrinks(t[i])) {
          for (const V& cj : m.shrinks(t[j])) {
            auto u = t;
            u[i] = ci;
            u[j] = cj;
            if (!check(u[0], u[1], u[2])) {
              t = std::move(u);
              improved = true;
              break;
            }
          }
          if (improved) break;
        }
      }
    }
    if (!improved) break;
  }
  return t;
}

}  // namespace detail

// Runs the full law suite against a model: monoid axioms TA1-TA5, prefix
// laws TP1-TP4 (TP1 checks reflexivity, antisymmetry and transitivity),
// and subtraction laws TS1-TS8. Exhaustive mode iterates all value triples
// from the model's enumerator; randomized mode draws seeded cases.
template <class M>
std::vector<LawReport> check_laws(const M& m, const LawConfig& cfg) {
  using V = typename M::Value;
  using Check = std::function<bool(const V&, const V&, const V&)>;

  auto eq = [&m](const V& a, const V& b) { return m.equal(a, b); };
  auto cat = [&m](const V& a, const V& b) { return m.concat(a, b); };
  auto le = [&m](const V& a, const V& b) { return m.prefix(a, b); };
  auto sub = [&m](const V& a, const V& b) { return m.subtract(a, b); };
  const V eps = m.empty();

  std::vector<std::pair<std::string, Check>> laws;
  laws.emplace_back("TA1", [=](const V& x, const V& y, const V& z) {
    return eq(cat(cat(x, y), z), cat(x, cat(y, z)));
  });
  laws.emplace_back("TA2", [=](const V& x, const V&, const V&) {
    return eq(cat(eps, x), x) && eq(cat(x, eps), x);
  });
  // cancellation, checked as the biconditional so random cases are never vacuous
  laws.emplace_back("TA3", [=](const V& x, const V& y, const V& z) {
    return eq(cat(x, y), cat(x, z)) == eq(y, z);
  });
  laws.emplace_back("TA4", [=](const V& x, const V& y, const V& z) {
    return eq(cat(x, z), cat(y, z)) == eq(x, y);
  });
  laws.emplace_back("TA5", [=](const V& x, const V& y, const V&) {
    return eq(cat(x, y), eps) == (eq(x, eps) && eq(y, eps));
  });
  laws.emplace_back("TP1", [=](const V& x, const V& y, const V& z) {
    if (!le(x, x)) return false;                             // reflexive
    if (le(x, y) && le(y, x) && !eq(x, y)) return false;     // antisymmetric
    if (le(x, y) && le(y, z) && !le(x, z)) return false;     // transitive
    return true;
  });
  laws.emplace_back("TP2", [=](const V& x, const V&, const V&) { return le(eps, x); });
  laws.emplace_back("TP3", [=](const V& x, const V& y, const V&) { return le(x, cat(x, y)); });
  laws.emplace_back("TP4", [=](const V& x, const V& y, const V& z) {
    return le(cat(x, y), cat(x, z)) == le(y, z);
  });
  laws.emplace_back("TS1", [=](const V& x, const V&, const V&) { return eq(sub(x, eps), x); });
  laws.emplace_back("TS2", [=](const V& x, const V&, const V&) { return eq(sub(eps, x), eps); });
  laws.emplace_back("TS3", [=](const V& x, const V&, const V&) { return eq(sub(x, x), eps); });
  laws.emplace_back("TS4", [=](const V& x, const V& y, const V&) {
    return eq(sub(cat(x, y), x), y);
  });
  laws.emplace_back("TS5", [=](const V& x, const V& y, const V& z) {
    return eq(sub(sub(x, y), z), sub(x, cat(y, z)));
  });
  laws.emplace_back("TS6", [=](const V& x, const V& y, const V& z) {
    return eq(sub(cat(x, y), cat(x, z)), sub(y, z));
  });
  laws.emplace_back("TS7", [=](const V& x, const V& y, const V&) {
    return (le(y, x) && eq(sub(x, y), eps)) == eq(x, y);
  });
  laws.emplace_back("TS8", [=](const V& x, const V& y, const V&) {
    return !le(x, y) || eq(cat(x, sub(y, x)), y);
  });

  std::vector<LawReport> out;
  out.reserve(laws.size());

  std::optional<std::vector<V>> all;
  if (cfg.mode == LawConfig::Mode::Exhaustive) {
    all = m.enumerate();
    if (!all) {
      for (const auto& [name, check] : laws) {
        LawReport r;
        r.law = name;
        r.diagnostic = "model has no finite enumerator; use randomized mode";
        out.push_back(std::move(r));
      }
      return out;
    }
  }

  for (std::size_t law_idx = 0; law_idx < laws.size(); ++law_idx) {
    const auto& [name, check] = laws[law_idx];
    LawReport r;
    r.law = name;

    auto tuple_for = [&](std::int64_t i) -> std::array<V, 3> {
      if (all) {
        std::uint64_t n = all->size();
        std::uint64_t u = static_cast<std::uint64_t>(i);
        return {(*all)[u / (n * n)], (*all)[(u / n) % n], (*all)[u % n]};
      }
      Rng rng(Rng::mix(Rng::mix(cfg.seed, law_idx), static_cast<std::uint64_t>(i)));
      return detail::law_tuple(m, rng);
    };

    std::int64_t total = all ? static_cast<std::int64_t>(all->size() * all->size() * all->size())
                             : static_cast<std::int64_t>(cfg.cases);

    std::int64_t fail = kern::first_fail(total, [&](std::int64_t i) {
      try {
        auto t = tuple_for(i);
        return check(t[0], t[1], t[2]);
      } catch (...) {
        return false;  // re-examined serially below
      }
    });

    if (fail < 0) {
      r.cases = static_cast<std::uint64_t>(total);
    } else {
      r.cases = static_cast<std::uint64_t>(fail) + 1;
      try {
        auto t = tuple_for(fail);
        if (check(t[0], t[1], t[2])) {
          // the failure seen in the loop was an exception, not a verdict
          r.diagnostic = "case evaluation threw at index " + std::to_string(fail);
        } else {
          t = detail::shrink_tuple(m, check, std::move(t));
          r.passed = false;
          nlohmann::json cx;
          cx["x"] = m.to_json(t[0]);
          cx["y"] = m.to_json(t[1]);
          cx["z"] = m.to_json(t[2]);
          r.counterexample = cx;
        }
      } catch (const std::exception& e) {
        r.diagnostic = std::string("generator failure at case ") + std::to_string(fail) +
                       ": " + e.what();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace utp
