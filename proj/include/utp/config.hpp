#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "utp/eval.hpp"
#include "utp/laws.hpp"

namespace utp {

// One reproducible run: the trace model, universe parameters, sampling
// budget and seed, and which suites to execute. Randomized runs require an
// explicit seed.
struct SuiteConfig {
  std::string model = "seq";  // seq | rat | timed

  // sequence universes
  std::vector<std::string> events{"a", "b"};
  std::size_t bound = 2;

  // rational grid universes
  Rational grid_step{1, 4};
  Rational grid_bound{2};

  // timed universes: seed traces, closed under subtraction (empty means a
  // small built-in set of linear segments)
  std::vector<TimedTrace> timed_seed;

  // program variables of the reactive alphabet: name -> "bool" or a value list
  std::vector<std::pair<std::string, std::vector<std::string>>> vars{{"v", {}}};

  bool exhaustive = false;
  std::uint64_t cases = 10000;   // randomized law-suite cases per law
  std::uint64_t samples = 200;   // theorem samples
  std::optional<std::uint64_t> seed;
  bool micro = false;            // exhaustive micro tier in the theory suite

  std::vector<std::string> suites{"algebra", "reactive", "quantale", "parallel"};
};

SuiteConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SuiteConfig& c);
SuiteConfig load_config_file(const std::string& path);

// universe construction for the relational suites
dsl::Universe build_universe(const SuiteConfig& c);
TraceTablePtr build_trace_table(const SuiteConfig& c);

// law-suite mode; throws ConfigError when randomized without a seed
LawConfig law_config(const SuiteConfig& c);

}  // namespace utp
