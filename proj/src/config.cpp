#include "utp/config.hpp"

#include <fstream>

#include "utp/errors.hpp"

namespace utp {

namespace {

std::vector<TimedTrace> default_timed_seed() {
  Poly t({Rational(0), Rational(1)});
  Poly two_t({Rational(0), Rational(2)});
  return {TimedTrace::single({"x"}, Rational(1), {t}),
          TimedTrace::single({"x"}, Rational(1, 2), {two_t})};
}

}  // namespace

SuiteConfig config_from_json(const nlohmann::json& j) {
  SuiteConfig c;
  if (j.contains("schema") && j["schema"] != 1)
    throw ConfigError("unsupported config schema");
  if (j.contains("model")) c.model = j["model"].get<std::string>();
  if (c.model != "seq" && c.model != "rat" && c.model != "timed")
    throw ConfigError("model must be seq, rat or timed");
  if (j.contains("events")) c.events = j["events"].get<std::vector<std::string>>();
  if (j.contains("trace_bound")) c.bound = j["trace_bound"].get<std::size_t>();
  else if (j.contains("bound")) c.bound = j["bound"].get<std::size_t>();
  if (j.contains("grid_step")) c.grid_step = Rational::parse(j["grid_step"].get<std::string>());
  if (j.contains("grid_bound"))
    c.grid_bound = Rational::parse(j["grid_bound"].get<std::string>());
  if (j.contains("timed_seed")) {
    c.timed_seed.clear();
    for (const auto& t : j["timed_seed"]) c.timed_seed.push_back(tt_from_json(t));
  }
  if (j.contains("vars")) {
    c.vars.clear();
    for (const auto& [name, dom] : j["vars"].items()) {
      if (dom.is_string() && dom.get<std::string>() == "bool") {
        c.vars.emplace_back(name, std::vector<std::string>{});
      } else if (dom.is_array()) {
        c.vars.emplace_back(name, dom.get<std::vector<std::string>>());
      } else {
        throw ConfigError("variable domain must be \"bool\" or a value list");
      }
    }
  }
  if (j.contains("mode")) {
    std::string mode = j["mode"].get<std::string>();
    if (mode == "exhaustive") c.exhaustive = true;
    else if (mode == "randomized") c.exhaustive = false;
    else throw ConfigError("mode must be exhaustive or randomized");
  }
  if (j.contains("cases")) c.cases = j["cases"].get<std::uint64_t>();
  if (j.contains("samples")) c.samples = j["samples"].get<std::uint64_t>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("micro")) c.micro = j["micro"].get<bool>();
  if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
  return c;
}

nlohmann::json config_to_json(const SuiteConfig& c) {
  nlohmann::json j;
  j["schema"] = 1;
  j["model"] = c.model;
  j["events"] = c.events;
  j["trace_bound"] = c.bound;
  j["grid_step"] = c.grid_step.str();
  j["grid_bound"] = c.grid_bound.str();
  if (!c.timed_seed.empty()) {
    nlohmann::json seed = nlohmann::json::array();
    for (const auto& t : c.timed_seed) seed.push_back(tt_to_json(t));
    j["timed_seed"] = seed;
  }
  nlohmann::json vars;
  for (const auto& [name, dom] : c.vars)
    vars[name] = dom.empty() ? nlohmann::json("bool") : nlohmann::json(dom);
  j["vars"] = vars;
  j["mode"] = c.exhaustive ? "exhaustive" : "randomized";
  j["cases"] = c.cases;
  j["samples"] = c.samples;
  if (c.seed) j["seed"] = *c.seed;
  j["micro"] = c.micro;
  j["suites"] = c.suites;
  return j;
}

SuiteConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("malformed config json in " + path + ": " + e.what());
  }
  return config_from_json(j);
}

TraceTablePtr build_trace_table(const SuiteConfig& c) {
  if (c.model == "seq") return TraceTable::seq(c.events, c.bound);
  if (c.model == "rat") return TraceTable::rat_grid(c.grid_step, c.grid_bound);
  return TraceTable::timed(c.timed_seed.empty() ? default_timed_seed() : c.timed_seed);
}

dsl::Universe build_universe(const SuiteConfig& c) {
  std::vector<std::pair<std::string, DomainPtr>> prog_vars;
  for (const auto& [name, dom] : c.vars) {
    prog_vars.emplace_back(name, dom.empty() ? Domain::boolean() : Domain::enums(dom));
  }
  return dsl::make_universe(build_trace_table(c), prog_vars);
}

LawConfig law_config(const SuiteConfig& c) {
  LawConfig lc;
  if (c.exhaustive) {
    lc.mode = LawConfig::Mode::Exhaustive;
    return lc;
  }
  if (!c.seed)
    throw ConfigError("randomized mode requires an explicit seed");
  lc.mode = LawConfig::Mode::Randomized;
  lc.cases = c.cases;
  lc.seed = *c.seed;
  return lc;
}

}  // namespace utp
