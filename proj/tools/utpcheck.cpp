// utpcheck: enumerative checker for trace-algebra laws and the theory of
// reactive processes over finite universes, with a small predicate DSL.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "utp/errors.hpp"
#include "utp/parser.hpp"
#include "utp/suites.hpp"

namespace {

struct CommonOpts {
  std::string config_file;
  std::string model;
  std::string events;
  std::optional<std::size_t> bound;
  std::optional<std::uint64_t> cases;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string grid_step, grid_bound;
  bool exhaustive = false;
  bool micro = false;
  bool json_out = false;
  bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_file, "JSON config file");
  cmd->add_option("--model", o.model, "trace model: seq, rat or timed");
  cmd->add_option("--events", o.events, "comma-separated event set");
  cmd->add_option("--bound", o.bound, "sequence length bound");
  cmd->add_option("--grid-step", o.grid_step, "rational grid step, e.g. 1/4");
  cmd->add_option("--grid-bound", o.grid_bound, "rational grid bound");
  cmd->add_option("--cases", o.cases, "randomized cases per law");
  cmd->add_option("--samples", o.samples, "sampled instances per theorem");
  cmd->add_option("--seed", o.seed, "seed for randomized runs");
  cmd->add_flag("--exhaustive", o.exhaustive, "exhaustive law checking");
  cmd->add_flag("--micro", o.micro, "include the exhaustive micro tier");
  cmd->add_flag("--json", o.json_out, "emit the JSON report");
  cmd->add_flag("--serial", o.serial, "run the serial reference kernels");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

utp::SuiteConfig make_config(const CommonOpts& o) {
  utp::SuiteConfig c;
  if (!o.config_file.empty()) c = utp::load_config_file(o.config_file);
  if (!o.model.empty()) c.model = o.model;
  if (!o.events.empty()) c.events = split_commas(o.events);
  if (o.bound) c.bound = *o.bound;
  if (!o.grid_step.empty()) c.grid_step = utp::Rational::parse(o.grid_step);
  if (!o.grid_bound.empty()) c.grid_bound = utp::Rational::parse(o.grid_bound);
  if (o.cases) c.cases = *o.cases;
  if (o.samples) c.samples = *o.samples;
  if (o.seed) c.seed = *o.seed;
  if (o.exhaustive) c.exhaustive = true;
  if (o.micro) c.micro = true;
  utp::kern::config().parallel = !o.serial;
  return c;
}

void render_human(const nlohmann::json& report) {
  std::cout << report["command"].get<std::string>() << " report\n";
  for (const auto& r : report["reports"]) {
    const std::string name = r.contains("law") ? r["law"].get<std::string>()
                                                : r["theorem"].get<std::string>();
    const bool ok = r.contains("passed") ? r["passed"].get<bool>()
                                         : r["verified"].get<bool>();
    std::cout << "  " << name;
    for (std::size_t i = name.size(); i < 34; ++i) std::cout << ' ';
    std::cout << r["cases"].get<std::uint64_t>() << " cases  "
              << (ok ? "pass" : "FAIL") << "\n";
    if (r.contains("counterexample"))
      std::cout << "    counterexample: " << r["counterexample"].dump() << "\n";
    if (r.contains("diagnostic"))
      std::cout << "    diagnostic: " << r["diagnostic"].get<std::string>() << "\n";
    if (r.contains("note"))
      std::cout << "    note: " << r["note"].get<std::string>() << "\n";
  }
  std::cout << (report["all_passed"].get<bool>() ? "all checks passed"
                                                 : "SOME CHECKS FAILED")
            << "\n";
}

int emit(const nlohmann::json& report, bool json_out) {
  if (json_out) {
    std::cout << report.dump(2) << "\n";
  } else {
    render_human(report);
  }
  return utp::suite_passed(report) ? 0 : 1;
}

nlohmann::json rows_json(const utp::Predicate& p) {
  nlohmann::json rows = nlohmann::json::array();
  p.rows().for_each_set(
      [&](std::uint64_t r) { rows.push_back(p.alphabet()->binding_json(r)); });
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-universe checker for trace algebras and reactive processes"};
  app.require_subcommand(1);

  CommonOpts law_o, theory_o, quant_o, par_o, apply_o, refines_o, eval_o;

  CLI::App* law = app.add_subcommand("lawsuite", "trace-algebra law suite");
  add_common(law, law_o);

  CLI::App* theory = app.add_subcommand("theory", "reactive healthiness theorems");
  add_common(theory, theory_o);

  CLI::App* quant = app.add_subcommand("quantale", "quantale laws Q1-Q3");
  add_common(quant, quant_o);

  CLI::App* par = app.add_subcommand("parallel", "parallel-by-merge checks");
  add_common(par, par_o);

  std::string apply_h, apply_formula;
  bool apply_dump = false;
  CLI::App* apply = app.add_subcommand("apply", "apply a healthiness condition");
  apply->add_option("condition", apply_h, "one of R1, R2c, R3, R, R2m, Rm")->required();
  apply->add_option("formula", apply_formula, "predicate formula")->required();
  apply->add_flag("--dump", apply_dump, "list every binding");
  add_common(apply, apply_o);

  std::string ref_f, ref_g;
  CLI::App* refines_cmd = app.add_subcommand("refines", "does the second refine the first?");
  refines_cmd->add_option("weaker", ref_f, "candidate specification")->required();
  refines_cmd->add_option("stronger", ref_g, "candidate implementation")->required();
  add_common(refines_cmd, refines_o);

  std::string eval_formula;
  bool eval_dump = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula to its rows");
  eval_cmd->add_option("formula", eval_formula, "predicate formula")->required();
  eval_cmd->add_flag("--dump", eval_dump, "list every binding");
  add_common(eval_cmd, eval_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (law->parsed()) return emit(utp::run_lawsuite(make_config(law_o)), law_o.json_out);
    if (theory->parsed())
      return emit(utp::run_theory(make_config(theory_o)), theory_o.json_out);
    if (quant->parsed())
      return emit(utp::run_quantale(make_config(quant_o)), quant_o.json_out);
    if (par->parsed()) return emit(utp::run_parallel(make_config(par_o)), par_o.json_out);

    if (apply->parsed()) {
      utp::SuiteConfig c = make_config(apply_o);
      utp::dsl::Universe u = utp::build_universe(c);
      std::string text = apply_h + " (" + apply_formula + ")";
      utp::dsl::FormulaPtr f = utp::dsl::parse(text);
      utp::Predicate p = utp::dsl::eval(f, u);
      nlohmann::json j;
      j["schema"] = 1;
      j["command"] = "apply";
      j["formula"] = utp::dsl::pretty(f);
      j["rows"] = p.count();
      if (apply_dump || apply_o.json_out) j["bindings"] = rows_json(p);
      if (apply_o.json_out) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << utp::dsl::pretty(f) << "\n" << p.count() << " rows\n";
        if (apply_dump)
          p.rows().for_each_set([&](std::uint64_t r) {
            std::cout << "  " << p.alphabet()->binding_str(r) << "\n";
          });
      }
      return 0;
    }

    if (refines_cmd->parsed()) {
      utp::SuiteConfig c = make_config(refines_o);
      utp::dsl::Universe u = utp::build_universe(c);
      utp::Predicate p = utp::dsl::eval(utp::dsl::parse(ref_f), u);
      utp::Predicate q = utp::dsl::eval(utp::dsl::parse(ref_g), u);
      bool ok = utp::refines(p, q);
      if (refines_o.json_out) {
        nlohmann::json j;
        j["schema"] = 1;
        j["command"] = "refines";
        j["refines"] = ok;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (ok ? "true" : "false") << "\n";
      }
      return ok ? 0 : 1;
    }

    if (eval_cmd->parsed()) {
      utp::SuiteConfig c = make_config(eval_o);
      utp::dsl::Universe u = utp::build_universe(c);
      utp::dsl::FormulaPtr f = utp::dsl::parse(eval_formula);
      utp::Predicate p = utp::dsl::eval(f, u);
      nlohmann::json j;
      j["schema"] = 1;
      j["command"] = "eval";
      j["formula"] = utp::dsl::pretty(f);
      j["rows"] = p.count();
      j["universe"] = p.alphabet()->size();
      if (eval_dump || eval_o.json_out) j["bindings"] = rows_json(p);
      if (eval_o.json_out) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << p.count() << " of " << p.alphabet()->size() << " bindings\n";
        if (eval_dump)
          p.rows().for_each_set([&](std::uint64_t r) {
            std::cout << "  " << p.alphabet()->binding_str(r) << "\n";
          });
      }
      return 0;
    }
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["schema"] = 1;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  return 2;
}
