#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "utp/config.hpp"
#include "utp/eval.hpp"
#include "utp/parser.hpp"
#include "utp/sampling.hpp"

using namespace utp;
using namespace utp::dsl;

namespace {

Universe desk() {
  SuiteConfig c;  // seq, events {a,b}, bound 2, one boolean program var
  return build_universe(c);
}

FormulaPtr roundtrip(const std::string& text) {
  FormulaPtr f = parse(text);
  FormulaPtr g = parse(pretty(f));
  REQUIRE(equal(f, g));
  return f;
}

}  // namespace

TEST_CASE("parsing the healthiness application example") {
  FormulaPtr f = parse("R3 (tr' = tr ^ <a> /\\ v' = v)");
  REQUIRE(f->kind == Formula::Kind::Health);
  CHECK(f->h == Formula::HKind::R3);
  REQUIRE(f->a->kind == Formula::Kind::And);
  CHECK(f->a->a->kind == Formula::Kind::Cmp);
  CHECK(pretty(f) == "R3 (tr' = tr ^ <a> /\\ v' = v)");
}

TEST_CASE("pretty-printing round trips") {
  for (const char* text : {
           "true",
           "P' = P'",  // a primed variable comparison
           "tr' = tr ^ <a>",
           "tr' = tr ^ <a,b> /\\ v' = v",
           "~(wait = true) => tr <= tr'",
           "(tr' = tr ; tr' = tr ^ <b>) \\/ false",
           "II ; II ; II",
           "exists v . v' = v \\/ wait' = wait",
           "R (tr' = tr ^ <a>)",
           "R1 R2c R3 true",
           "(true <| wait = true |> false)",
           "(tr' = tr)[eps / tr]",
           "(tr' = tr ^ <a>)[eps, tr' - tr / tr, tr']",
           "true || 0.tr = tr || true",
           "0.wait = false /\\ 1.wait = false",
           "tr' - tr = <a> ^ (<b> - <b>)",
           "Rm (0.tr - tr = eps)",
       }) {
    CAPTURE(text);
    roundtrip(text);
  }
}

TEST_CASE("parse errors carry a location and expectation") {
  try {
    parse("tr' = tr ^");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col >= 10);
    CHECK(e.expected.find("term") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("tr' ="), ParseError);
  CHECK_THROWS_AS(parse("(tr' = tr"), ParseError);
  CHECK_THROWS_AS(parse("tr' = tr )"), ParseError);
  CHECK_THROWS_AS(parse("P [x / ]"), ParseError);
  CHECK_THROWS_AS(parse("<a,>"), ParseError);
  CHECK_THROWS_AS(parse("P <| wait = true |>"), ParseError);
}

TEST_CASE("evaluating constants and the trace extension") {
  Universe u = desk();
  CHECK(dsl::eval(parse("true"), u) == Predicate::top(u.reactive));
  CHECK(dsl::eval(parse("false"), u).empty());

  // tr' = tr ^ <a>: exactly the rows whose extension is <a>, oracle-checked
  Predicate got = dsl::eval(parse("tr' = tr ^ <a>"), u);
  ReactiveView rv = ReactiveView::of(u.reactive);
  const TraceTable* tt = rv.table;
  Predicate expected = Predicate::of_bindings(u.reactive, [&](const BindingView& b) {
    if (!tt->prefix(b[rv.tr], b[rv.trp])) return false;
    const EventSeq* d = tt->seq_value(tt->subtract(b[rv.trp], b[rv.tr]));
    return *d == EventSeq{"a"};
  });
  CHECK(got == expected);
  REQUIRE_FALSE(got.empty());
}

TEST_CASE("eval is compositional over the connectives") {
  Universe u = desk();
  const char* atoms[] = {"tr' = tr", "tr <= tr'", "wait' = false", "v' = v",
                         "tr' = tr ^ <b>"};
  for (const char* pa : atoms) {
    for (const char* qa : atoms) {
      Predicate p = dsl::eval(parse(pa), u);
      Predicate q = dsl::eval(parse(qa), u);
      CHECK(dsl::eval(parse(std::string(pa) + " /\\ " + qa), u) == conj(p, q));
      CHECK(dsl::eval(parse(std::string(pa) + " \\/ " + qa), u) == disj(p, q));
      CHECK(dsl::eval(parse(std::string(pa) + " => " + qa), u) == implies(p, q));
      CHECK(dsl::eval(parse(std::string("~") + "(" + pa + ")"), u) == neg(p));
    }
  }
}

TEST_CASE("definitional expansion of R") {
  Universe u = desk();
  CHECK(dsl::eval(parse("R (true)"), u) == dsl::eval(parse("R3 (R2c (R1 (true)))"), u));
  CHECK(dsl::eval(parse("R (tr' = tr ^ <a>)"), u) ==
        R(dsl::eval(parse("tr' = tr ^ <a>"), u)));
}

TEST_CASE("substitution syntax matches the engine's substitution") {
  Universe u = desk();
  Predicate direct = dsl::eval(parse("(tr' = tr ^ <a>)[eps, tr' - tr / tr, tr']"), u);
  Predicate via = R2c(dsl::eval(parse("tr' = tr ^ <a>"), u));
  // R2c of the fixed point equals it; the substituted form agrees on the
  // prefix branch, which is the whole predicate here
  CHECK(via == dsl::eval(parse("tr' = tr ^ <a>"), u));
  REQUIRE_FALSE(direct.empty());

  // identity substitution
  Predicate p = dsl::eval(parse("tr' = tr ^ <b> /\\ v' = v"), u);
  CHECK(dsl::eval(parse("(tr' = tr ^ <b> /\\ v' = v)[tr / tr]"), u) == p);

  // deleting the history pins the whole trace: (tr' = tr ^ <a>)[<>/tr]
  // leaves exactly the rows with tr' = <a> and tr unconstrained
  CHECK(dsl::eval(parse("(tr' = tr ^ <a>)[<> / tr]"), u) ==
        dsl::eval(parse("tr' = <a>"), u));
}

TEST_CASE("conditional, composition and quantifier surface the engine ops") {
  Universe u = desk();
  Predicate p = dsl::eval(parse("tr' = tr"), u);
  CHECK(dsl::eval(parse("tr' = tr <| true = true |> false"), u) == p);
  CHECK(dsl::eval(parse("II ; tr' = tr"), u) == p);
  CHECK(dsl::eval(parse("exists v . v' = v"), u) == Predicate::top(u.reactive));
}

TEST_CASE("parallel composition in the DSL") {
  Universe u = desk();
  // both processes extend by one event, merged by an interleaving merge
  Predicate m = make_interleave_merge(u.merge);
  Predicate p = dsl::eval(parse("tr' = tr ^ <a> /\\ wait' = false /\\ v' = v"), u);
  Predicate q = dsl::eval(parse("tr' = tr ^ <b> /\\ wait' = false /\\ v' = v"), u);
  Predicate direct = par_by_merge(p, m, q);

  // the merge predicate itself is expressible in the DSL
  FormulaPtr mf = parse(
      "(II <| wait = true |> "
      "((tr' - tr = (0.tr - tr) ^ (1.tr - tr) \\/ tr' - tr = (1.tr - tr) ^ (0.tr - tr)) "
      "/\\ tr <= tr' /\\ wait' = false /\\ v' = 0.v))");
  Predicate m_dsl = dsl::eval_over(mf, u, u.merge);

  std::string par_text =
      "(tr' = tr ^ <a> /\\ wait' = false /\\ v' = v) || (" + pretty(mf) +
      ") || (tr' = tr ^ <b> /\\ wait' = false /\\ v' = v)";
  Predicate via_dsl = dsl::eval(parse(par_text), u);

  // on single-event contributions the two-concatenation merge coincides
  // with the interleaving merge, and so do the compositions
  Predicate diff = conj(via_dsl, neg(direct));
  CHECK(via_dsl == direct);
  (void)m_dsl;
}

TEST_CASE("scope and domain errors") {
  Universe u = desk();
  CHECK_THROWS_AS(dsl::eval(parse("zz' = tr"), u), ScopeError);
  CHECK_THROWS_AS(dsl::eval(parse("tr' = tr ^ <a,b,a>"), u), DomainViolation);
  CHECK_THROWS_AS(dsl::eval(parse("3/2 = tr"), u), ScopeError);
  CHECK_THROWS_AS(dsl::eval(parse("wait = tr"), u), ScopeError);
  CHECK_THROWS_AS(dsl::eval(parse("wait <= wait'"), u), ScopeError);
  // indexed variables force the merge alphabet
  Predicate pm = dsl::eval(parse("0.tr = tr"), u);
  CHECK(pm.alphabet()->same(*u.merge));
}

TEST_CASE("rational and timed universes evaluate literals") {
  SuiteConfig rc;
  rc.model = "rat";
  Universe ru = build_universe(rc);
  Predicate half = dsl::eval(parse("tr' - tr = 1/2"), ru);
  REQUIRE_FALSE(half.empty());
  CHECK_THROWS_AS(dsl::eval(parse("tr' = 7"), ru), DomainViolation);

  SuiteConfig tc;
  tc.model = "timed";
  Universe tu = build_universe(tc);
  Predicate at = dsl::eval(
      parse("tr' - tr = tt {\"vars\":[\"x\"],\"segments\":[{\"duration\":\"1\","
            "\"valuation\":{\"x\":[\"0\",\"1\"]}}]}"),
      tu);
  REQUIRE_FALSE(at.empty());
}

TEST_CASE("configs round trip and validate") {
  SuiteConfig c;
  c.seed = 42;
  SuiteConfig back = config_from_json(config_to_json(c));
  CHECK(config_to_json(back) == config_to_json(c));
  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"model", "weird"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"mode", "sometimes"}}), ConfigError);
  // randomized law config requires a seed
  SuiteConfig noseed;
  noseed.seed.reset();
  CHECK_THROWS_AS(law_config(noseed), ConfigError);
}
