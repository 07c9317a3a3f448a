#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "utp/reactive.hpp"
#include "utp/rng.hpp"
#include "utp/sampling.hpp"

using namespace utp;

namespace {

struct Desk {
  TraceTablePtr traces = TraceTable::seq({"a", "b"}, 2);
  AlphabetPtr alpha = reactive_alphabet(traces, {{"v", Domain::boolean()}});
  ReactiveView view = ReactiveView::of(alpha);

  std::uint32_t trace_idx(const EventSeq& s) const {
    return *traces->find(nlohmann::json(s));
  }
};

Predicate healthy_sample(const Desk& d, std::uint64_t seed) {
  return R(sample_predicate(d.alpha, seed));
}

// tr' = tr ^ ext for a fixed extension, straight off the trace table
Predicate extends_by(const Desk& d, const EventSeq& ext) {
  const std::uint32_t e = d.trace_idx(ext);
  const Alphabet& al = *d.alpha;
  const ReactiveView v = d.view;
  const TraceTable* tt = d.traces.get();
  return Predicate::of_rows(d.alpha, [&al, v, tt, e](std::uint64_t r) {
    return tt->concat(al.digit(r, v.tr), e) ==
           static_cast<std::int32_t>(al.digit(r, v.trp));
  });
}

}  // namespace

TEST_CASE("reactive alphabets are validated") {
  Desk d;
  CHECK(d.alpha->size() == 784);  // 7*7 traces, 2*2 waits, 2*2 program values
  auto plain = Alphabet::relational({{"x", Domain::boolean()}});
  CHECK_THROWS_AS(R1(Predicate::top(plain)), NotReactiveAlphabet);
}

TEST_CASE("R1 keeps exactly the trace-monotone rows") {
  Desk d;
  // independent oracle: enumerate value tuples and test prefix on the
  // underlying sequences, not through the table
  Predicate expected = Predicate::of_bindings(d.alpha, [&](const BindingView& b) {
    const EventSeq& before = *d.traces->seq_value(b[d.view.tr]);
    const EventSeq& after = *d.traces->seq_value(b[d.view.trp]);
    return seq_prefix(before, after);
  });
  CHECK(R1(Predicate::top(d.alpha)) == expected);
  CHECK(R1(Predicate::bottom(d.alpha)).empty());
  for (std::uint64_t s = 0; s < 30; ++s) {
    Predicate p = sample_predicate(d.alpha, s);
    CHECK(R1(R1(p)) == R1(p));
  }
}

TEST_CASE("R2c fixes history-independent predicates") {
  Desk d;
  Predicate p = extends_by(d, {"a"});
  CHECK(R2c(p) == p);
}

TEST_CASE("R2c rejects a history-dependent predicate") {
  Desk d;
  // tr = <a> /\ tr' = <a>: on the branch where history is deleted the
  // constraint tr = <a> becomes eps = <a>, which no binding satisfies,
  // and every row of the predicate lies on that branch
  const std::uint32_t a_idx = d.trace_idx({"a"});
  Predicate p = Predicate::of_rows(d.alpha, [&al = *d.alpha, v = d.view,
                                             a_idx](std::uint64_t r) {
    return al.digit(r, v.tr) == a_idx && al.digit(r, v.trp) == a_idx;
  });
  REQUIRE_FALSE(p.empty());
  Predicate out = R2c(p);
  CHECK(out != p);
  CHECK(out.empty());
}

TEST_CASE("R2c and R1 commute") {
  Desk d;
  for (std::uint64_t s = 0; s < 30; ++s) {
    Predicate p = sample_predicate(d.alpha, s);
    CHECK(R2c(R1(p)) == R1(R2c(p)));
    CHECK(R2c(R2c(p)) == R2c(p));
  }
}

TEST_CASE("R3 behaves as the identity while waiting") {
  Desk d;
  Predicate ii = skip(d.alpha);
  CHECK(R3(ii) == ii);
  for (std::uint64_t s = 0; s < 30; ++s) {
    Predicate p = sample_predicate(d.alpha, s);
    Predicate r3 = R3(p);
    CHECK(R3(r3) == r3);
    // every waiting row of R3(P) is an identity row
    bool ok = true;
    r3.rows().for_each_set([&](std::uint64_t r) {
      if (d.alpha->digit(r, d.view.wait) == 1 && !ii.rows().test(r)) ok = false;
    });
    CHECK(ok);
  }
}

TEST_CASE("R is idempotent and monotone") {
  Desk d;
  for (std::uint64_t s = 0; s < 30; ++s) {
    Predicate p = sample_predicate(d.alpha, s);
    CHECK(R(R(p)) == R(p));
  }
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto [weaker, stronger] = sample_ordered_pair(d.alpha, s);
    REQUIRE(refines(weaker, stronger));
    CHECK(refines(R(weaker), R(stronger)));
  }
}

TEST_CASE("a trace-extending assignment is already R healthy") {
  Desk d;
  // R3(tr' = tr ^ <a> /\ v' = v /\ wait' unchanged by R3's branch)
  const std::size_t v_id = static_cast<std::size_t>(d.alpha->id_of("v"));
  const std::size_t vp_id = static_cast<std::size_t>(d.alpha->id_of("v'"));
  Predicate core = conj(extends_by(d, {"a"}),
                        Predicate::of_rows(d.alpha, [&al = *d.alpha, v_id,
                                                     vp_id](std::uint64_t r) {
                          return al.digit(r, v_id) == al.digit(r, vp_id);
                        }));
  Predicate p = R3(core);
  CHECK(R(p) == p);
}

TEST_CASE("R(P) is R1 healthy row by row") {
  Desk d;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Predicate rp = R(sample_predicate(d.alpha, s));
    bool ok = true;
    rp.rows().for_each_set([&](std::uint64_t r) {
      if (!d.traces->prefix(d.alpha->digit(r, d.view.tr), d.alpha->digit(r, d.view.trp)))
        ok = false;
    });
    CHECK(ok);
  }
}

TEST_CASE("is_healthy is extensional fixed-point membership") {
  Desk d;
  auto r1 = [](const Predicate& x) { return R1(x); };
  Predicate p = sample_predicate(d.alpha, 3);
  CHECK(is_healthy(r1, R1(p)));
  auto rr = [](const Predicate& x) { return R(x); };
  CHECK(is_healthy(rr, R(Predicate::bottom(d.alpha))));
  // a predicate with a strictly shrinking trace is not R1 healthy
  Predicate shrink = Predicate::of_bindings(d.alpha, [&](const BindingView& b) {
    return b[d.view.tr] == d.trace_idx({"a"}) && b[d.view.trp] == d.trace_idx({});
  });
  REQUIRE_FALSE(shrink.empty());
  CHECK_FALSE(is_healthy(r1, shrink));
}

TEST_CASE("healthy infima and suprema stay in the lattice") {
  Desk d;
  Predicate p = healthy_sample(d, 100);
  std::vector<Predicate> sing{p};
  CHECK(theory_inf(sing) == p);
  CHECK(theory_sup(sing) == p);

  for (std::uint64_t s = 0; s < 15; ++s) {
    std::vector<Predicate> set{healthy_sample(d, Rng::mix(200, s)),
                               healthy_sample(d, Rng::mix(300, s))};
    Predicate inf = theory_inf(set);
    Predicate sup = theory_sup(set);
    auto rr = [](const Predicate& x) { return R(x); };
    CHECK(is_healthy(rr, inf));
    CHECK(is_healthy(rr, sup));
    CHECK(refines(inf, set[0]));
    CHECK(refines(inf, set[1]));
    CHECK(refines(set[0], sup));
    CHECK(refines(set[1], sup));
    // least healthy upper bound: any healthy upper bound is above sup
    Predicate other = healthy_sample(d, Rng::mix(400, s));
    if (refines(set[0], other) && refines(set[1], other)) CHECK(refines(sup, other));
  }

  std::vector<Predicate> unhealthy{sample_predicate(d.alpha, 7)};
  if (R(unhealthy[0]) != unhealthy[0]) {
    CHECK_THROWS_AS(theory_inf(unhealthy), UnhealthyMember);
  }
  std::vector<Predicate> none;
  CHECK_THROWS_AS(theory_inf(none), EmptySet);
}

TEST_CASE("the trace-contribution form equals R1 after R2c") {
  Desk d;
  CHECK(contribution_form(Predicate::bottom(d.alpha)).empty());
  Predicate ext = extends_by(d, {"a"});
  CHECK(contribution_form(ext) == ext);
  for (std::uint64_t s = 0; s < 40; ++s) {
    Predicate p = sample_predicate(d.alpha, s);
    CHECK(contribution_form(p) == R1(R2c(p)));
  }
}

TEST_CASE("sequential composition decomposes into two contributions") {
  Desk d;
  auto r1r2c = [](const Predicate& x) { return R1(R2c(x)); };
  for (std::uint64_t s = 0; s < 8; ++s) {
    Predicate p = r1r2c(sample_predicate(d.alpha, Rng::mix(500, s)));
    Predicate q = r1r2c(sample_predicate(d.alpha, Rng::mix(600, s)));
    TheoryReport rep = check_seq_contribution(p, q);
    INFO("sample ", s);
    CHECK(rep.verified);
  }
  // identity on traces: decomposition with empty contributions
  Predicate ii = R1(R2c(skip(d.alpha)));
  CHECK(check_seq_contribution(ii, ii).verified);
  // precondition failure is reported, not judged
  Predicate bad = Predicate::of_bindings(d.alpha, [&](const BindingView& b) {
    return b[d.view.tr] == d.trace_idx({"a"});
  });
  TheoryReport rep = check_seq_contribution(bad, ii);
  CHECK_FALSE(rep.verified);
  REQUIRE(rep.note.has_value());
  CHECK(rep.note->find("precondition") != std::string::npos);
}

TEST_CASE("composition is closed under the healthiness conditions") {
  Desk d;
  for (std::uint64_t s = 0; s < 8; ++s) {
    Predicate p = healthy_sample(d, Rng::mix(700, s));
    Predicate q = healthy_sample(d, Rng::mix(800, s));
    for (const TheoryReport& rep : check_closures(p, q)) {
      INFO(rep.theorem, " sample ", s);
      CHECK(rep.verified);
    }
  }
  Predicate t = R(Predicate::top(d.alpha));
  for (const TheoryReport& rep : check_closures(t, t)) CHECK(rep.verified);
}

TEST_CASE("quantale laws on the healthy carrier") {
  Desk d;
  for (std::uint64_t s = 0; s < 6; ++s) {
    std::vector<Predicate> a;
    for (std::uint64_t i = 0; i <= s % 3; ++i)
      a.push_back(healthy_sample(d, Rng::mix(900 + i, s)));
    Predicate p = healthy_sample(d, Rng::mix(1000, s));
    Predicate q = healthy_sample(d, Rng::mix(1100, s));
    auto reports = check_quantale(a, p, q);
    REQUIRE(reports.size() == 3);
    for (const auto& rep : reports) {
      INFO(rep.theorem, " sample ", s);
      CHECK(rep.verified);
    }
  }
  std::vector<Predicate> none;
  Predicate p = healthy_sample(d, 1);
  CHECK_THROWS_AS(check_quantale(none, p, p), EmptySet);
}

TEST_CASE("theory reports serialise to the documented shape") {
  Desk d;
  TheoryReport ok = equal_report("demo", Predicate::top(d.alpha), Predicate::top(d.alpha));
  nlohmann::json j = theory_report_json(ok);
  CHECK(j["theorem"] == "demo");
  CHECK(j["verified"] == true);
  CHECK_FALSE(j.contains("counterexample"));

  TheoryReport bad =
      equal_report("demo", Predicate::top(d.alpha), Predicate::bottom(d.alpha), "sample#1");
  REQUIRE(bad.counterexample.has_value());
  nlohmann::json jb = theory_report_json(bad);
  CHECK(jb["verified"] == false);
  CHECK(jb["counterexample"].contains("binding"));
  CHECK(jb["counterexample"]["predicate"] == "sample#1");
}
