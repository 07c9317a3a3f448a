#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "utp/relops.hpp"

namespace utp {

// Resolved variable ids of a reactive alphabet: wait, wait' : Bool and
// tr, tr' over one bounded trace universe, plus any program variables.
struct ReactiveView {
  AlphabetPtr alpha;
  std::size_t tr, trp, wait, waitp;
  const TraceTable* table;

  // throws NotReactiveAlphabet unless the shape is present
  static ReactiveView of(const AlphabetPtr& a);
};

// builds the alphabet {tr, wait, program vars} + primed twins
AlphabetPtr reactive_alphabet(const TraceTablePtr& traces,
                              const std::vector<std::pair<std::string, DomainPtr>>& prog_vars);

// the atom tr <= tr' over a reactive (or merge) alphabet
Predicate trace_monotone_atom(const AlphabetPtr& a);

// R1: keep only behaviours whose trace grew.
Predicate R1(const Predicate& p);

// R2c: a process may constrain only its own trace extension. On bindings
// with tr <= tr' the history is deleted by the substitution
// [empty, tr' - tr / tr, tr']; elsewhere the predicate is left alone.
Predicate R2c(const Predicate& p);

// R3: while the predecessor waits, behave as the identity relation.
Predicate R3(const Predicate& p);

// R = R3 . R2c . R1
Predicate R(const Predicate& p);

bool is_healthy(const PredicateTransformer& h, const Predicate& p);

// bounds inside the lattice of R-healthy predicates. Both are exact:
// healthy infima are R-images of relational infima, and with R idempotent
// and monotone the same holds for suprema.
Predicate theory_inf(std::span<const Predicate> ps);   // nonempty, members healthy
Predicate theory_sup(std::span<const Predicate> ps);   // members healthy

// the one-witness normal form (exists t . P[empty,t/tr,tr'] /\ tr' = tr^t),
// built by scanning trace extensions; extensionally equal to R1(R2c(P))
Predicate contribution_form(const Predicate& p);

struct TheoryReport {
  std::string theorem;
  bool verified = false;
  std::optional<nlohmann::json> counterexample;
  std::optional<std::string> note;  // e.g. precondition failures
};

nlohmann::json theory_report_json(const TheoryReport& r);

// extensional equality packaged as a report; on mismatch the first
// differing binding is dumped
TheoryReport equal_report(const std::string& name, const Predicate& lhs, const Predicate& rhs,
                          const std::string& description = "");

// seq_comp(P,Q) against the two-witness decomposition
// exists t1 t2 . (P[empty,t1/tr,tr'] ; Q[empty,t2/tr,tr']) /\ tr' = tr^t1^t2,
// for P, Q that are R1-R2c healthy (precondition failures are reported,
// never silently passed)
TheoryReport check_seq_contribution(const Predicate& p, const Predicate& q);

// closure of composition: R1(R2c(P;Q)) = P;Q and R(P;Q) = P;Q
std::vector<TheoryReport> check_closures(const Predicate& p, const Predicate& q);

// weak unital quantale laws over the healthy carrier:
//   Q1: P ; inf_R(A) = inf_R { P ; X | X in A }
//   Q2: inf_R(A) ; Q = inf_R { X ; Q | X in A }
//   Q3: P ; II = II ; P = P   (with the plain relational identity)
// A must be nonempty (EmptySet otherwise).
std::vector<TheoryReport> check_quantale(std::span<const Predicate> a, const Predicate& p,
                                         const Predicate& q);

}  // namespace utp
