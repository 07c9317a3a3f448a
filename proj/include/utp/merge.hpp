#pragma once

#include <span>
#include <vector>

#include "utp/event_seq.hpp"
#include "utp/reactive.hpp"

namespace utp {

// The merge alphabet of a reactive alphabet: the same unprimed and primed
// variables plus indexed copies 0.x and 1.x of every after variable,
// through which a merge predicate reads the two composed processes'
// results. Layout: [before..., 0.copies..., 1.copies..., after...], with
// each indexed block mirroring the after block's order and domains.
AlphabetPtr merge_alphabet(const AlphabetPtr& reactive);

// resolved structure of a merge alphabet
struct MergeView {
  AlphabetPtr alpha;
  ReactiveView reactive;     // tr/tr'/wait/wait' ids within the merge alphabet
  std::size_t idx0_base;     // first variable of the 0-indexed block
  std::size_t idx1_base;     // first variable of the 1-indexed block
  std::size_t idx0_tr, idx0_wait;
  std::size_t idx1_tr, idx1_wait;

  static MergeView of(const AlphabetPtr& merge);
};

// re-houses the after values of a reactive predicate in the index-n
// copies, leaving the primed variables and the other index unconstrained
Predicate sep(const Predicate& p, int index, const AlphabetPtr& merge);

// (sep(P,0) /\ sep(Q,1) /\ copy of every before variable to its prime) ; M
// where M's unprimed variables are matched against the copied pre-state
// and its indexed variables against the separated results; the composition
// lands back on the reactive alphabet.
Predicate par_by_merge(const Predicate& p, const Predicate& m, const Predicate& q);

// history deletion for merge predicates: on tr <= tr' substitute
// [empty, tr'-tr, 0.tr-tr, 1.tr-tr / tr, tr', 0.tr, 1.tr]
Predicate R2m(const Predicate& m);

// Rm = R1 . R2m . R3 over the merge alphabet (R3's identity leaves the
// indexed copies unconstrained)
Predicate Rm(const Predicate& m);

// all order-preserving shuffles of s and t
std::vector<EventSeq> interleavings(const EventSeq& s, const EventSeq& t);

// policies the example merge is parameterised over
struct MergePolicy {
  bool state_left_bias = true;  // v' = 0.v, else v' = 1.v
  bool wait_disjunction = true; // wait' = 0.wait \/ 1.wait, else conjunction
};

// The shipped example merge over a sequence universe: the new trace
// extension tr' - tr is an interleaving of the two processes' extensions,
// wait' combines the indexed waits, program state resolves by the policy,
// all guarded by tr <= tr', tr <= 0.tr, tr <= 1.tr and wrapped in the
// merge-alphabet R3. Rm-healthy by construction (and verified in tests).
Predicate make_interleave_merge(const AlphabetPtr& merge, const MergePolicy& policy = {});

// M with the two indexed blocks exchanged
Predicate swap_indices(const Predicate& m);

// Rows whose indexed contributions are no longer than the overall trace
// extension (sequence universes, reading contributions through the
// totalised subtraction). Relative to a bounded universe, closure of the
// parallel composition needs merge witnesses that lift back inside the
// bound; a merge relating a short extension to longer indexed
// contributions only has those witnesses below the bound, so sampled
// merge predicates are drawn from this class.
Predicate contribution_dominated(const AlphabetPtr& merge);

// final closure: par_by_merge(P, M, Q) is R healthy when P, Q are R
// healthy and M is Rm healthy; precondition failures are reported
TheoryReport check_parallel_closure(const Predicate& p, const Predicate& q, const Predicate& m);

}  // namespace utp
