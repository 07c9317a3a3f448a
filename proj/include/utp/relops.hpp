#pragma once

#include <functional>
#include <span>
#include <vector>

#include "utp/predicate.hpp"

namespace utp {

// ---- propositional connectives (extensional set algebra) ----
Predicate conj(const Predicate& p, const Predicate& q);
Predicate disj(const Predicate& p, const Predicate& q);
Predicate neg(const Predicate& p);
Predicate implies(const Predicate& p, const Predicate& q);

// (b /\ p) \/ (~b /\ q); b may constrain unprimed variables only
Predicate cond(const Predicate& p, const Predicate& b, const Predicate& q);

// relational composition: after-values of p meet before-values of q.
// Requires a homogeneous alphabet (every before variable twinned).
Predicate seq_comp(const Predicate& p, const Predicate& q);

// value of an expression at a binding; must return an index inside the
// target variable's domain (checked, DomainViolation otherwise)
using ValueFn = std::function<std::uint32_t(const BindingView&)>;

// x' = e(before state), every other primed variable unchanged
Predicate assign(const AlphabetPtr& a, const std::string& var, const ValueFn& e);

// the identity relation: every primed variable equals its twin; extras,
// when present, are unconstrained
Predicate skip(const AlphabetPtr& a);

// rows where some value of var is in p (projection then cylindrification)
Predicate exists(const std::string& var, const Predicate& p);

struct Substitution {
  std::size_t var_id;
  ValueFn value;
};

// simultaneous substitution: b belongs to the result iff b patched with
// every substituted value (all computed from the original b) belongs to p
Predicate substitute(const Predicate& p, const std::vector<Substitution>& subst);

// p is refined by q: every behaviour of q is one of p
bool refines(const Predicate& p, const Predicate& q);

// greatest lower / least upper bounds of the refinement order. The
// infimum of no predicates is the weakest predicate (full universe), the
// supremum of none is the strongest (empty).
Predicate lattice_inf(const AlphabetPtr& a, std::span<const Predicate> ps);
Predicate lattice_sup(const AlphabetPtr& a, std::span<const Predicate> ps);

using PredicateTransformer = std::function<Predicate(const Predicate&)>;

// Weakest / strongest fixed points by Kleene iteration from the lattice
// bottom (true) / top (false). Monotonicity is the caller's obligation;
// it is spot-checked on the supplied refinement pairs and the iteration
// itself detects non-monotone steps and oscillation.
Predicate lfp(const AlphabetPtr& a, const PredicateTransformer& f,
              std::span<const std::pair<Predicate, Predicate>> spot_checks = {});
Predicate gfp(const AlphabetPtr& a, const PredicateTransformer& f,
              std::span<const std::pair<Predicate, Predicate>> spot_checks = {});

}  // namespace utp
