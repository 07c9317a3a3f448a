#pragma once

#include "utp/formula.hpp"
#include "utp/merge.hpp"
#include "utp/reactive.hpp"

namespace utp::dsl {

// The enumerated world a formula denotes into: one trace universe, the
// reactive alphabet over it, and the derived merge alphabet.
struct Universe {
  TraceTablePtr traces;
  AlphabetPtr reactive;
  AlphabetPtr merge;
};

Universe make_universe(const TraceTablePtr& traces,
                       const std::vector<std::pair<std::string, DomainPtr>>& prog_vars);

// Denotes f over u.reactive, or over u.merge when the formula mentions
// indexed variables or merge healthiness conditions. Scope failures raise
// ScopeError; literals outside the universe raise DomainViolation.
Predicate eval(const FormulaPtr& f, const Universe& u);

// denotation over an explicit alphabet
Predicate eval_over(const FormulaPtr& f, const Universe& u, const AlphabetPtr& alpha);

}  // namespace utp::dsl
