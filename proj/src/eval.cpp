#include "utp/eval.hpp"

#include <functional>

namespace utp::dsl {

namespace {

constexpr std::int64_t kUndefined = -1;

// a compiled expression: its domain plus a per-binding value; kUndefined
// marks values that left the universe (e.g. a concatenation past the bound)
struct CompiledExpr {
  DomainPtr dom;
  std::function<std::int64_t(const BindingView&)> get;
};

DomainPtr trace_domain(const AlphabetPtr& alpha) {
  int tr = alpha->find("tr");
  if (tr < 0) throw ScopeError("trace literal used over an alphabet without tr");
  return alpha->var(static_cast<std::size_t>(tr)).dom;
}

CompiledExpr compile(const ExprPtr& e, const AlphabetPtr& alpha) {
  switch (e->kind) {
    case Expr::Kind::Var: {
      int id = alpha->find(e->name);
      if (id < 0) throw ScopeError("unknown variable: " + e->name);
      auto sid = static_cast<std::size_t>(id);
      return {alpha->var(sid).dom,
              [sid](const BindingView& b) { return static_cast<std::int64_t>(b[sid]); }};
    }
    case Expr::Kind::Eps: {
      DomainPtr d = trace_domain(alpha);
      std::int64_t idx = d->table()->empty_index();
      return {d, [idx](const BindingView&) { return idx; }};
    }
    case Expr::Kind::BoolLit: {
      std::int64_t v = e->bval ? 1 : 0;
      return {Domain::boolean(), [v](const BindingView&) { return v; }};
    }
    case Expr::Kind::SeqLit:
    case Expr::Kind::RatLit:
    case Expr::Kind::TimedLit: {
      DomainPtr d = trace_domain(alpha);
      const TraceTable* tt = d->table();
      nlohmann::json lit;
      if (e->kind == Expr::Kind::SeqLit) {
        if (tt->model() != TraceTable::Model::Seq)
          throw ScopeError("sequence literal in a non-sequence universe");
        lit = nlohmann::json(e->seq);
      } else if (e->kind == Expr::Kind::RatLit) {
        if (tt->model() != TraceTable::Model::Rat)
          throw ScopeError("rational literal in a non-rational universe");
        lit = nlohmann::json(e->rat.str());
      } else {
        if (tt->model() != TraceTable::Model::Timed)
          throw ScopeError("timed-trace literal in a non-timed universe");
        lit = tt_to_json(e->timed);
      }
      auto idx = d->find(lit);
      if (!idx)
        throw DomainViolation("trace literal outside the bounded universe: " + lit.dump());
      std::int64_t v = *idx;
      return {d, [v](const BindingView&) { return v; }};
    }
    case Expr::Kind::Concat:
    case Expr::Kind::Minus: {
      CompiledExpr l = compile(e->lhs, alpha);
      CompiledExpr r = compile(e->rhs, alpha);
      if (l.dom->kind() != Domain::Kind::Trace || !l.dom->same(*r.dom))
        throw ScopeError("trace operator applied to non-trace operands");
      const TraceTable* tt = l.dom->table();
      if (e->kind == Expr::Kind::Concat) {
        return {l.dom, [lf = l.get, rf = r.get, tt](const BindingView& b) -> std::int64_t {
                  std::int64_t x = lf(b), y = rf(b);
                  if (x < 0 || y < 0) return kUndefined;
                  return tt->concat(static_cast<std::uint32_t>(x),
                                    static_cast<std::uint32_t>(y));
                }};
      }
      return {l.dom, [lf = l.get, rf = r.get, tt](const BindingView& b) -> std::int64_t {
                std::int64_t x = lf(b), y = rf(b);
                if (x < 0 || y < 0) return kUndefined;
                return tt->subtract(static_cast<std::uint32_t>(x),
                                    static_cast<std::uint32_t>(y));
              }};
    }
  }
  throw ScopeError("malformed expression");
}

Predicate eval_cmp(const Formula& f, const AlphabetPtr& alpha) {
  CompiledExpr l = compile(f.e1, alpha);
  CompiledExpr r = compile(f.e2, alpha);
  if (!l.dom->same(*r.dom))
    throw ScopeError("comparison of values from different domains");
  if (f.cmp_op == Formula::CmpOp::Le) {
    if (l.dom->kind() != Domain::Kind::Trace)
      throw ScopeError("<= compares traces only");
    const TraceTable* tt = l.dom->table();
    return Predicate::of_bindings(alpha, [lf = l.get, rf = r.get, tt](const BindingView& b) {
      std::int64_t x = lf(b), y = rf(b);
      if (x < 0 || y < 0) return false;
      return tt->prefix(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
    });
  }
  return Predicate::of_bindings(alpha, [lf = l.get, rf = r.get](const BindingView& b) {
    std::int64_t x = lf(b), y = rf(b);
    return x >= 0 && x == y;
  });
}

}  // namespace

Universe make_universe(const TraceTablePtr& traces,
                       const std::vector<std::pair<std::string, DomainPtr>>& prog_vars) {
  Universe u;
  u.traces = traces;
  u.reactive = reactive_alphabet(traces, prog_vars);
  u.merge = merge_alphabet(u.reactive);
  return u;
}

Predicate eval_over(const FormulaPtr& f, const Universe& u, const AlphabetPtr& alpha) {
  switch (f->kind) {
    case Formula::Kind::True:
      return Predicate::top(alpha);
    case Formula::Kind::False:
      return Predicate::bottom(alpha);
    case Formula::Kind::Skip:
      return skip(alpha);
    case Formula::Kind::Cmp:
      return eval_cmp(*f, alpha);
    case Formula::Kind::Not:
      return neg(eval_over(f->a, u, alpha));
    case Formula::Kind::And:
      return conj(eval_over(f->a, u, alpha), eval_over(f->b, u, alpha));
    case Formula::Kind::Or:
      return disj(eval_over(f->a, u, alpha), eval_over(f->b, u, alpha));
    case Formula::Kind::Imp:
      return implies(eval_over(f->a, u, alpha), eval_over(f->b, u, alpha));
    case Formula::Kind::Cond:
      return cond(eval_over(f->a, u, alpha), eval_over(f->b, u, alpha),
                  eval_over(f->c, u, alpha));
    case Formula::Kind::Exists: {
      if (alpha->find(f->var) < 0) throw ScopeError("unknown variable: " + f->var);
      return exists(f->var, eval_over(f->a, u, alpha));
    }
    case Formula::Kind::Subst: {
      if (f->subst_exprs.size() != f->subst_vars.size())
        throw ScopeError("substitution lists have different lengths");
      Predicate body = eval_over(f->a, u, alpha);
      std::vector<Substitution> subst;
      for (std::size_t i = 0; i < f->subst_vars.size(); ++i) {
        int id = alpha->find(f->subst_vars[i]);
        if (id < 0) throw ScopeError("unknown variable: " + f->subst_vars[i]);
        auto sid = static_cast<std::size_t>(id);
        CompiledExpr ce = compile(f->subst_exprs[i], alpha);
        if (!ce.dom->same(*alpha->var(sid).dom))
          throw ScopeError("substitution value domain mismatch for " + f->subst_vars[i]);
        subst.push_back({sid, [g = ce.get](const BindingView& b) {
                           std::int64_t v = g(b);
                           // out-of-universe values surface as DomainViolation
                           return v < 0 ? UINT32_MAX : static_cast<std::uint32_t>(v);
                         }});
      }
      return substitute(body, subst);
    }
    case Formula::Kind::Health: {
      Predicate body = eval_over(f->a, u, alpha);
      switch (f->h) {
        case Formula::HKind::R1:
          return R1(body);
        case Formula::HKind::R2c:
          return R2c(body);
        case Formula::HKind::R3:
          return R3(body);
        case Formula::HKind::R:
          return R(body);
        case Formula::HKind::R2m:
          return R2m(body);
        case Formula::HKind::Rm:
          return Rm(body);
      }
      throw ScopeError("unknown healthiness condition");
    }
    case Formula::Kind::Seq:
      return seq_comp(eval_over(f->a, u, alpha), eval_over(f->b, u, alpha));
    case Formula::Kind::Par: {
      Predicate p = eval_over(f->a, u, u.reactive);
      Predicate m = eval_over(f->b, u, u.merge);
      Predicate q = eval_over(f->c, u, u.reactive);
      return par_by_merge(p, m, q);
    }
  }
  throw ScopeError("malformed formula");
}

Predicate eval(const FormulaPtr& f, const Universe& u) {
  return eval_over(f, u, needs_merge_alphabet(f) ? u.merge : u.reactive);
}

}  // namespace utp::dsl
