#pragma once

#include <memory>
#include <string>
#include <vector>

#include "utp/event_seq.hpp"
#include "utp/rational.hpp"
#include "utp/timed_trace.hpp"

namespace utp::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// trace- or value-level terms appearing in atoms and substitutions
struct Expr {
  enum class Kind { Var, Eps, BoolLit, SeqLit, RatLit, TimedLit, Concat, Minus };
  Kind kind;
  std::string name;     // Var (includes primed x' and indexed 0.x forms)
  bool bval = false;    // BoolLit
  EventSeq seq;         // SeqLit
  Rational rat;         // RatLit
  TimedTrace timed;     // TimedLit
  ExprPtr lhs, rhs;     // Concat / Minus

  static ExprPtr var(std::string n);
  static ExprPtr eps();
  static ExprPtr boolean(bool v);
  static ExprPtr seq_lit(EventSeq s);
  static ExprPtr rat_lit(Rational r);
  static ExprPtr timed_lit(TimedTrace t);
  static ExprPtr concat(ExprPtr a, ExprPtr b);
  static ExprPtr minus(ExprPtr a, ExprPtr b);
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    True, False, Skip,
    Cmp,                  // e1 = e2  |  e1 <= e2
    Not, And, Or, Imp,
    Cond,                 // a <| b |> c
    Exists,               // exists var . a
    Subst,                // a[e1,...,en / x1,...,xn]
    Health,               // R1 a, R2c a, R3 a, R a, R2m a, Rm a
    Seq,                  // a ; b
    Par                   // a || b || c   (process, merge, process)
  };
  enum class CmpOp { Eq, Le };
  enum class HKind { R1, R2c, R3, R, R2m, Rm };

  Kind kind;
  CmpOp cmp_op = CmpOp::Eq;
  ExprPtr e1, e2;
  FormulaPtr a, b, c;
  std::string var;
  std::vector<ExprPtr> subst_exprs;
  std::vector<std::string> subst_vars;
  HKind h = HKind::R1;

  static FormulaPtr truth();
  static FormulaPtr falsity();
  static FormulaPtr skip();
  static FormulaPtr cmp(CmpOp op, ExprPtr l, ExprPtr r);
  static FormulaPtr negated(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr imp(FormulaPtr l, FormulaPtr r);
  static FormulaPtr ite(FormulaPtr p, FormulaPtr cond, FormulaPtr q);
  static FormulaPtr exists(std::string var, FormulaPtr body);
  static FormulaPtr subst(FormulaPtr body, std::vector<ExprPtr> es, std::vector<std::string> xs);
  static FormulaPtr health(HKind h, FormulaPtr body);
  static FormulaPtr seq(FormulaPtr l, FormulaPtr r);
  static FormulaPtr par(FormulaPtr p, FormulaPtr m, FormulaPtr q);
};

bool equal(const ExprPtr& a, const ExprPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// concrete syntax with minimal parentheses; parse(pretty(f)) == f
std::string pretty(const ExprPtr& e);
std::string pretty(const FormulaPtr& f);

const char* health_name(Formula::HKind h);

// whether the formula needs the merge alphabet (indexed variables or merge
// healthiness applications outside a parallel composition's middle slot)
bool needs_merge_alphabet(const FormulaPtr& f);

}  // namespace utp::dsl
