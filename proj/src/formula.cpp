#include "utp/formula.hpp"

namespace utp::dsl {

namespace {

std::shared_ptr<Expr> new_expr(Expr::Kind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

std::shared_ptr<Formula> new_formula(Formula::Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

}  // namespace

ExprPtr Expr::var(std::string n) {
  auto e = new_expr(Kind::Var);
  e->name = std::move(n);
  return e;
}
ExprPtr Expr::eps() { return new_expr(Kind::Eps); }
ExprPtr Expr::boolean(bool v) {
  auto e = new_expr(Kind::BoolLit);
  e->bval = v;
  return e;
}
ExprPtr Expr::seq_lit(EventSeq s) {
  auto e = new_expr(Kind::SeqLit);
  e->seq = std::move(s);
  return e;
}
ExprPtr Expr::rat_lit(Rational r) {
  auto e = new_expr(Kind::RatLit);
  e->rat = std::move(r);
  return e;
}
ExprPtr Expr::timed_lit(TimedTrace t) {
  auto e = new_expr(Kind::TimedLit);
  e->timed = std::move(t);
  return e;
}
ExprPtr Expr::concat(ExprPtr a, ExprPtr b) {
  auto e = new_expr(Kind::Concat);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}
ExprPtr Expr::minus(ExprPtr a, ExprPtr b) {
  auto e = new_expr(Kind::Minus);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

FormulaPtr Formula::truth() { return new_formula(Kind::True); }
FormulaPtr Formula::falsity() { return new_formula(Kind::False); }
FormulaPtr Formula::skip() { return new_formula(Kind::Skip); }
FormulaPtr Formula::cmp(CmpOp op, ExprPtr l, ExprPtr r) {
  auto f = new_formula(Kind::Cmp);
  f->cmp_op = op;
  f->e1 = std::move(l);
  f->e2 = std::move(r);
  return f;
}
FormulaPtr Formula::negated(FormulaPtr x) {
  auto f = new_formula(Kind::Not);
  f->a = std::move(x);
  return f;
}
FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  auto f = new_formula(Kind::And);
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}
FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  auto f = new_formula(Kind::Or);
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}
FormulaPtr Formula::imp(FormulaPtr l, FormulaPtr r) {
  auto f = new_formula(Kind::Imp);
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}
FormulaPtr Formula::ite(FormulaPtr p, FormulaPtr cond, FormulaPtr q) {
  auto f = new_formula(Kind::Cond);
  f->a = std::move(p);
  f->b = std::move(cond);
  f->c = std::move(q);
  return f;
}
FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  auto f = new_formula(Kind::Exists);
  f->var = std::move(var);
  f->a = std::move(body);
  return f;
}
FormulaPtr Formula::subst(FormulaPtr body, std::vector<ExprPtr> es,
                          std::vector<std::string> xs) {
  auto f = new_formula(Kind::Subst);
  f->a = std::move(body);
  f->subst_exprs = std::move(es);
  f->subst_vars = std::move(xs);
  return f;
}
FormulaPtr Formula::health(HKind h, FormulaPtr body) {
  auto f = new_formula(Kind::Health);
  f->h = h;
  f->a = std::move(body);
  return f;
}
FormulaPtr Formula::seq(FormulaPtr l, FormulaPtr r) {
  auto f = new_formula(Kind::Seq);
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}
FormulaPtr Formula::par(FormulaPtr p, FormulaPtr m, FormulaPtr q) {
  auto f = new_formula(Kind::Par);
  f->a = std::move(p);
  f->b = std::move(m);
  f->c = std::move(q);
  return f;
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Var:
      return a->name == b->name;
    case Expr::Kind::Eps:
      return true;
    case Expr::Kind::BoolLit:
      return a->bval == b->bval;
    case Expr::Kind::SeqLit:
      return a->seq == b->seq;
    case Expr::Kind::RatLit:
      return a->rat == b->rat;
    case Expr::Kind::TimedLit:
      return a->timed == b->timed;
    case Expr::Kind::Concat:
    case Expr::Kind::Minus:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Skip:
      return true;
    case Formula::Kind::Cmp:
      return a->cmp_op == b->cmp_op && equal(a->e1, b->e1) && equal(a->e2, b->e2);
    case Formula::Kind::Not:
      return equal(a->a, b->a);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Seq:
      return equal(a->a, b->a) && equal(a->b, b->b);
    case Formula::Kind::Cond:
    case Formula::Kind::Par:
      return equal(a->a, b->a) && equal(a->b, b->b) && equal(a->c, b->c);
    case Formula::Kind::Exists:
      return a->var == b->var && equal(a->a, b->a);
    case Formula::Kind::Subst: {
      if (!equal(a->a, b->a) || a->subst_vars != b->subst_vars) return false;
      if (a->subst_exprs.size() != b->subst_exprs.size()) return false;
      for (std::size_t i = 0; i < a->subst_exprs.size(); ++i)
        if (!equal(a->subst_exprs[i], b->subst_exprs[i])) return false;
      return true;
    }
    case Formula::Kind::Health:
      return a->h == b->h && equal(a->a, b->a);
  }
  return false;
}

const char* health_name(Formula::HKind h) {
  switch (h) {
    case Formula::HKind::R1: return "R1";
    case Formula::HKind::R2c: return "R2c";
    case Formula::HKind::R3: return "R3";
    case Formula::HKind::R: return "R";
    case Formula::HKind::R2m: return "R2m";
    case Formula::HKind::Rm: return "Rm";
  }
  return "?";
}

namespace {

// expression precedence: ^ and - are one left-associative level
void print_expr(std::string& out, const ExprPtr& e, bool right_operand) {
  switch (e->kind) {
    case Expr::Kind::Var:
      out += e->name;
      return;
    case Expr::Kind::Eps:
      out += "eps";
      return;
    case Expr::Kind::BoolLit:
      out += e->bval ? "true" : "false";
      return;
    case Expr::Kind::SeqLit:
      out += seq_str(e->seq);
      return;
    case Expr::Kind::RatLit:
      out += e->rat.str();
      return;
    case Expr::Kind::TimedLit:
      out += "tt " + tt_to_json(e->timed).dump();
      return;
    case Expr::Kind::Concat:
    case Expr::Kind::Minus: {
      const bool parens = right_operand;
      if (parens) out += "(";
      print_expr(out, e->lhs, false);
      out += e->kind == Expr::Kind::Concat ? " ^ " : " - ";
      print_expr(out, e->rhs, true);
      if (parens) out += ")";
      return;
    }
  }
}

// formula precedence levels, loosest first
constexpr int kLevelCond = 0;
constexpr int kLevelImp = 1;
constexpr int kLevelOr = 2;
constexpr int kLevelAnd = 3;
constexpr int kLevelSeq = 4;
constexpr int kLevelUnary = 5;
constexpr int kLevelAtom = 6;

int level_of(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Cond:
    case Formula::Kind::Exists:
      return kLevelCond;
    case Formula::Kind::Imp:
      return kLevelImp;
    case Formula::Kind::Or:
      return kLevelOr;
    case Formula::Kind::And:
      return kLevelAnd;
    case Formula::Kind::Seq:
    case Formula::Kind::Par:
      return kLevelSeq;
    case Formula::Kind::Not:
    case Formula::Kind::Health:
      return kLevelUnary;
    default:
      return kLevelAtom;
  }
}

void print_formula(std::string& out, const FormulaPtr& f, int min_level) {
  const int lvl = level_of(*f);
  const bool parens = lvl < min_level;
  if (parens) out += "(";
  switch (f->kind) {
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::False:
      out += "false";
      break;
    case Formula::Kind::Skip:
      out += "II";
      break;
    case Formula::Kind::Cmp:
      print_expr(out, f->e1, false);
      out += f->cmp_op == Formula::CmpOp::Eq ? " = " : " <= ";
      print_expr(out, f->e2, false);
      break;
    case Formula::Kind::Not:
      out += "~";
      print_formula(out, f->a, kLevelUnary);
      break;
    case Formula::Kind::And:
      print_formula(out, f->a, kLevelAnd);
      out += " /\\ ";
      print_formula(out, f->b, kLevelAnd + 1);
      break;
    case Formula::Kind::Or:
      print_formula(out, f->a, kLevelOr);
      out += " \\/ ";
      print_formula(out, f->b, kLevelOr + 1);
      break;
    case Formula::Kind::Imp:
      print_formula(out, f->a, kLevelImp + 1);  // right associative
      out += " => ";
      print_formula(out, f->b, kLevelImp);
      break;
    case Formula::Kind::Cond:
      print_formula(out, f->a, kLevelCond + 1);
      out += " <| ";
      print_formula(out, f->b, kLevelCond + 1);
      out += " |> ";
      print_formula(out, f->c, kLevelCond + 1);
      break;
    case Formula::Kind::Exists:
      out += "exists " + f->var + " . ";
      print_formula(out, f->a, kLevelCond);
      break;
    case Formula::Kind::Subst: {
      print_formula(out, f->a, kLevelAtom);
      out += "[";
      for (std::size_t i = 0; i < f->subst_exprs.size(); ++i) {
        if (i) out += ", ";
        print_expr(out, f->subst_exprs[i], false);
      }
      out += " / ";
      for (std::size_t i = 0; i < f->subst_vars.size(); ++i) {
        if (i) out += ", ";
        out += f->subst_vars[i];
      }
      out += "]";
      break;
    }
    case Formula::Kind::Health:
      out += health_name(f->h);
      out += " ";
      print_formula(out, f->a, kLevelUnary);
      break;
    case Formula::Kind::Seq:
      print_formula(out, f->a, kLevelSeq);
      out += " ; ";
      print_formula(out, f->b, kLevelSeq + 1);
      break;
    case Formula::Kind::Par:
      print_formula(out, f->a, kLevelSeq + 1);
      out += " || ";
      print_formula(out, f->b, kLevelSeq + 1);
      out += " || ";
      print_formula(out, f->c, kLevelSeq + 1);
      break;
  }
  if (parens) out += ")";
}

bool expr_mentions_indexed(const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == Expr::Kind::Var)
    return e->name.rfind("0.", 0) == 0 || e->name.rfind("1.", 0) == 0;
  return expr_mentions_indexed(e->lhs) || expr_mentions_indexed(e->rhs);
}

}  // namespace

std::string pretty(const ExprPtr& e) {
  std::string out;
  print_expr(out, e, false);
  return out;
}

std::string pretty(const FormulaPtr& f) {
  std::string out;
  print_formula(out, f, kLevelCond);
  return out;
}

bool needs_merge_alphabet(const FormulaPtr& f) {
  if (!f) return false;
  switch (f->kind) {
    case Formula::Kind::Cmp:
      return expr_mentions_indexed(f->e1) || expr_mentions_indexed(f->e2);
    case Formula::Kind::Health:
      if (f->h == Formula::HKind::R2m || f->h == Formula::HKind::Rm) return true;
      return needs_merge_alphabet(f->a);
    case Formula::Kind::Subst: {
      for (const auto& e : f->subst_exprs)
        if (expr_mentions_indexed(e)) return true;
      for (const auto& x : f->subst_vars)
        if (x.rfind("0.", 0) == 0 || x.rfind("1.", 0) == 0) return true;
      return needs_merge_alphabet(f->a);
    }
    case Formula::Kind::Exists:
      if (f->var.rfind("0.", 0) == 0 || f->var.rfind("1.", 0) == 0) return true;
      return needs_merge_alphabet(f->a);
    case Formula::Kind::Par:
      // the middle operand lives over the merge alphabet by construction;
      // the composition itself is reactive
      return needs_merge_alphabet(f->a) || needs_merge_alphabet(f->c);
    default:
      return needs_merge_alphabet(f->a) || needs_merge_alphabet(f->b) ||
             needs_merge_alphabet(f->c);
  }
}

}  // namespace utp::dsl
