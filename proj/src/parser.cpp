#include "utp/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "json.hpp"
#include "utp/errors.hpp"

namespace utp::dsl {

namespace {

enum class Tok {
  Ident, Rational, SeqLit, TimedLit,
  True, False, Skip, Eps, Exists, Health,
  LParen, RParen, LBracket, RBracket,
  Comma, Dot, Slash,
  Eq, Le, CondL, CondR, Par, SemiColon,
  Not, And, Or, Imp, Concat, Minus,
  End
};

struct Token {
  Tok kind;
  std::string text;          // Ident / Health name
  Rational rat;              // Rational
  EventSeq seq;              // SeqLit
  TimedTrace timed;          // TimedLit
  int line = 1, col = 1;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Rational: return "rational";
    case Tok::SeqLit: return "sequence literal";
    case Tok::TimedLit: return "timed-trace literal";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Skip: return "'II'";
    case Tok::Eps: return "'eps'";
    case Tok::Exists: return "'exists'";
    case Tok::Health: return "healthiness name";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Slash: return "'/'";
    case Tok::Eq: return "'='";
    case Tok::Le: return "'<='";
    case Tok::CondL: return "'<|'";
    case Tok::CondR: return "'|>'";
    case Tok::Par: return "'||'";
    case Tok::SemiColon: return "';'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Imp: return "'=>'";
    case Tok::Concat: return "'^'";
    case Tok::Minus: return "'-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      Token t = next();
      const bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) return out;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    std::string got = pos_ < s_.size() ? std::string(1, s_[pos_]) : "end of input";
    throw ParseError(line_, col_, expected, got);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      advance();
  }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  char peek(std::size_t off = 0) const {
    return pos_ + off < s_.size() ? s_[pos_ + off] : '\0';
  }

  Token tok(Tok k) {
    Token t;
    t.kind = k;
    t.line = line_;
    t.col = col_;
    return t;
  }

  std::string ident() {
    std::string n;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      n += s_[pos_];
      advance();
    }
    // primed variables
    while (eat('\'')) n += "'";
    return n;
  }

  Token next() {
    Token t = tok(Tok::End);
    if (pos_ >= s_.size()) return t;
    const char c = peek();

    if (std::isdigit(static_cast<unsigned char>(c))) {
      // indexed variable 0.x / 1.x, rational p/q, or integer
      if ((c == '0' || c == '1') && peek(1) == '.' &&
          (std::isalpha(static_cast<unsigned char>(peek(2))) || peek(2) == '_')) {
        t = tok(Tok::Ident);
        t.text += c;
        advance();
        advance();  // '.'
        t.text += '.';
        t.text += ident();
        return t;
      }
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance();
      }
      if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        advance();
        std::string den;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          den += peek();
          advance();
        }
        t = tok(Tok::Rational);
        t.rat = Rational(std::stoll(digits), std::stoll(den));
        return t;
      }
      t = tok(Tok::Rational);
      t.rat = Rational(std::stoll(digits));
      return t;
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t = tok(Tok::Ident);
      std::string n = ident();
      if (n == "true") t.kind = Tok::True;
      else if (n == "false") t.kind = Tok::False;
      else if (n == "II") t.kind = Tok::Skip;
      else if (n == "eps") t.kind = Tok::Eps;
      else if (n == "exists") t.kind = Tok::Exists;
      else if (n == "R1" || n == "R2c" || n == "R3" || n == "R" || n == "R2m" || n == "Rm") {
        t.kind = Tok::Health;
        t.text = n;
      } else if (n == "tt") {
        // timed-trace literal: tt { json }
        skip_ws();
        if (peek() != '{') fail("'{' opening a timed-trace literal");
        std::string body;
        int depth = 0;
        while (pos_ < s_.size()) {
          char b = peek();
          body += b;
          if (b == '{') ++depth;
          if (b == '}') {
            advance();
            if (--depth == 0) break;
            continue;
          }
          advance();
        }
        if (depth != 0) fail("balanced '}' closing a timed-trace literal");
        t.kind = Tok::TimedLit;
        try {
          t.timed = tt_from_json(nlohmann::json::parse(body));
        } catch (const std::exception& e) {
          throw ParseError(t.line, t.col, "well-formed timed-trace json", e.what());
        }
      } else {
        t.text = std::move(n);
      }
      return t;
    }

    switch (c) {
      case '(': advance(); return tok(Tok::LParen);
      case ')': advance(); return tok(Tok::RParen);
      case '[': advance(); return tok(Tok::LBracket);
      case ']': advance(); return tok(Tok::RBracket);
      case ',': advance(); return tok(Tok::Comma);
      case '.': advance(); return tok(Tok::Dot);
      case ';': advance(); return tok(Tok::SemiColon);
      case '~': advance(); return tok(Tok::Not);
      case '^': advance(); return tok(Tok::Concat);
      case '-': advance(); return tok(Tok::Minus);
      case '=': {
        advance();
        if (eat('>')) return tok(Tok::Imp);
        return tok(Tok::Eq);
      }
      case '/': {
        advance();
        if (eat('\\')) return tok(Tok::And);
        return tok(Tok::Slash);
      }
      case '\\': {
        advance();
        if (eat('/')) return tok(Tok::Or);
        fail("'/' to complete '\\/'");
      }
      case '|': {
        advance();
        if (eat('|')) return tok(Tok::Par);
        if (eat('>')) return tok(Tok::CondR);
        fail("'|' or '>' after '|'");
      }
      case '<': {
        advance();
        if (eat('=')) return tok(Tok::Le);
        if (eat('|')) return tok(Tok::CondL);
        // sequence literal <a,b> or <>
        Token lit = tok(Tok::SeqLit);
        skip_ws();
        if (eat('>')) return lit;
        for (;;) {
          skip_ws();
          if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            fail("event name inside sequence literal");
          lit.seq.push_back(ident());
          skip_ws();
          if (eat('>')) return lit;
          if (!eat(',')) fail("',' or '>' in sequence literal");
        }
      }
      default:
        fail("a token");
    }
    return t;  // unreachable
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = formula();
    expect(Tok::End);
    return f;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t n = 1) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  bool at(Tok k) const { return cur().kind == k; }

  Token take() { return toks_[pos_++]; }

  bool eat(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(cur().line, cur().col, expected, tok_name(cur().kind));
  }

  void expect(Tok k) {
    if (!eat(k)) fail(tok_name(k));
  }

  FormulaPtr formula() { return conditional(); }

  FormulaPtr conditional() {
    FormulaPtr p = implication();
    if (eat(Tok::CondL)) {
      FormulaPtr b = implication();
      expect(Tok::CondR);
      FormulaPtr q = implication();
      return Formula::ite(std::move(p), std::move(b), std::move(q));
    }
    return p;
  }

  FormulaPtr implication() {
    FormulaPtr l = disjunction();
    if (eat(Tok::Imp)) return Formula::imp(std::move(l), implication());
    return l;
  }

  FormulaPtr disjunction() {
    FormulaPtr l = conjunction();
    while (eat(Tok::Or)) l = Formula::disj(std::move(l), conjunction());
    return l;
  }

  FormulaPtr conjunction() {
    FormulaPtr l = sequence();
    while (eat(Tok::And)) l = Formula::conj(std::move(l), sequence());
    return l;
  }

  FormulaPtr sequence() {
    FormulaPtr l = unary();
    for (;;) {
      if (eat(Tok::SemiColon)) {
        l = Formula::seq(std::move(l), unary());
      } else if (eat(Tok::Par)) {
        FormulaPtr m = unary();
        expect(Tok::Par);
        l = Formula::par(std::move(l), std::move(m), unary());
      } else {
        return l;
      }
    }
  }

  FormulaPtr unary() {
    if (eat(Tok::Not)) return Formula::negated(unary());
    if (at(Tok::Health)) {
      std::string name = take().text;
      Formula::HKind h = name == "R1"    ? Formula::HKind::R1
                         : name == "R2c" ? Formula::HKind::R2c
                         : name == "R3"  ? Formula::HKind::R3
                         : name == "R"   ? Formula::HKind::R
                         : name == "R2m" ? Formula::HKind::R2m
                                         : Formula::HKind::Rm;
      return Formula::health(h, unary());
    }
    if (at(Tok::Exists)) {
      take();
      if (!at(Tok::Ident)) fail("variable after 'exists'");
      std::string var = take().text;
      expect(Tok::Dot);
      return Formula::exists(std::move(var), formula());
    }
    return postfix();
  }

  FormulaPtr postfix() {
    FormulaPtr f = primary();
    while (eat(Tok::LBracket)) {
      std::vector<ExprPtr> es;
      es.push_back(expr());
      while (eat(Tok::Comma)) es.push_back(expr());
      expect(Tok::Slash);
      std::vector<std::string> xs;
      if (!at(Tok::Ident)) fail("variable name in substitution");
      xs.push_back(take().text);
      while (eat(Tok::Comma)) {
        if (!at(Tok::Ident)) fail("variable name in substitution");
        xs.push_back(take().text);
      }
      expect(Tok::RBracket);
      if (es.size() != xs.size())
        throw ParseError(cur().line, cur().col, "matching expression and variable counts",
                         std::to_string(es.size()) + " expressions for " +
                             std::to_string(xs.size()) + " variables");
      f = Formula::subst(std::move(f), std::move(es), std::move(xs));
    }
    return f;
  }

  // true/false are atoms when a comparison follows, formulas otherwise
  FormulaPtr primary() {
    if (at(Tok::True) || at(Tok::False)) {
      if (ahead().kind == Tok::Eq || ahead().kind == Tok::Le) return atom();
      return take().kind == Tok::True ? Formula::truth() : Formula::falsity();
    }
    if (eat(Tok::Skip)) return Formula::skip();
    if (at(Tok::LParen)) {
      // either a parenthesised formula or a parenthesised expression
      // opening an atom; try the atom reading first
      const std::size_t saved = pos_;
      try {
        return atom();
      } catch (const ParseError&) {
        pos_ = saved;
      }
      expect(Tok::LParen);
      FormulaPtr f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (at(Tok::Ident) || at(Tok::Rational) || at(Tok::SeqLit) || at(Tok::TimedLit) ||
        at(Tok::Eps))
      return atom();
    fail("a formula");
  }

  FormulaPtr atom() {
    ExprPtr l = expr();
    if (eat(Tok::Eq)) return Formula::cmp(Formula::CmpOp::Eq, std::move(l), expr());
    if (eat(Tok::Le)) return Formula::cmp(Formula::CmpOp::Le, std::move(l), expr());
    fail("'=' or '<='");
  }

  ExprPtr expr() {
    ExprPtr l = term();
    for (;;) {
      if (eat(Tok::Concat)) {
        l = Expr::concat(std::move(l), term());
      } else if (eat(Tok::Minus)) {
        l = Expr::minus(std::move(l), term());
      } else {
        return l;
      }
    }
  }

  ExprPtr term() {
    if (at(Tok::Ident)) return Expr::var(take().text);
    if (eat(Tok::Eps)) return Expr::eps();
    if (at(Tok::Rational)) return Expr::rat_lit(take().rat);
    if (at(Tok::SeqLit)) return Expr::seq_lit(take().seq);
    if (at(Tok::TimedLit)) return Expr::timed_lit(take().timed);
    if (eat(Tok::True)) return Expr::boolean(true);
    if (eat(Tok::False)) return Expr::boolean(false);
    if (eat(Tok::LParen)) {
      ExprPtr e = expr();
      expect(Tok::RParen);
      return e;
    }
    fail("a term");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse(const std::string& text) {
  Lexer lex(text);
  Parser p(lex.run());
  return p.run();
}

}  // namespace utp::dsl
