#pragma once

#include <string>

#include "utp/formula.hpp"

namespace utp::dsl {

// Parses the predicate language. Grammar, loosest binding first:
//
//   formula := cond
//   cond    := imp ('<|' imp '|>' imp)?
//   imp     := or ('=>' imp)?
//   or      := and ('\/' and)*
//   and     := seq ('/\' seq)*
//   seq     := unary (';' unary | '||' unary '||' unary)*
//   unary   := '~' unary | HEALTH unary | 'exists' VAR '.' formula | postfix
//   postfix := primary ('[' expr (',' expr)* '/' VAR (',' VAR)* ']')*
//   primary := 'true' | 'false' | 'II' | atom | '(' formula ')'
//   atom    := expr ('=' | '<=') expr
//   expr    := term (('^' | '-') term)*
//   term    := VAR | 'eps' | SEQLIT | RATIONAL | 'true' | 'false'
//            | 'tt' JSON | '(' expr ')'
//
// Throws ParseError with line/column and the expected token set.
FormulaPtr parse(const std::string& text);

}  // namespace utp::dsl
