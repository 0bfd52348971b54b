#ifndef RAMAC_EXPR_HPP
#define RAMAC_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ramac/tower.hpp"

namespace ramac {

// AST for the element grammar shared by the CLI, spec files and reports:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := unary ('^' sint)?
//   unary  := '-' unary | IDENT | INT | '(' expr ')'
// Whitespace-insensitive, left-to-right association.
struct Expr {
  enum class Kind { Add, Sub, Mul, Pow, Neg, Var, Int };
  Kind kind = Kind::Int;
  std::vector<Expr> kids;
  long long value = 0;  // Int literal; Pow exponent
  std::string name;     // Var

  bool operator==(const Expr& o) const;
  std::string str() const;  // canonical rendering; parse(str()) == *this
};

Expr parse_expr(std::string_view src);  // throws ParseError with offset

// Evaluation contexts. Unknown identifiers raise UnknownVariable; `^-1` on a
// subexpression that is not invertible in the ring raises
// NonRepresentableInverse.
LaurentPoly eval_in_base(const Expr& e, const FqField& field);        // t, g (f > 1)
LElem eval_in_tower(const Expr& e, const Tower& tower);               // t, g, x1..xn
LaurentPoly eval_tame(const Expr& e, const FqField& field, int e_deg);  // s, t = s^e, g
LaurentPoly eval_unramified(const Expr& e, const FqField& big);       // t, g

LaurentPoly parse_base_element(std::string_view src, const FqField& field);
LElem parse_tower_element(std::string_view src, const Tower& tower);

// Canonical printers; every printed element reparses to an equal element.
std::string print_laurent(const LaurentPoly& a, std::string_view var = "t");
// Elements of L are printed over the original Artin-Schreier roots x1..xn
// (the reduced y-coordinates are converted through the stored shifts).
std::string print_lelem(const LElem& a);

}  // namespace ramac

#endif
