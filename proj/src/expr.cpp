#include "ramac/expr.hpp"

#include <cctype>

namespace ramac {

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && value == o.value && name == o.name && kids == o.kids;
}

std::string Expr::str() const {
  auto wrap_below = [](const Expr& e, int min_level) {
    // levels: 0 sum, 1 product, 2 atom/power
    int level = 2;
    switch (e.kind) {
      case Kind::Add:
      case Kind::Sub:
      case Kind::Neg: level = 0; break;
      case Kind::Mul: level = 1; break;
      default: level = 2; break;
    }
    std::string s = e.str();
    return level < min_level ? "(" + s + ")" : s;
  };
  switch (kind) {
    case Kind::Add: return kids[0].str() + " + " + wrap_below(kids[1], 1);
    case Kind::Sub: return kids[0].str() + " - " + wrap_below(kids[1], 1);
    case Kind::Mul: return wrap_below(kids[0], 1) + "*" + wrap_below(kids[1], 2);
    case Kind::Pow: return wrap_below(kids[0], 2) + "^" + std::to_string(value);
    case Kind::Neg: return "-" + wrap_below(kids[0], 1);
    case Kind::Var: return name;
    case Kind::Int: return std::to_string(value);
  }
  return {};
}

namespace {

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < src.size() && src[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw ParseError(Errc::SyntaxError, "expected integer", pos);
    long long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > (1LL << 40)) throw ParseError(Errc::SyntaxError, "integer too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (eat('+')) {
        Expr e;
        e.kind = Expr::Kind::Add;
        e.kids = {std::move(lhs), term()};
        lhs = std::move(e);
      } else if (eat('-')) {
        Expr e;
        e.kind = Expr::Kind::Sub;
        e.kids = {std::move(lhs), term()};
        lhs = std::move(e);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (eat('*')) {
      Expr e;
      e.kind = Expr::Kind::Mul;
      e.kids = {std::move(lhs), factor()};
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr factor() {
    Expr base = unary();
    if (eat('^')) {
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.value = integer();
      e.kids = {std::move(base)};
      return e;
    }
    return base;
  }

  Expr unary() {
    if (eat('-')) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.kids = {unary()};
      return e;
    }
    skip_ws();
    if (pos >= src.size()) throw ParseError(Errc::SyntaxError, "unexpected end of input", pos);
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::Int;
      e.value = integer();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::Var;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        e.name += src[pos++];
      return e;
    }
    if (c == '(') {
      ++pos;
      Expr e = expr();
      if (!eat(')')) throw ParseError(Errc::SyntaxError, "expected ')'", pos);
      return e;
    }
    throw ParseError(Errc::SyntaxError, std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

Expr parse_expr(std::string_view src) {
  Parser p{src};
  Expr e = p.expr();
  p.skip_ws();
  if (p.pos != src.size())
    throw ParseError(Errc::SyntaxError, "trailing input", p.pos);
  return e;
}

namespace {

// Shared recursion over the AST; Ctx supplies atoms and the power rule.
template <class V, class Ctx>
V eval_rec(const Expr& e, const Ctx& ctx) {
  switch (e.kind) {
    case Expr::Kind::Int: return ctx.from_int(e.value);
    case Expr::Kind::Var: return ctx.var(e.name);
    case Expr::Kind::Add: return eval_rec<V>(e.kids[0], ctx) + eval_rec<V>(e.kids[1], ctx);
    case Expr::Kind::Sub: return eval_rec<V>(e.kids[0], ctx) - eval_rec<V>(e.kids[1], ctx);
    case Expr::Kind::Mul: return eval_rec<V>(e.kids[0], ctx) * eval_rec<V>(e.kids[1], ctx);
    case Expr::Kind::Neg: return ctx.from_int(0) - eval_rec<V>(e.kids[0], ctx);
    case Expr::Kind::Pow: return ctx.pow(eval_rec<V>(e.kids[0], ctx), e.value);
  }
  fail(Errc::SyntaxError, "corrupt expression tree");
}

LaurentPoly laurent_pow(const LaurentPoly& base, long long e) {
  if (e >= 0) return base.pow(e);
  require(!base.is_zero(), Errc::DivisionByZero, "inverse of zero");
  require(base.is_monomial(), Errc::NonRepresentableInverse,
          "inverse of a non-monomial leaves the ring");
  return base.pow(e);
}

struct BaseCtx {
  const FqField* field;
  LaurentPoly from_int(long long v) const { return LaurentPoly::constant(*field, v); }
  LaurentPoly var(const std::string& name) const {
    if (name == "t") return LaurentPoly::monomial(*field, 1, 1);
    if (name == "g" && field->f() > 1) return LaurentPoly::monomial(*field, 0, field->gen());
    throw Error(Errc::UnknownVariable, "unknown variable '" + name + "'");
  }
  LaurentPoly pow(const LaurentPoly& b, long long e) const { return laurent_pow(b, e); }
};

struct TameCtx {
  const FqField* field;
  int e_deg;
  // everything is a Laurent polynomial in s; t is the monomial s^e
  LaurentPoly from_int(long long v) const { return LaurentPoly::constant(*field, v); }
  LaurentPoly var(const std::string& name) const {
    if (name == "s") return LaurentPoly::monomial(*field, 1, 1);
    if (name == "t") return LaurentPoly::monomial(*field, e_deg, 1);
    if (name == "g" && field->f() > 1) return LaurentPoly::monomial(*field, 0, field->gen());
    throw Error(Errc::UnknownVariable, "unknown variable '" + name + "'");
  }
  LaurentPoly pow(const LaurentPoly& b, long long e) const { return laurent_pow(b, e); }
};

struct UnramCtx {
  const FqField* big;
  LaurentPoly from_int(long long v) const { return LaurentPoly::constant(*big, v); }
  LaurentPoly var(const std::string& name) const {
    if (name == "t") return LaurentPoly::monomial(*big, 1, 1);
    if (name == "g") return LaurentPoly::monomial(*big, 0, big->gen());
    throw Error(Errc::UnknownVariable, "unknown variable '" + name + "'");
  }
  LaurentPoly pow(const LaurentPoly& b, long long e) const { return laurent_pow(b, e); }
};

struct TowerCtx {
  const Tower* tower;
  LElem from_int(long long v) const {
    return tower->embed(LaurentPoly::constant(tower->base_field(), v));
  }
  LElem var(const std::string& name) const {
    const FqField& F = tower->base_field();
    if (name == "t") return tower->embed(LaurentPoly::monomial(F, 1, 1));
    if (name == "g" && F.f() > 1) return tower->embed(LaurentPoly::monomial(F, 0, F.gen()));
    if (name.size() >= 2 && name[0] == 'x') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      if (digits) {
        int k = std::stoi(name.substr(1));
        if (k >= 1 && k <= tower->num_steps()) return tower->artin_schreier_root(k);
        throw Error(Errc::UnknownVariable,
                    "variable '" + name + "' exceeds the tower's " +
                        std::to_string(tower->num_steps()) + " steps");
      }
    }
    throw Error(Errc::UnknownVariable, "unknown variable '" + name + "'");
  }
  LElem pow(const LElem& b, long long e) const { return b.pow(e); }
};

}  // namespace

LaurentPoly eval_in_base(const Expr& e, const FqField& field) {
  return eval_rec<LaurentPoly>(e, BaseCtx{&field});
}

LElem eval_in_tower(const Expr& e, const Tower& tower) {
  return eval_rec<LElem>(e, TowerCtx{&tower});
}

LaurentPoly eval_tame(const Expr& e, const FqField& field, int e_deg) {
  return eval_rec<LaurentPoly>(e, TameCtx{&field, e_deg});
}

LaurentPoly eval_unramified(const Expr& e, const FqField& big) {
  return eval_rec<LaurentPoly>(e, UnramCtx{big});
}

LaurentPoly parse_base_element(std::string_view src, const FqField& field) {
  return eval_in_base(parse_expr(src), field);
}

LElem parse_tower_element(std::string_view src, const Tower& tower) {
  return eval_in_tower(parse_expr(src), tower);
}

namespace {

std::string coeff_str(const FqElem& c, bool in_product) {
  std::string s = c.str();
  if (in_product && s.find('+') != std::string::npos) s = "(" + s + ")";
  return s;
}

}  // namespace

std::string print_laurent(const LaurentPoly& a, std::string_view var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    std::string vp;
    if (e != 0) {
      vp = std::string(var);
      if (e != 1) vp += "^" + std::to_string(e);
    }
    if (vp.empty()) {
      out += coeff_str(c, false);
    } else if (c.is_one()) {
      out += vp;
    } else {
      out += coeff_str(c, true) + "*" + vp;
    }
  }
  return out;
}

std::string print_lelem(const LElem& a) {
  const Tower& T = a.tower();
  const long long pn = T.degree();
  const int n = T.num_steps();
  const int p = T.p();
  // Coordinates of the x-monomials prod x_k^{E_k} in the y-basis form a
  // unitriangular matrix (expanding (y_k + w_k)^{E_k} only produces lower
  // indices), so the change of basis is an exact back-substitution.
  std::vector<std::vector<LaurentPoly>> cols;
  cols.reserve(static_cast<std::size_t>(pn));
  for (long long idx = 0; idx < pn; ++idx) {
    LElem m = T.one();
    long long rest = idx;
    for (int k = 1; k <= n; ++k) {
      int ek = static_cast<int>(rest % p);
      rest /= p;
      if (ek) m *= T.artin_schreier_root(k).pow(ek);
    }
    cols.push_back(m.coords());
  }
  std::vector<LaurentPoly> c(static_cast<std::size_t>(pn), LaurentPoly(T.base_field()));
  for (long long j = pn - 1; j >= 0; --j) {
    LaurentPoly v = a.coords()[static_cast<std::size_t>(j)];
    for (long long k = j + 1; k < pn; ++k)
      v -= cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k)];
    c[static_cast<std::size_t>(j)] = v;
  }

  std::string out;
  for (long long idx = 0; idx < pn; ++idx) {
    const LaurentPoly& coeff = c[static_cast<std::size_t>(idx)];
    if (coeff.is_zero()) continue;
    std::string xpart;
    long long rest = idx;
    for (int k = 1; k <= n; ++k) {
      int ek = static_cast<int>(rest % p);
      rest /= p;
      if (!ek) continue;
      if (!xpart.empty()) xpart += "*";
      xpart += "x" + std::to_string(k);
      if (ek != 1) xpart += "^" + std::to_string(ek);
    }
    std::string cpart = print_laurent(coeff);
    if (!out.empty()) out += " + ";
    if (xpart.empty()) {
      out += cpart;
    } else if (cpart == "1") {
      out += xpart;
    } else {
      // only '+' can appear at the top level of a printed coefficient
      if (cpart.find('+') != std::string::npos) cpart = "(" + cpart + ")";
      out += cpart + "*" + xpart;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace ramac
