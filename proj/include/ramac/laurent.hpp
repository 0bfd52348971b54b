#ifndef RAMAC_LAURENT_HPP
#define RAMAC_LAURENT_HPP

#include <map>
#include <optional>
#include <utility>

#include "ramac/fq.hpp"

namespace ramac {

// Value of a discrete valuation: a finite integer or +infinity (for zero).
// Infinity absorbs under addition and loses under min.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  static Valuation of(long long v) {
    Valuation r;
    r.finite_ = true;
    r.v_ = v;
    return r;
  }

  bool is_finite() const { return finite_; }
  long long value() const {
    require(finite_, Errc::ZeroElement, "valuation of zero is infinite");
    return v_;
  }

  friend Valuation operator+(Valuation a, Valuation b) {
    if (!a.finite_ || !b.finite_) return infinite();
    return of(a.v_ + b.v_);
  }
  friend Valuation min(Valuation a, Valuation b) {
    if (!a.finite_) return b;
    if (!b.finite_) return a;
    return of(a.v_ < b.v_ ? a.v_ : b.v_);
  }
  friend bool operator==(Valuation a, Valuation b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend bool operator<(Valuation a, Valuation b) {  // infinity is largest
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(Valuation a, Valuation b) { return a < b || a == b; }

  std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

 private:
  Valuation() = default;
  bool finite_ = false;
  long long v_ = 0;
};

// Finitely supported Laurent polynomial over F_q: the exact computable
// fragment of K = F_q((t)). Canonical form: no zero coefficients stored,
// so equality is equality of term maps. Ordered term storage keeps every
// iteration (and hence every output) deterministic.
class LaurentPoly {
 public:
  explicit LaurentPoly(const FqField& field) : field_(&field) {}

  static LaurentPoly monomial(const FqField& field, long long exp, const FqElem& coeff);
  static LaurentPoly monomial(const FqField& field, long long exp, long long coeff);
  static LaurentPoly constant(const FqField& field, long long c) { return monomial(field, 0, c); }

  const FqField& field() const { return *field_; }
  const std::map<long long, FqElem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }

  Valuation valuation() const {
    return terms_.empty() ? Valuation::infinite() : Valuation::of(terms_.begin()->first);
  }
  // Term at the minimal exponent; throws ZeroElement on 0.
  std::pair<long long, FqElem> leading() const;
  long long degree() const;  // maximal exponent; throws ZeroElement on 0
  FqElem coeff(long long exp) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
  LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  LaurentPoly scaled(const FqElem& c) const;
  LaurentPoly shifted(long long dexp) const;  // multiply by t^dexp

  // Ring division, restricted to monomial divisors (always exact there).
  // General divisors are refused with NonMonomialDivisor; inverses of
  // non-monomials only exist inside L and are produced by the tower via the
  // norm formula.
  LaurentPoly operator/(const LaurentPoly& divisor) const;

  // pow by integer; negative exponents require a monomial base.
  LaurentPoly pow(long long e) const;

  // Exact division test: returns the quotient when `divisor` divides *this
  // in F_q[t,t^-1], nullopt otherwise. This is the internal engine behind
  // tower inversion and fraction-free elimination.
  std::optional<LaurentPoly> divided_exactly(const LaurentPoly& divisor) const;

  bool operator==(const LaurentPoly& rhs) const;
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  // Builder: add c * t^exp, keeping canonical form.
  void add_term(long long exp, const FqElem& c);

 private:
  const FqField* field_;
  std::map<long long, FqElem> terms_;
};

}  // namespace ramac

#endif
