#include "ramac/laurent.hpp"

namespace ramac {

LaurentPoly LaurentPoly::monomial(const FqField& field, long long exp, const FqElem& coeff) {
  LaurentPoly r(field);
  r.add_term(exp, coeff);
  return r;
}

LaurentPoly LaurentPoly::monomial(const FqField& field, long long exp, long long coeff) {
  return monomial(field, exp, field.from_int(coeff));
}

void LaurentPoly::add_term(long long exp, const FqElem& c) {
  require(&c.field() == field_, Errc::FieldMismatch, "coefficient from a different field");
  if (c.is_zero()) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
    return;
  }
  FqElem s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

std::pair<long long, FqElem> LaurentPoly::leading() const {
  require(!terms_.empty(), Errc::ZeroElement, "leading term of zero");
  return *terms_.begin();
}

long long LaurentPoly::degree() const {
  require(!terms_.empty(), Errc::ZeroElement, "degree of zero");
  return terms_.rbegin()->first;
}

FqElem LaurentPoly::coeff(long long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? field_->zero() : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  require(field_ == rhs.field_, Errc::FieldMismatch, "adding over different fields");
  LaurentPoly r = *this;
  for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  require(field_ == rhs.field_, Errc::FieldMismatch, "multiplying over different fields");
  LaurentPoly r(*field_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const FqElem& c) const {
  LaurentPoly r(*field_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.add_term(e, a * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(long long dexp) const {
  LaurentPoly r(*field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + dexp, c);
  return r;
}

LaurentPoly LaurentPoly::operator/(const LaurentPoly& divisor) const {
  require(field_ == divisor.field_, Errc::FieldMismatch, "dividing over different fields");
  require(!divisor.is_zero(), Errc::DivisionByZero, "division by zero polynomial");
  require(divisor.is_monomial(), Errc::NonMonomialDivisor,
          "ring division is restricted to monomial divisors");
  auto [e, c] = divisor.leading();
  return shifted(-e).scaled(c.inv());
}

LaurentPoly LaurentPoly::pow(long long e) const {
  if (e < 0) {
    require(is_monomial(), Errc::NonMonomialDivisor, "negative power of a non-monomial");
    auto [ex, c] = leading();
    return monomial(*field_, -ex, c.inv()).pow(-e);
  }
  LaurentPoly acc = constant(*field_, 1);
  LaurentPoly base = *this;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly(const LaurentPoly& divisor) const {
  require(field_ == divisor.field_, Errc::FieldMismatch, "dividing over different fields");
  require(!divisor.is_zero(), Errc::DivisionByZero, "division by zero polynomial");
  if (is_zero()) return LaurentPoly(*field_);
  if (divisor.is_monomial()) {
    auto [e, c] = divisor.leading();
    return shifted(-e).scaled(c.inv());
  }
  // Shift both to honest polynomials and long-divide from the top; Laurent
  // divisibility is equivalent to divisibility of the shifted polynomials.
  long long va = valuation().value();
  long long vb = divisor.valuation().value();
  LaurentPoly rem = shifted(-va);
  LaurentPoly b = divisor.shifted(-vb);
  long long db = b.degree();
  FqElem lead_inv = b.terms().rbegin()->second.inv();
  LaurentPoly q(*field_);
  while (!rem.is_zero() && rem.degree() >= db) {
    long long da = rem.degree();
    FqElem c = rem.terms().rbegin()->second * lead_inv;
    q.add_term(da - db, c);
    rem -= b.shifted(da - db).scaled(c);
  }
  if (!rem.is_zero()) return std::nullopt;
  return q.shifted(va - vb);
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  require(field_ == rhs.field_, Errc::FieldMismatch, "comparing over different fields");
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

}  // namespace ramac
