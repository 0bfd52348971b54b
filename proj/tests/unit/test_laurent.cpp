#include <doctest.h>

#include <random>

#include "ramac/laurent.hpp"

using namespace ramac;

namespace {

LaurentPoly random_poly(const FqField& F, std::mt19937_64& rng, int terms, long long span) {
  LaurentPoly a(F);
  for (int i = 0; i < terms; ++i) {
    long long e = static_cast<long long>(rng() % static_cast<unsigned long long>(2 * span + 1)) - span;
    a.add_term(e, F.element_at(static_cast<long>(rng() % static_cast<unsigned long long>(F.q()))));
  }
  return a;
}

}  // namespace

TEST_CASE("characteristic-2 cancellation and monomial ops") {
  const FqField& F2 = FqField::get(2, 1);
  LaurentPoly a = LaurentPoly::monomial(F2, -1, 1) + LaurentPoly::constant(F2, 1);
  LaurentPoly b = LaurentPoly::monomial(F2, -1, 1) + LaurentPoly::monomial(F2, 1, 1);
  LaurentPoly expect = LaurentPoly::monomial(F2, 1, 1) + LaurentPoly::constant(F2, 1);
  CHECK(a + b == expect);  // (t^-1 + 1) + (t^-1 + t) = t + 1

  CHECK(LaurentPoly::monomial(F2, -1, 1) * LaurentPoly::monomial(F2, 2, 1) ==
        LaurentPoly::monomial(F2, 1, 1));

  LaurentPoly num = LaurentPoly::monomial(F2, 3, 1) + LaurentPoly::monomial(F2, 1, 1);
  CHECK(num / LaurentPoly::monomial(F2, 1, 1) ==
        LaurentPoly::monomial(F2, 2, 1) + LaurentPoly::constant(F2, 1));
}

TEST_CASE("valuation") {
  const FqField& F2 = FqField::get(2, 1);
  LaurentPoly a = LaurentPoly::monomial(F2, -3, 1) + LaurentPoly::monomial(F2, 2, 1);
  CHECK(a.valuation() == Valuation::of(-3));
  CHECK(LaurentPoly(F2).valuation() == Valuation::infinite());
  LaurentPoly b = LaurentPoly::monomial(F2, -1, 1) *
                  (LaurentPoly::monomial(F2, -1, 1) + LaurentPoly::constant(F2, 1));
  CHECK(b.valuation() == Valuation::of(-2));
  // infinity absorbs
  CHECK(Valuation::infinite() + Valuation::of(5) == Valuation::infinite());
  CHECK(min(Valuation::infinite(), Valuation::of(5)) == Valuation::of(5));
}

TEST_CASE("leading term") {
  const FqField& F2 = FqField::get(2, 1);
  LaurentPoly a = LaurentPoly::monomial(F2, -2, 1) + LaurentPoly::monomial(F2, 1, 1);
  auto [e, c] = a.leading();
  CHECK(e == -2);
  CHECK(c.is_one());

  const FqField& F4 = FqField::get(2, 2);
  LaurentPoly b = LaurentPoly::monomial(F4, 5, F4.gen());
  CHECK(b.leading().first == 5);
  CHECK(b.leading().second == F4.gen());

  LaurentPoly z = LaurentPoly::monomial(F2, -1, 1) + LaurentPoly::monomial(F2, -1, 1);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(z.leading(), Error);
}

TEST_CASE("division restrictions") {
  const FqField& F3 = FqField::get(3, 1);
  LaurentPoly nonmono = LaurentPoly::monomial(F3, 1, 1) + LaurentPoly::constant(F3, 1);
  LaurentPoly x = LaurentPoly::monomial(F3, 4, 2);
  CHECK_THROWS_AS(x / nonmono, Error);          // NonMonomialDivisor
  CHECK_THROWS_AS(x / LaurentPoly(F3), Error);  // DivisionByZero
  CHECK_THROWS_AS(nonmono.pow(-1), Error);
  CHECK(x.pow(-2) * x.pow(2) == LaurentPoly::constant(F3, 1));
}

TEST_CASE("exact division finds quotients exactly when they exist") {
  std::mt19937_64 rng(99);
  const FqField& F3 = FqField::get(3, 1);
  for (int it = 0; it < 300; ++it) {
    LaurentPoly a = random_poly(F3, rng, 4, 5);
    LaurentPoly b = random_poly(F3, rng, 4, 5);
    if (b.is_zero()) continue;
    LaurentPoly prod = a * b;
    auto q = prod.divided_exactly(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  // 1 + t does not divide 1 + t + t^3 over F_2 (remainder 1 at t = 1)
  const FqField& F2 = FqField::get(2, 1);
  LaurentPoly d = LaurentPoly::constant(F2, 1) + LaurentPoly::monomial(F2, 1, 1);
  LaurentPoly n = LaurentPoly::constant(F2, 1) + LaurentPoly::monomial(F2, 1, 1) +
                  LaurentPoly::monomial(F2, 3, 1);
  CHECK_FALSE(n.divided_exactly(d).has_value());
}

TEST_CASE("ultrametric inequality on random pairs") {
  std::mt19937_64 rng(7);
  const FqField& F4 = FqField::get(2, 2);
  for (int it = 0; it < 1000; ++it) {
    LaurentPoly a = random_poly(F4, rng, 3, 6);
    LaurentPoly b = random_poly(F4, rng, 3, 6);
    Valuation va = a.valuation(), vb = b.valuation(), vs = (a + b).valuation();
    CHECK(min(va, vb) <= vs);
    if (!(va == vb)) CHECK(vs == min(va, vb));
  }
}

TEST_CASE("valuation is multiplicative on random nonzero pairs") {
  std::mt19937_64 rng(11);
  const FqField& F5 = FqField::get(5, 1);
  int done = 0;
  while (done < 1000) {
    LaurentPoly a = random_poly(F5, rng, 3, 6);
    LaurentPoly b = random_poly(F5, rng, 3, 6);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).valuation() == a.valuation() + b.valuation());
    ++done;
  }
}
