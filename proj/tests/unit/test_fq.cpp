#include <doctest.h>

#include "ramac/fq.hpp"

using namespace ramac;

TEST_CASE("arithmetic matches the small-field tables") {
  const FqField& F2 = FqField::get(2, 1);
  CHECK((F2.one() + F2.one()).is_zero());  // 1 + 1 = 0 in characteristic 2

  const FqField& F4 = FqField::get(2, 2);
  FqElem g = F4.gen();
  CHECK(g * g == g + F4.one());  // g^2 reduced by g^2 + g + 1

  const FqField& F3 = FqField::get(3, 1);
  CHECK(F3.from_int(2).inv() == F3.from_int(2));  // 2*2 = 4 = 1 mod 3
}

TEST_CASE("pth roots") {
  const FqField& F2 = FqField::get(2, 1);
  CHECK(F2.one().pth_root() == F2.one());

  const FqField& F4 = FqField::get(2, 2);
  FqElem g = F4.gen();
  CHECK(g.pth_root() == g + F4.one());  // (g+1)^2 = g^2 + 1 = g

  const FqField& F3 = FqField::get(3, 1);
  CHECK(F3.from_int(2).pth_root() == F3.from_int(2));  // 2^3 = 8 = 2 mod 3
}

TEST_CASE("division and errors") {
  const FqField& F9 = FqField::get(3, 2);
  FqElem g = F9.gen();
  CHECK((g / g).is_one());
  CHECK_THROWS_AS(g / F9.zero(), Error);
  CHECK_THROWS_AS(F9.zero().inv(), Error);
  const FqField& F4 = FqField::get(2, 2);
  CHECK_THROWS_AS(F4.one() + F9.one(), Error);  // FieldMismatch
  CHECK_THROWS_AS(FqField::get(7, 1), Error);   // unsupported p
  CHECK_THROWS_AS(FqField::get(2, 5), Error);   // unsupported f
}

TEST_CASE("pth_root is the inverse of Frobenius, exhaustively") {
  for (int p : {2, 3, 5}) {
    for (int f = 1; f <= 4; ++f) {
      const FqField& F = FqField::get(p, f);
      for (long i = 0; i < F.q(); ++i) {
        FqElem a = F.element_at(i);
        CHECK(a.pth_root().pow(p) == a);
        CHECK(a.pow(p).pth_root() == a);
      }
    }
  }
}

TEST_CASE("Frobenius is a field automorphism on small fields") {
  for (auto [p, f] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    const FqField& F = FqField::get(p, f);
    for (long i = 0; i < F.q(); ++i) {
      for (long j = 0; j < F.q(); ++j) {
        FqElem a = F.element_at(i), b = F.element_at(j);
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
      }
    }
  }
}

TEST_CASE("multiplicative inverses, exhaustively") {
  for (int p : {2, 3, 5}) {
    for (int f = 1; f <= 4; ++f) {
      const FqField& F = FqField::get(p, f);
      for (long i = 1; i < F.q(); ++i) {
        FqElem a = F.element_at(i);
        CHECK((a * a.inv()).is_one());
      }
    }
  }
}

TEST_CASE("irreducibility checker rejects factorables") {
  // x^2 + 1 = (x+1)^2 mod 2
  std::uint8_t sq[] = {1, 0, 1};
  CHECK_FALSE(FqField::check_irreducible(2, sq));
  // x^2 + x + 1 is irreducible mod 2
  std::uint8_t irr[] = {1, 1, 1};
  CHECK(FqField::check_irreducible(2, irr));
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 mod 2: no roots but reducible
  std::uint8_t quart[] = {1, 0, 1, 0, 1};
  CHECK_FALSE(FqField::check_irreducible(2, quart));
}

TEST_CASE("negative powers") {
  const FqField& F5 = FqField::get(5, 1);
  FqElem a = F5.from_int(3);
  CHECK(a.pow(-1) == a.inv());
  CHECK(a.pow(-2) * a.pow(2) == F5.one());
  CHECK(a.pow(0).is_one());
}
