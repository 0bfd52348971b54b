#ifndef RAMAC_FQ_HPP
#define RAMAC_FQ_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ramac/error.hpp"

namespace ramac {

class FqField;

// Element of F_{p^f}, stored as a coefficient vector over F_p in the power
// basis of the field generator. Immutable value type; all arithmetic checks
// that both operands belong to the same field.
class FqElem {
 public:
  const FqField& field() const { return *field_; }
  bool is_zero() const;
  bool is_one() const;

  FqElem operator-() const;
  FqElem operator+(const FqElem& rhs) const;
  FqElem operator-(const FqElem& rhs) const;
  FqElem operator*(const FqElem& rhs) const;
  FqElem operator/(const FqElem& rhs) const;  // throws DivisionByZero
  FqElem& operator+=(const FqElem& rhs) { return *this = *this + rhs; }
  FqElem& operator-=(const FqElem& rhs) { return *this = *this - rhs; }
  FqElem& operator*=(const FqElem& rhs) { return *this = *this * rhs; }

  FqElem inv() const;            // throws DivisionByZero on 0
  FqElem pow(long long e) const;  // negative e requires nonzero base
  FqElem frobenius() const;      // a^p
  FqElem pth_root() const;       // unique r with r^p = a (Frobenius inverse)

  bool operator==(const FqElem& rhs) const;
  bool operator!=(const FqElem& rhs) const { return !(*this == rhs); }

  // Coefficients over F_p, length f, low degree first.
  std::span<const std::uint8_t> coeffs() const { return {c_.data(), static_cast<std::size_t>(f_)}; }

  // Debug/plain rendering as a polynomial in `g`; the CLI grammar printer
  // lives in expr.hpp.
  std::string str() const;

 private:
  friend class FqField;
  FqElem(const FqField* field, std::array<std::uint8_t, 4> c, int f)
      : field_(field), c_(c), f_(static_cast<std::uint8_t>(f)) {}

  const FqField* field_;
  std::array<std::uint8_t, 4> c_{};
  std::uint8_t f_;
};

// F_{p^f} for p in {2,3,5}, f <= 4, with a fixed built-in modulus per (p,f)
// so element encodings are reproducible across runs. Instances are unique
// per (p,f); compare fields by address.
class FqField {
 public:
  static const FqField& get(int p, int f);  // throws BadParameters

  int p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }

  // Modulus coefficients, length f+1, low degree first, monic.
  std::span<const std::uint8_t> modulus() const { return {mod_.data(), static_cast<std::size_t>(f_ + 1)}; }

  FqElem zero() const;
  FqElem one() const;
  FqElem gen() const;  // the class of x; equals 0 when f == 1
  FqElem from_int(long long n) const;
  FqElem element(std::span<const int> coeffs) const;  // reduced mod p, length <= f
  FqElem element_at(long index) const;  // base-p digits of index, 0 <= index < q

  bool operator==(const FqField& rhs) const { return this == &rhs; }

  // Brute-force irreducibility over F_p (root/factor search, deg <= 4).
  static bool check_irreducible(int p, std::span<const std::uint8_t> poly);

 private:
  FqField(int p, int f, std::array<std::uint8_t, 5> mod);

  FqElem make(std::array<std::uint8_t, 4> c) const { return FqElem(this, c, f_); }

  int p_, f_;
  long q_;
  std::array<std::uint8_t, 5> mod_;
  // x^f reduced by the modulus, cached for multiplication.
  std::array<std::uint8_t, 4> xf_red_;

  friend class FqElem;
};

}  // namespace ramac

#endif
