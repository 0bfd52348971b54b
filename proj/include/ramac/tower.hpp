#ifndef RAMAC_TOWER_HPP
#define RAMAC_TOWER_HPP

#include <vector>

#include "ramac/laurent.hpp"

namespace ramac {

class Tower;

// Element of G = Gal(L/K) = (Z/p)^n, acting on the original Artin-Schreier
// roots by x_k -> x_k + c_k. Composition is componentwise addition.
struct GaloisElem {
  int p = 0;
  std::vector<int> c;

  static GaloisElem identity(int p, int n) { return {p, std::vector<int>(n, 0)}; }

  bool is_identity() const {
    for (int v : c)
      if (v) return false;
    return true;
  }

  GaloisElem compose(const GaloisElem& o) const {
    require(p == o.p && c.size() == o.c.size(), Errc::TowerMismatch,
            "composing automorphisms of different groups");
    GaloisElem r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = (r.c[i] + o.c[i]) % p;
    return r;
  }

  bool operator==(const GaloisElem& o) const { return p == o.p && c == o.c; }
};

// Element of L in reduced coordinates: a flat vector of p^n Laurent
// polynomials over K, indexed by the monomial basis prod_k y_k^{e_k} with
// index sum_k e_k p^{k-1}. Elements are tied to the Tower that created them
// and must not outlive it.
class LElem {
 public:
  const Tower& tower() const { return *t_; }
  const std::vector<LaurentPoly>& coords() const { return c_; }

  bool is_zero() const;
  Valuation valuation() const;

  LElem operator-() const;
  LElem operator+(const LElem& rhs) const;
  LElem operator-(const LElem& rhs) const;
  LElem operator*(const LElem& rhs) const;
  LElem& operator+=(const LElem& rhs) { return *this = *this + rhs; }
  LElem& operator-=(const LElem& rhs) { return *this = *this - rhs; }
  LElem& operator*=(const LElem& rhs) { return *this = *this * rhs; }
  LElem pow(long long e) const;  // negative e inverts first
  LElem scaled(const LaurentPoly& k) const;

  LElem galois(const GaloisElem& sigma) const;
  LaurentPoly trace() const;
  LaurentPoly norm() const;
  LElem inverse() const;

  bool operator==(const LElem& rhs) const;
  bool operator!=(const LElem& rhs) const { return !(*this == rhs); }

 private:
  friend class Tower;
  LElem(const Tower* t, std::vector<LaurentPoly> c) : t_(t), c_(std::move(c)) {}

  const Tower* t_;
  std::vector<LaurentPoly> c_;
};

// One Artin-Schreier step y_k^p = y_k + r_k over the previous level, with the
// normalization data produced by the reduction u_k = r_k + w_k^p - w_k.
struct TowerStep {
  LaurentPoly rhs;                        // u_k as given, element of K
  std::vector<LaurentPoly> reduced_rhs;   // r_k, level k-1 coordinates
  std::vector<LaurentPoly> shift;         // w_k, level k-1 coordinates
  long long step_break;                   // b'_k = -v_{L_{k-1}}(r_k), positive, prime to p
  long long upper_break;                  // break of u_k reduced over K itself
  long long bezout_s, bezout_m;           // p*s - b'*m = 1 with 0 <= m < p
  std::vector<LaurentPoly> prime_coords;  // pi_k = pi_{k-1}^s y_k^m, level k coordinates
};

// L/K built as a chain of Artin-Schreier steps with all right-hand sides in
// K = F_q((t)), so G is elementary abelian. A tower is immutable once
// constructed; extend() returns a new tower. Successive steps must have
// strictly increasing upper-numbering breaks (the linear-disjointness guard).
class Tower {
 public:
  explicit Tower(const FqField& base);                           // trivial tower, L = K
  Tower(const FqField& base, const std::vector<LaurentPoly>& rhs_list);

  Tower extend(const LaurentPoly& u) const;

  const FqField& base_field() const { return *field_; }
  int p() const { return field_->p(); }
  int num_steps() const { return static_cast<int>(steps_.size()); }
  long long degree() const { return degree_; }
  const TowerStep& step(int k) const { return steps_.at(static_cast<std::size_t>(k)); }

  // element factories (all produce top-level elements)
  LElem zero() const;
  LElem one() const;
  LElem embed(const LaurentPoly& a) const;  // K -> L
  LElem from_coords(std::vector<LaurentPoly> coords) const;
  LElem reduced_root(int k) const;          // y_k, 1-based
  LElem artin_schreier_root(int k) const;   // x_k = y_k + w_k, 1-based
  LElem prime_element() const;              // pi_L with v_L = 1
  LElem monomial_basis_elem(long long idx) const;      // prod y_k^{e_k}
  LElem monomial_with_valuation(long long v) const;    // unique pure monomial of valuation v

  // Galois group, enumerated by mixed-radix index (c_1 is the low digit).
  long long group_order() const { return degree_; }
  GaloisElem galois_elem(long long index) const;

  // core operations
  Valuation valuation(const LElem& a) const;
  LElem galois_apply(const GaloisElem& sigma, const LElem& a) const;
  LaurentPoly trace(const LElem& a) const;   // asserts the result lies in K
  LaurentPoly norm(const LElem& a) const;    // asserts the result lies in K
  LElem cofactor(const LElem& a) const;      // prod over sigma != 1 of sigma(a)
  LElem invert(const LElem& a) const;        // via cofactor / norm; exact or error

  struct Reduction {
    LElem reduced_rhs;  // r
    LElem shift;        // w
    long long break_number;  // b = -v(r)
  };
  // Normalize u = r + (w^p - w) with v(r) negative and prime to p, at the
  // current top level. Throws NotFullyRamified when v(r) leaves the negative
  // prime-to-p range, ZeroRhs on u = 0.
  Reduction reduce_artin_schreier(const LElem& u) const;

  // d = v_L(p'(pi_L)), computed as the i_G sum with the product form asserted
  // equal. Requires at least one step.
  long long different_exponent() const;
  LElem derivative_at_prime() const;  // p'(pi_L) = prod_{sigma != 1}(pi - sigma pi)

  // Coefficients of the minimal polynomial of pi_L over K, low degree first,
  // monic of degree p^n; asserts p(pi) = 0 and p'(pi) = derivative_at_prime().
  std::vector<LaurentPoly> min_poly() const;

 private:
  using Coords = std::vector<LaurentPoly>;

  // ---- internal arithmetic on raw coordinate vectors of size p^level ----
  Coords c_zero(int level) const;
  Coords c_one(int level) const;
  Coords c_lift(const Coords& a, int to_level) const;
  bool c_is_zero(const Coords& a) const;
  Coords c_add(const Coords& a, const Coords& b) const;
  Coords c_sub(const Coords& a, const Coords& b) const;
  Coords c_neg(const Coords& a) const;
  Coords c_scale(const Coords& a, const LaurentPoly& k) const;
  Coords c_mul(const Coords& a, const Coords& b, int level) const;
  Coords c_pow(const Coords& a, long long e, int level) const;
  Valuation c_val(const Coords& a, int level) const;
  struct Leading {
    long long val;
    FqElem coeff;
  };
  Leading c_leading(const Coords& a, int level) const;
  Coords c_monomial_with_val(long long v, int level) const;
  Coords c_galois(const GaloisElem& sigma, const Coords& a, int level) const;

  struct RawReduction {
    Coords r, w;
    long long b;
  };
  RawReduction c_reduce(const Coords& u, int level) const;

  void append_step(const LaurentPoly& u);
  void refresh_invariants();  // recompute pi/d/derivative caches for the top level

  LElem wrap(Coords c) const { return LElem(this, std::move(c)); }
  void check_same_tower(const LElem& a) const {
    require(a.t_ == this, Errc::TowerMismatch, "element belongs to a different tower");
  }

  const FqField* field_;
  std::vector<TowerStep> steps_;
  long long degree_ = 1;
  // caches for the full tower (valid when steps_ nonempty)
  Coords pi_coords_;
  Coords dprime_coords_;
  long long d_ = 0;

  friend class LElem;
};

}  // namespace ramac

#endif
