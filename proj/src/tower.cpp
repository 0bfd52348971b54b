#include "ramac/tower.hpp"

#include <algorithm>

namespace ramac {

namespace {
long long pos_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

// ---------------------------------------------------------------- LElem ----

bool LElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Valuation LElem::valuation() const { return t_->valuation(*this); }

LElem LElem::operator-() const {
  std::vector<LaurentPoly> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(-c);
  return LElem(t_, std::move(out));
}

LElem LElem::operator+(const LElem& rhs) const {
  require(t_ == rhs.t_, Errc::TowerMismatch, "adding elements of different towers");
  std::vector<LaurentPoly> out;
  out.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(c_[i] + rhs.c_[i]);
  return LElem(t_, std::move(out));
}

LElem LElem::operator-(const LElem& rhs) const { return *this + (-rhs); }

LElem LElem::operator*(const LElem& rhs) const {
  require(t_ == rhs.t_, Errc::TowerMismatch, "multiplying elements of different towers");
  return t_->wrap(t_->c_mul(c_, rhs.c_, t_->num_steps()));
}

LElem LElem::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  return t_->wrap(t_->c_pow(c_, e, t_->num_steps()));
}

LElem LElem::scaled(const LaurentPoly& k) const { return t_->wrap(t_->c_scale(c_, k)); }

LElem LElem::galois(const GaloisElem& sigma) const { return t_->galois_apply(sigma, *this); }
LaurentPoly LElem::trace() const { return t_->trace(*this); }
LaurentPoly LElem::norm() const { return t_->norm(*this); }
LElem LElem::inverse() const { return t_->invert(*this); }

bool LElem::operator==(const LElem& rhs) const {
  require(t_ == rhs.t_, Errc::TowerMismatch, "comparing elements of different towers");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != rhs.c_[i]) return false;
  return true;
}

// ------------------------------------------------- raw coordinate layer ----

Tower::Coords Tower::c_zero(int level) const {
  std::size_t sz = 1;
  for (int i = 0; i < level; ++i) sz *= static_cast<std::size_t>(p());
  return Coords(sz, LaurentPoly(*field_));
}

Tower::Coords Tower::c_one(int level) const {
  Coords c = c_zero(level);
  c[0] = LaurentPoly::constant(*field_, 1);
  return c;
}

Tower::Coords Tower::c_lift(const Coords& a, int to_level) const {
  // Lifting only pads with zero coordinates: indices below p^level already
  // encode zero exponents for the new variables.
  Coords out = c_zero(to_level);
  std::copy(a.begin(), a.end(), out.begin());
  return out;
}

bool Tower::c_is_zero(const Coords& a) const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

Tower::Coords Tower::c_add(const Coords& a, const Coords& b) const {
  Coords out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Tower::Coords Tower::c_sub(const Coords& a, const Coords& b) const {
  Coords out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Tower::Coords Tower::c_neg(const Coords& a) const {
  Coords out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(-c);
  return out;
}

Tower::Coords Tower::c_scale(const Coords& a, const LaurentPoly& k) const {
  Coords out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c * k);
  return out;
}

Tower::Coords Tower::c_mul(const Coords& a, const Coords& b, int level) const {
  if (level == 0) return Coords{a[0] * b[0]};
  const int pp = p();
  const std::size_t sz = a.size() / static_cast<std::size_t>(pp);
  auto chunk = [sz](const Coords& v, int j) {
    return Coords(v.begin() + static_cast<long>(sz) * j, v.begin() + static_cast<long>(sz) * (j + 1));
  };
  // multiply as polynomials in y_level, then fold y^p = y + r from the top
  std::vector<Coords> prod(static_cast<std::size_t>(2 * pp - 1), c_zero(level - 1));
  for (int i = 0; i < pp; ++i) {
    Coords ai = chunk(a, i);
    if (c_is_zero(ai)) continue;
    for (int j = 0; j < pp; ++j) {
      Coords bj = chunk(b, j);
      if (c_is_zero(bj)) continue;
      prod[static_cast<std::size_t>(i + j)] =
          c_add(prod[static_cast<std::size_t>(i + j)], c_mul(ai, bj, level - 1));
    }
  }
  const Coords& r = steps_[static_cast<std::size_t>(level - 1)].reduced_rhs;
  for (int d = 2 * pp - 2; d >= pp; --d) {
    Coords c = prod[static_cast<std::size_t>(d)];
    if (c_is_zero(c)) continue;
    prod[static_cast<std::size_t>(d)] = c_zero(level - 1);
    prod[static_cast<std::size_t>(d - pp + 1)] = c_add(prod[static_cast<std::size_t>(d - pp + 1)], c);
    prod[static_cast<std::size_t>(d - pp)] =
        c_add(prod[static_cast<std::size_t>(d - pp)], c_mul(c, r, level - 1));
  }
  Coords out;
  out.reserve(a.size());
  for (int j = 0; j < pp; ++j)
    for (const auto& c : prod[static_cast<std::size_t>(j)]) out.push_back(c);
  return out;
}

Tower::Coords Tower::c_pow(const Coords& a, long long e, int level) const {
  Coords acc = c_one(level);
  Coords base = a;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc = c_mul(acc, base, level);
    base = c_mul(base, base, level);
    k >>= 1;
  }
  return acc;
}

Valuation Tower::c_val(const Coords& a, int level) const {
  if (level == 0) return a[0].valuation();
  const int pp = p();
  const std::size_t sz = a.size() / static_cast<std::size_t>(pp);
  const long long b = steps_[static_cast<std::size_t>(level - 1)].step_break;
  Valuation best = Valuation::infinite();
  for (int j = 0; j < pp; ++j) {
    Coords cj(a.begin() + static_cast<long>(sz) * j, a.begin() + static_cast<long>(sz) * (j + 1));
    Valuation v = c_val(cj, level - 1);
    if (!v.is_finite()) continue;
    // v_k(a y^j) = p v_{k-1}(a) - j b'_k; the candidates land in distinct
    // residues mod p, so the minimum is attained exactly once.
    best = min(best, Valuation::of(static_cast<long long>(pp) * v.value() - static_cast<long long>(j) * b));
  }
  return best;
}

Tower::Leading Tower::c_leading(const Coords& a, int level) const {
  if (level == 0) {
    auto [e, c] = a[0].leading();
    return {e, c};
  }
  const int pp = p();
  const std::size_t sz = a.size() / static_cast<std::size_t>(pp);
  const long long b = steps_[static_cast<std::size_t>(level - 1)].step_break;
  bool have = false;
  long long best = 0;
  int best_j = 0;
  for (int j = 0; j < pp; ++j) {
    Coords cj(a.begin() + static_cast<long>(sz) * j, a.begin() + static_cast<long>(sz) * (j + 1));
    Valuation v = c_val(cj, level - 1);
    if (!v.is_finite()) continue;
    long long w = static_cast<long long>(pp) * v.value() - static_cast<long long>(j) * b;
    if (!have || w < best) {
      have = true;
      best = w;
      best_j = j;
    }
  }
  require(have, Errc::ZeroElement, "leading term of zero");
  Coords cj(a.begin() + static_cast<long>(sz) * best_j, a.begin() + static_cast<long>(sz) * (best_j + 1));
  Leading sub = c_leading(cj, level - 1);
  return {best, sub.coeff};
}

Tower::Coords Tower::c_monomial_with_val(long long v, int level) const {
  if (level == 0) return Coords{LaurentPoly::monomial(*field_, v, 1)};
  const int pp = p();
  const long long b = steps_[static_cast<std::size_t>(level - 1)].step_break;
  int e = 0;
  while (pos_mod(v + e * b, pp) != 0) ++e;  // b is prime to p, so e exists in [0,p)
  Coords sub = c_monomial_with_val((v + e * b) / pp, level - 1);
  Coords out = c_zero(level);
  std::copy(sub.begin(), sub.end(), out.begin() + static_cast<long>(sub.size()) * e);
  return out;
}

Tower::Coords Tower::c_galois(const GaloisElem& sigma, const Coords& a, int level) const {
  if (level == 0) return a;
  const int pp = p();
  const std::size_t sz = a.size() / static_cast<std::size_t>(pp);
  const TowerStep& st = steps_[static_cast<std::size_t>(level - 1)];
  // sigma(y_k) = y_k + delta with delta = c_k + w_k - sigma(w_k)
  Coords delta = c_zero(level - 1);
  delta[0] = LaurentPoly::constant(*field_, sigma.c[static_cast<std::size_t>(level - 1)]);
  delta = c_add(delta, c_sub(st.shift, c_galois(sigma, st.shift, level - 1)));
  Coords y_plus_delta = c_lift(delta, level);
  y_plus_delta[sz] += LaurentPoly::constant(*field_, 1);  // + y_level
  Coords out = c_zero(level);
  Coords pw = c_one(level);
  for (int j = 0; j < pp; ++j) {
    Coords aj(a.begin() + static_cast<long>(sz) * j, a.begin() + static_cast<long>(sz) * (j + 1));
    if (!c_is_zero(aj))
      out = c_add(out, c_mul(c_lift(c_galois(sigma, aj, level - 1), level), pw, level));
    if (j + 1 < pp) pw = c_mul(pw, y_plus_delta, level);
  }
  return out;
}

Tower::RawReduction Tower::c_reduce(const Coords& u, int level) const {
  require(!c_is_zero(u), Errc::ZeroRhs, "Artin-Schreier right-hand side is zero");
  const int pp = p();
  Coords r = u;
  Coords w = c_zero(level);
  for (;;) {
    Valuation v = c_val(r, level);
    if (!v.is_finite() || v.value() >= 0)
      fail(Errc::NotFullyRamified,
           "reduction reached valuation " + v.str() + "; the step is unramified or split");
    long long vv = v.value();
    if (vv % pp != 0) return {std::move(r), std::move(w), -vv};
    // kill the leading term with (beta mu)^p - beta mu where v(mu) = v/p
    Coords mu = c_monomial_with_val(vv / pp, level);
    Coords mu_p = c_pow(mu, pp, level);
    FqElem lam = c_leading(mu_p, level).coeff;
    FqElem a = c_leading(r, level).coeff;
    FqElem beta = (a * lam.inv()).pth_root();
    Coords term = c_scale(mu, LaurentPoly::monomial(*field_, 0, beta));
    w = c_add(w, term);
    r = c_sub(r, c_sub(c_pow(term, pp, level), term));
    Valuation v2 = c_val(r, level);
    if (v2.is_finite() && v2.value() <= vv)
      fail(Errc::IdentityViolated, "Artin-Schreier reduction failed to increase the valuation");
  }
}

// ---------------------------------------------------------------- Tower ----

Tower::Tower(const FqField& base) : field_(&base) {}

Tower::Tower(const FqField& base, const std::vector<LaurentPoly>& rhs_list) : field_(&base) {
  require(!rhs_list.empty(), Errc::BadParameters, "tower spec needs at least one step");
  for (const auto& u : rhs_list) append_step(u);
}

Tower Tower::extend(const LaurentPoly& u) const {
  Tower next = *this;
  next.append_step(u);
  return next;
}

void Tower::append_step(const LaurentPoly& u) {
  require(&u.field() == field_, Errc::FieldMismatch, "rhs from a different base field");
  require(!u.is_zero(), Errc::ZeroRhs, "Artin-Schreier right-hand side is zero");

  // Upper-numbering break of this step's class: reduce u over K itself.
  RawReduction base_red = c_reduce(Coords{u}, 0);
  long long upper = base_red.b;
  if (!steps_.empty())
    require(upper > steps_.back().upper_break, Errc::NonIncreasingUpperBreak,
            "new step's upper break " + std::to_string(upper) +
                " does not exceed the previous break " +
                std::to_string(steps_.back().upper_break));

  const int n = num_steps();
  RawReduction red = n == 0 ? std::move(base_red) : c_reduce(c_lift(Coords{u}, n), n);

  // Consistency with the Herbrand transfer: the step break seen at the top
  // level must be psi_{L_n/K}(upper).
  long long expected = n == 0 ? upper
                              : steps_.back().step_break + degree_ * (upper - steps_.back().upper_break);
  require(red.b == expected, Errc::IdentityViolated,
          "step break " + std::to_string(red.b) + " disagrees with the Herbrand image " +
              std::to_string(expected));

  const int pp = p();
  long long m = 1;
  while ((1 + red.b * m) % pp != 0) ++m;  // b prime to p => unique m in [1,p)
  long long s = (1 + red.b * m) / pp;

  TowerStep st{u,       std::move(red.r), std::move(red.w), red.b,
               upper,   s,                m,                {}};
  steps_.push_back(std::move(st));
  degree_ *= pp;

  // pi_k = pi_{k-1}^s y_k^m
  const int k = num_steps();
  Coords pi_prev = k == 1 ? Coords{LaurentPoly::monomial(*field_, 1, 1)}
                          : steps_[static_cast<std::size_t>(k - 2)].prime_coords;
  std::size_t sub_size = 1;
  for (int i = 1; i < k; ++i) sub_size *= static_cast<std::size_t>(pp);
  Coords y = c_zero(k);
  y[sub_size] = LaurentPoly::constant(*field_, 1);
  Coords pi = c_mul(c_pow(c_lift(pi_prev, k), s, k), c_pow(y, m, k), k);
  Valuation vpi = c_val(pi, k);
  require(vpi == Valuation::of(1), Errc::IdentityViolated,
          "prime element has valuation " + vpi.str());
  steps_.back().prime_coords = std::move(pi);

  refresh_invariants();
}

void Tower::refresh_invariants() {
  const int n = num_steps();
  pi_coords_ = steps_.back().prime_coords;  // level n by construction
  // d = sum over sigma != 1 of v_L(sigma pi - pi); also form the product
  // p'(pi) = prod (pi - sigma pi) and insist the two routes agree.
  long long d = 0;
  Coords prod = c_one(n);
  for (long long idx = 1; idx < degree_; ++idx) {
    GaloisElem sigma = galois_elem(idx);
    Coords conj = c_galois(sigma, pi_coords_, n);
    Coords diff = c_sub(pi_coords_, conj);
    Valuation v = c_val(diff, n);
    require(v.is_finite(), Errc::IdentityViolated, "conjugate of pi equals pi");
    d += v.value();
    prod = c_mul(prod, diff, n);
  }
  Valuation vprod = c_val(prod, n);
  require(vprod == Valuation::of(d), Errc::IdentityViolated,
          "v_L(p'(pi)) disagrees with the i_G sum");
  dprime_coords_ = std::move(prod);
  d_ = d;
}

LElem Tower::zero() const { return wrap(c_zero(num_steps())); }
LElem Tower::one() const { return wrap(c_one(num_steps())); }

LElem Tower::embed(const LaurentPoly& a) const {
  require(&a.field() == field_, Errc::FieldMismatch, "embedding from a different base field");
  Coords c = c_zero(num_steps());
  c[0] = a;
  return wrap(std::move(c));
}

LElem Tower::from_coords(std::vector<LaurentPoly> coords) const {
  require(coords.size() == static_cast<std::size_t>(degree_), Errc::BadParameters,
          "coordinate vector has wrong length");
  for (const auto& c : coords)
    require(&c.field() == field_, Errc::FieldMismatch, "coordinate from a different base field");
  return wrap(std::move(coords));
}

LElem Tower::reduced_root(int k) const {
  require(k >= 1 && k <= num_steps(), Errc::BadParameters, "root index out of range");
  Coords c = c_zero(num_steps());
  std::size_t idx = 1;
  for (int i = 1; i < k; ++i) idx *= static_cast<std::size_t>(p());
  c[idx] = LaurentPoly::constant(*field_, 1);
  return wrap(std::move(c));
}

LElem Tower::artin_schreier_root(int k) const {
  require(k >= 1 && k <= num_steps(), Errc::BadParameters, "root index out of range");
  Coords w = c_lift(steps_[static_cast<std::size_t>(k - 1)].shift, num_steps());
  LElem y = reduced_root(k);
  return y + wrap(std::move(w));
}

LElem Tower::prime_element() const {
  require(num_steps() >= 1, Errc::BadParameters, "trivial tower has no distinguished prime");
  return wrap(pi_coords_);
}

LElem Tower::monomial_basis_elem(long long idx) const {
  require(idx >= 0 && idx < degree_, Errc::BadParameters, "basis index out of range");
  Coords c = c_zero(num_steps());
  c[static_cast<std::size_t>(idx)] = LaurentPoly::constant(*field_, 1);
  return wrap(std::move(c));
}

LElem Tower::monomial_with_valuation(long long v) const {
  return wrap(c_monomial_with_val(v, num_steps()));
}

GaloisElem Tower::galois_elem(long long index) const {
  require(index >= 0 && index < degree_, Errc::BadParameters, "group index out of range");
  GaloisElem g = GaloisElem::identity(p(), num_steps());
  for (int i = 0; i < num_steps(); ++i) {
    g.c[static_cast<std::size_t>(i)] = static_cast<int>(index % p());
    index /= p();
  }
  return g;
}

Valuation Tower::valuation(const LElem& a) const {
  check_same_tower(a);
  return c_val(a.c_, num_steps());
}

LElem Tower::galois_apply(const GaloisElem& sigma, const LElem& a) const {
  check_same_tower(a);
  require(sigma.p == p() && sigma.c.size() == static_cast<std::size_t>(num_steps()),
          Errc::TowerMismatch, "automorphism of a different group");
  return wrap(c_galois(sigma, a.c_, num_steps()));
}

LaurentPoly Tower::trace(const LElem& a) const {
  check_same_tower(a);
  const int n = num_steps();
  Coords acc = c_zero(n);
  for (long long idx = 0; idx < degree_; ++idx)
    acc = c_add(acc, c_galois(galois_elem(idx), a.c_, n));
  for (std::size_t i = 1; i < acc.size(); ++i)
    require(acc[i].is_zero(), Errc::GaloisStabilityViolated,
            "trace has a nonzero coordinate outside K");
  return acc[0];
}

LaurentPoly Tower::norm(const LElem& a) const {
  check_same_tower(a);
  const int n = num_steps();
  Coords acc = c_one(n);
  for (long long idx = 0; idx < degree_; ++idx)
    acc = c_mul(acc, c_galois(galois_elem(idx), a.c_, n), n);
  for (std::size_t i = 1; i < acc.size(); ++i)
    require(acc[i].is_zero(), Errc::GaloisStabilityViolated,
            "norm has a nonzero coordinate outside K");
  return acc[0];
}

LElem Tower::cofactor(const LElem& a) const {
  check_same_tower(a);
  const int n = num_steps();
  Coords acc = c_one(n);
  for (long long idx = 1; idx < degree_; ++idx)
    acc = c_mul(acc, c_galois(galois_elem(idx), a.c_, n), n);
  return wrap(std::move(acc));
}

LElem Tower::invert(const LElem& a) const {
  check_same_tower(a);
  require(!a.is_zero(), Errc::ZeroElement, "inverse of zero");
  const int n = num_steps();
  LElem cof = cofactor(a);
  Coords prod = c_mul(cof.c_, a.c_, n);
  for (std::size_t i = 1; i < prod.size(); ++i)
    require(prod[i].is_zero(), Errc::GaloisStabilityViolated,
            "norm has a nonzero coordinate outside K");
  const LaurentPoly& nrm = prod[0];
  Coords out;
  out.reserve(cof.c_.size());
  for (const auto& c : cof.c_) {
    auto q = c.divided_exactly(nrm);
    require(q.has_value(), Errc::NonRepresentableInverse,
            "inverse leaves the Laurent-polynomial subring");
    out.push_back(std::move(*q));
  }
  LElem inv = wrap(std::move(out));
  require((inv * a) == one(), Errc::IdentityViolated, "inverse check a * a^-1 = 1 failed");
  return inv;
}

Tower::Reduction Tower::reduce_artin_schreier(const LElem& u) const {
  check_same_tower(u);
  RawReduction red = c_reduce(u.c_, num_steps());
  // exact postcondition check: u - r - (w^p - w) = 0
  Coords wp = c_pow(red.w, p(), num_steps());
  Coords recon = c_add(red.r, c_sub(wp, red.w));
  require(c_is_zero(c_sub(u.c_, recon)), Errc::IdentityViolated,
          "reduction identity u = r + w^p - w failed");
  return {wrap(std::move(red.r)), wrap(std::move(red.w)), red.b};
}

long long Tower::different_exponent() const {
  require(num_steps() >= 1, Errc::BadParameters, "trivial tower has no different");
  return d_;
}

LElem Tower::derivative_at_prime() const {
  require(num_steps() >= 1, Errc::BadParameters, "trivial tower has no different");
  return wrap(dprime_coords_);
}

std::vector<LaurentPoly> Tower::min_poly() const {
  require(num_steps() >= 1, Errc::BadParameters, "trivial tower has no distinguished prime");
  const int n = num_steps();
  // prod over sigma of (X - sigma pi), coefficients tracked as tower elements
  std::vector<Coords> poly{c_one(n)};
  for (long long idx = 0; idx < degree_; ++idx) {
    Coords conj = c_galois(galois_elem(idx), pi_coords_, n);
    std::vector<Coords> next(poly.size() + 1, c_zero(n));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = c_add(next[i + 1], poly[i]);
      next[i] = c_sub(next[i], c_mul(poly[i], conj, n));
    }
    poly = std::move(next);
  }
  std::vector<LaurentPoly> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    for (std::size_t i = 1; i < c.size(); ++i)
      require(c[i].is_zero(), Errc::GaloisStabilityViolated,
              "minimal polynomial coefficient lies outside K");
    coeffs.push_back(c[0]);
  }
  // p(pi) = 0, by Horner
  Coords acc = c_zero(n);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = c_mul(acc, pi_coords_, n);
    Coords ci = c_zero(n);
    ci[0] = coeffs[i];
    acc = c_add(acc, ci);
  }
  require(c_is_zero(acc), Errc::IdentityViolated, "p(pi) != 0");
  // p'(pi) agrees with the conjugate-difference product
  Coords dacc = c_zero(n);
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    dacc = c_mul(dacc, pi_coords_, n);
    Coords ci = c_zero(n);
    ci[0] = coeffs[i].scaled(field_->from_int(static_cast<long long>(i)));
    dacc = c_add(dacc, ci);
  }
  require(c_is_zero(c_sub(dacc, dprime_coords_)), Errc::IdentityViolated,
          "p'(pi) disagrees with the conjugate-difference product");
  return coeffs;
}

}  // namespace ramac
