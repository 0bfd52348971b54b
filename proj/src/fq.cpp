#include "ramac/fq.hpp"

#include <map>
#include <mutex>

namespace ramac {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NonMonomialDivisor: return "NonMonomialDivisor";
    case Errc::ZeroRhs: return "ZeroRhs";
    case Errc::NotFullyRamified: return "NotFullyRamified";
    case Errc::NonIncreasingUpperBreak: return "NonIncreasingUpperBreak";
    case Errc::TowerMismatch: return "TowerMismatch";
    case Errc::GaloisStabilityViolated: return "GaloisStabilityViolated";
    case Errc::NonRepresentableInverse: return "NonRepresentableInverse";
    case Errc::DifferentMismatch: return "DifferentMismatch";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::TraceIdealViolated: return "TraceIdealViolated";
    case Errc::EulerIdentityViolated: return "EulerIdentityViolated";
    case Errc::CriterionViolated: return "CriterionViolated";
    case Errc::InvalidClass: return "InvalidClass";
    case Errc::BadParameters: return "BadParameters";
    case Errc::SamplerStarved: return "SamplerStarved";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

namespace {

// Fixed moduli: lexicographically smallest monic irreducible of degree f
// over F_p (constant coefficient varies fastest). For f = 1 the modulus is x,
// so the generator image is 0; `g` is never exposed for prime fields.
struct ModulusRow {
  int p, f;
  std::array<std::uint8_t, 5> mod;  // low -> high, length f+1 used
};

constexpr ModulusRow kModuli[] = {
    {2, 1, {0, 1, 0, 0, 0}},
    {2, 2, {1, 1, 1, 0, 0}},
    {2, 3, {1, 1, 0, 1, 0}},
    {2, 4, {1, 1, 0, 0, 1}},
    {3, 1, {0, 1, 0, 0, 0}},
    {3, 2, {1, 0, 1, 0, 0}},
    {3, 3, {1, 2, 0, 1, 0}},
    {3, 4, {1, 1, 0, 1, 1}},
    {5, 1, {0, 1, 0, 0, 0}},
    {5, 2, {1, 1, 1, 0, 0}},
    {5, 3, {1, 0, 1, 1, 0}},
    {5, 4, {1, 0, 1, 1, 1}},
};

int mod_p(long long v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

// Plain F_p[x] helpers on small coefficient vectors, used by the
// irreducibility check only.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& b, int p) {
  int db = static_cast<int>(b.size()) - 1;
  int inv_lead = 1;
  for (int i = 1; i < p; ++i)
    if (b[db] * i % p == 1) inv_lead = i;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    int c = a[da] * inv_lead % p;
    if (c != 0)
      for (int i = 0; i <= db; ++i) a[da - db + i] = mod_p(a[da - db + i] - c * b[i], p);
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

bool FqField::check_irreducible(int p, std::span<const std::uint8_t> poly) {
  int f = static_cast<int>(poly.size()) - 1;
  if (f < 1 || poly[f] % p != 1) return false;
  Poly target(poly.begin(), poly.end());
  // Trial division by every monic polynomial of degree 1..f/2.
  for (int d = 1; 2 * d <= f; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      div[d] = 1;
      long v = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(v % p);
        v /= p;
      }
      if (poly_mod(target, div, p).empty()) return false;
    }
  }
  return true;
}

FqField::FqField(int p, int f, std::array<std::uint8_t, 5> mod) : p_(p), f_(f), mod_(mod) {
  q_ = 1;
  for (int i = 0; i < f; ++i) q_ *= p;
  require(check_irreducible(p, modulus()), Errc::BadParameters, "modulus is reducible");
  // x^f = -(mod_0 + mod_1 x + ... + mod_{f-1} x^{f-1})
  xf_red_.fill(0);
  for (int i = 0; i < f; ++i) xf_red_[i] = static_cast<std::uint8_t>(mod_p(-mod_[i], p));
}

const FqField& FqField::get(int p, int f) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, const FqField*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, f});
  if (it != cache.end()) return *it->second;
  for (const auto& row : kModuli) {
    if (row.p == p && row.f == f) {
      const FqField* field = new FqField(p, f, row.mod);  // interned for process lifetime
      cache.emplace(std::make_pair(p, f), field);
      return *field;
    }
  }
  fail(Errc::BadParameters,
       "unsupported field F_" + std::to_string(p) + "^" + std::to_string(f) +
           " (p in {2,3,5}, f <= 4)");
}

FqElem FqField::zero() const { return make({0, 0, 0, 0}); }

FqElem FqField::one() const {
  std::array<std::uint8_t, 4> c{};
  c[0] = static_cast<std::uint8_t>(1 % p_);
  return make(c);
}

FqElem FqField::gen() const {
  std::array<std::uint8_t, 4> c{};
  if (f_ == 1) {
    c[0] = xf_red_[0];  // image of x under F_p[x]/(x - a)
  } else {
    c[1] = 1;
  }
  return make(c);
}

FqElem FqField::from_int(long long n) const {
  std::array<std::uint8_t, 4> c{};
  c[0] = static_cast<std::uint8_t>(mod_p(n, p_));
  return make(c);
}

FqElem FqField::element(std::span<const int> coeffs) const {
  require(coeffs.size() <= static_cast<std::size_t>(f_), Errc::BadParameters,
          "coefficient vector longer than field degree");
  std::array<std::uint8_t, 4> c{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<std::uint8_t>(mod_p(coeffs[i], p_));
  return make(c);
}

FqElem FqField::element_at(long index) const {
  require(index >= 0 && index < q_, Errc::BadParameters, "element index out of range");
  std::array<std::uint8_t, 4> c{};
  for (int i = 0; i < f_; ++i) {
    c[i] = static_cast<std::uint8_t>(index % p_);
    index /= p_;
  }
  return make(c);
}

bool FqElem::is_zero() const {
  for (int i = 0; i < f_; ++i)
    if (c_[i]) return false;
  return true;
}

bool FqElem::is_one() const { return *this == field_->one(); }

bool FqElem::operator==(const FqElem& rhs) const {
  require(field_ == rhs.field_, Errc::FieldMismatch, "comparing elements of different fields");
  return c_ == rhs.c_;
}

FqElem FqElem::operator-() const {
  int p = field_->p();
  std::array<std::uint8_t, 4> c{};
  for (int i = 0; i < f_; ++i) c[i] = static_cast<std::uint8_t>(mod_p(-c_[i], p));
  return FqElem(field_, c, f_);
}

FqElem FqElem::operator+(const FqElem& rhs) const {
  require(field_ == rhs.field_, Errc::FieldMismatch, "adding elements of different fields");
  int p = field_->p();
  std::array<std::uint8_t, 4> c{};
  for (int i = 0; i < f_; ++i) c[i] = static_cast<std::uint8_t>(mod_p(c_[i] + rhs.c_[i], p));
  return FqElem(field_, c, f_);
}

FqElem FqElem::operator-(const FqElem& rhs) const { return *this + (-rhs); }

FqElem FqElem::operator*(const FqElem& rhs) const {
  require(field_ == rhs.field_, Errc::FieldMismatch, "multiplying elements of different fields");
  int p = field_->p();
  int f = f_;
  // schoolbook product then reduce x^f repeatedly via the cached image
  std::array<int, 7> prod{};
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) prod[i + j] = mod_p(prod[i + j] + c_[i] * rhs.c_[j], p);
  for (int d = 2 * f - 2; d >= f; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < f; ++i) prod[d - f + i] = mod_p(prod[d - f + i] + c * field_->xf_red_[i], p);
  }
  std::array<std::uint8_t, 4> out{};
  for (int i = 0; i < f; ++i) out[i] = static_cast<std::uint8_t>(prod[i]);
  return FqElem(field_, out, f_);
}

FqElem FqElem::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  FqElem base = *this;
  FqElem acc = field_->one();
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

FqElem FqElem::inv() const {
  require(!is_zero(), Errc::DivisionByZero, "inverse of zero field element");
  return pow(field_->q() - 2);
}

FqElem FqElem::operator/(const FqElem& rhs) const { return *this * rhs.inv(); }

FqElem FqElem::frobenius() const { return pow(field_->p()); }

FqElem FqElem::pth_root() const {
  // Frobenius is bijective on F_q; its inverse is a -> a^(p^(f-1)).
  long long e = 1;
  for (int i = 0; i < field_->f() - 1; ++i) e *= field_->p();
  return pow(e);
}

std::string FqElem::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = f_ - 1; i >= 0; --i) {
    if (!c_[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(static_cast<int>(c_[i]));
    } else {
      if (c_[i] != 1) out += std::to_string(static_cast<int>(c_[i])) + "*";
      out += (i == 1) ? "g" : "g^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace ramac
