// Test-only oracles, kept independent of the library's elimination code:
// naive Gaussian elimination over the fraction field F_q(t), with rational
// entries stored as unreduced numerator/denominator pairs.
#ifndef RAMAC_TESTS_ORACLE_HPP
#define RAMAC_TESTS_ORACLE_HPP

#include <optional>
#include <vector>

#include "ramac/laurent.hpp"

namespace ramac::oracle {

struct RatFn {
  LaurentPoly num, den;

  static RatFn of(const LaurentPoly& p) {
    return {p, LaurentPoly::constant(p.field(), 1)};
  }
  bool is_zero() const { return num.is_zero(); }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) { return {a.num * b.num, a.den * b.den}; }
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return (a.num * b.den) == (b.num * a.den);
  }
};

// determinant-zero verdict by textbook elimination with division
inline bool naive_det_is_zero(const std::vector<std::vector<LaurentPoly>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<RatFn>> m;
  for (const auto& r : rows) {
    std::vector<RatFn> row;
    for (const auto& e : r) row.push_back(RatFn::of(e));
    m.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return true;
    std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      RatFn f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
  }
  return false;  // all pivots nonzero
}

// Solve M x = b over F_q(t); nullopt when the system is inconsistent or the
// matrix is singular in a way that leaves b unreachable.
inline std::optional<std::vector<RatFn>> solve_linear(
    const std::vector<std::vector<LaurentPoly>>& rows, const std::vector<LaurentPoly>& rhs) {
  const std::size_t n = rows.size();
  std::vector<std::vector<RatFn>> m;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RatFn> row;
    for (const auto& e : rows[i]) row.push_back(RatFn::of(e));
    row.push_back(RatFn::of(rhs[i]));
    m.push_back(std::move(row));
  }
  // forward elimination
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      RatFn f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < n; ++i)
    if (!m[i][n].is_zero()) return std::nullopt;
  // back substitution, free variables set to zero
  std::vector<RatFn> x(n, RatFn::of(LaurentPoly(rhs[0].field())));
  for (std::size_t r = rank; r-- > 0;) {
    std::size_t c = pivot_col[r];
    RatFn acc = m[r][n];
    for (std::size_t j = c + 1; j < n; ++j) acc = acc - m[r][j] * x[j];
    x[c] = acc / m[r][c];
  }
  return x;
}

}  // namespace ramac::oracle

#endif
