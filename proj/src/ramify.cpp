#include "ramac/ramify.hpp"

#include <algorithm>
#include <set>

namespace ramac {

namespace {
long long pos_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

RamificationData filtration(const Tower& tower) {
  require(tower.num_steps() >= 1, Errc::BadParameters, "trivial tower has no filtration");
  RamificationData rd;
  LElem pi = tower.prime_element();
  std::set<long long> break_set;
  for (long long idx = 1; idx < tower.group_order(); ++idx) {
    GaloisElem sigma = tower.galois_elem(idx);
    Valuation v = tower.valuation(tower.galois_apply(sigma, pi) - pi);
    rd.i_table.emplace_back(sigma, v.value());
    break_set.insert(v.value() - 1);  // sigma in G_b \ G_{b+1} with b = i_G - 1
  }
  rd.lower_breaks.assign(break_set.begin(), break_set.end());
  for (long long b : rd.lower_breaks) {
    long long order = 1;  // identity
    for (const auto& [sigma, ig] : rd.i_table)
      if (ig >= b + 1) ++order;
    rd.orders.push_back(order);
  }
  rd.d_derivative = tower.different_exponent();
  return rd;
}

long long different_via_breaks(const RamificationData& rd) {
  const auto& b = rd.lower_breaks;
  const auto& g = rd.orders;
  long long d = (1 + b[0]) * (g[0] - 1);
  for (std::size_t i = 1; i < b.size(); ++i) d += (b[i] - b[i - 1]) * (g[i] - 1);
  require(d == rd.d_derivative, Errc::DifferentMismatch,
          "break formula gives " + std::to_string(d) + " but v_L(p'(pi)) = " +
              std::to_string(rd.d_derivative));
  return d;
}

std::vector<Rational> herbrand_upper(const RamificationData& rd) {
  const auto& b = rd.lower_breaks;
  const auto& g = rd.orders;
  const long long pn = g[0];
  std::vector<Rational> u;
  long long acc = b[0] * g[0];
  u.emplace_back(acc, pn);
  for (std::size_t i = 1; i < b.size(); ++i) {
    acc += (b[i] - b[i - 1]) * g[i];
    u.emplace_back(acc, pn);
  }
  return u;
}

RamificationData ramification_data(const Tower& tower) {
  RamificationData rd = filtration(tower);
  require(rd.orders[0] == tower.degree(), Errc::IdentityViolated, "g_1 != [L:K]");
  rd.d_breaks = different_via_breaks(rd);
  // third route: reconstruct the chain and sum |G_i| - 1 over i >= 0
  long long d3 = 0;
  for (long long i = 0;; ++i) {
    long long order = 1;
    for (const auto& [sigma, ig] : rd.i_table)
      if (ig >= i + 1) ++order;
    if (order == 1) break;
    d3 += order - 1;
  }
  rd.d_igsum = d3;
  require(rd.d_igsum == rd.d_derivative, Errc::DifferentMismatch,
          "sum over G_i disagrees with v_L(p'(pi))");
  rd.upper_breaks = herbrand_upper(rd);
  rd.criterion_residue = pos_mod(-rd.d_derivative - 1, tower.degree());
  return rd;
}

PropositionReport proposition_check(const RamificationData& rd) {
  PropositionReport rep;
  rep.d = rd.d_derivative;
  rep.g1 = rd.orders[0];
  rep.b_m = rd.lower_breaks.back();
  rep.u_m = rd.upper_breaks.back();
  rep.criterion_residue = rd.criterion_residue;
  const long long pn = rep.g1;
  // p^n u_m is an integer by construction of the Herbrand sum
  long long pn_um = rep.u_m.num * (pn / rep.u_m.den);
  rep.identity_holds = (rep.d + 1 == rep.g1 - rep.b_m + pn_um);
  rep.congruence_holds = pos_mod(rep.d + 1 - (pn_um - rep.b_m), pn) == 0;
  rep.hasse_arf_integral = true;
  for (const auto& u : rd.upper_breaks)
    if (!u.is_integer()) rep.hasse_arf_integral = false;
  rep.remark_holds = pos_mod(rep.criterion_residue - rep.b_m, pn) == 0;
  require(rep.identity_holds, Errc::IdentityViolated, "d + 1 != g_1 - b_m + p^n u_m");
  require(rep.congruence_holds, Errc::IdentityViolated,
          "d + 1 != p^n u_m - b_m mod [L:K]");
  require(rep.hasse_arf_integral, Errc::IdentityViolated,
          "upper break is not an integer on an abelian tower");
  require(rep.remark_holds, Errc::IdentityViolated, "criterion residue != b_m mod p^n");
  return rep;
}

TraceIdealReport trace_ideal_check(const Tower& tower, long long k_min, long long k_max) {
  require(tower.num_steps() >= 1, Errc::BadParameters, "trivial tower");
  require(k_min <= k_max, Errc::BadParameters, "empty k window");
  TraceIdealReport rep;
  const long long pn = tower.degree();
  const long long d = tower.different_exponent();
  rep.d = d;

  // Element with v_L = p^n - 1 - d and trace of valuation exactly 0: the top
  // Euler dual element when 1/p'(pi) is representable, else its K-scaling by
  // norm(p'(pi)) (valuation d p^n), which shifts v_L by d p^n and the trace
  // valuation by d.
  LElem dprime = tower.derivative_at_prime();
  LElem pi_top = tower.prime_element().pow(pn - 1);
  LElem top_dual = tower.zero();
  try {
    top_dual = pi_top * tower.invert(dprime);
  } catch (const Error& e) {
    if (e.code() != Errc::NonRepresentableInverse) throw;
    top_dual = (pi_top * tower.cofactor(dprime))
                   .scaled(LaurentPoly::monomial(tower.base_field(), -d, 1));
  }
  require(top_dual.valuation() == Valuation::of(pn - 1 - d), Errc::TraceIdealViolated,
          "dual witness has wrong valuation");

  for (long long k = k_min; k <= k_max; ++k) {
    TraceIdealReport::Row row;
    row.k = k;
    row.floor_vL = k * pn - d;
    // (a) containment on one full period of monomial valuations; every other
    // monomial is a t-power multiple of one of these.
    row.containment_holds = true;
    for (long long v = row.floor_vL; v < row.floor_vL + pn; ++v) {
      LElem beta = tower.monomial_with_valuation(v);
      Valuation vk = beta.trace().valuation();
      if (vk < Valuation::of(k)) row.containment_holds = false;
    }
    require(row.containment_holds, Errc::TraceIdealViolated,
            "Tr does not map v_L >= " + std::to_string(row.floor_vL) + " into v_K >= " +
                std::to_string(k));
    // (b) boundary witness one below the floor
    LElem beta = top_dual.scaled(LaurentPoly::monomial(tower.base_field(), k - 1, 1));
    row.witness_vL = beta.valuation().value();
    require(row.witness_vL == k * pn - d - 1, Errc::TraceIdealViolated,
            "witness valuation is off");
    Valuation vt = beta.trace().valuation();
    require(vt == Valuation::of(k - 1), Errc::TraceIdealViolated,
            "witness trace does not reach v_K = k - 1");
    row.witness_trace_vK = vt.value();
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace ramac
