#ifndef RAMAC_RAMIFY_HPP
#define RAMAC_RAMIFY_HPP

#include "ramac/rational.hpp"
#include "ramac/tower.hpp"

namespace ramac {

// Ramification invariants of a tower: the i_G table determines everything
// else, so the filtration is kept sparsely and the chain G_0 >= G_1 >= ...
// is reconstructed on demand.
struct RamificationData {
  std::vector<std::pair<GaloisElem, long long>> i_table;  // i_G(sigma) for sigma != 1
  std::vector<long long> lower_breaks;                    // b_1 < ... < b_m
  std::vector<long long> orders;                          // g_i = |G_{b_i}|
  std::vector<Rational> upper_breaks;                     // u_i = phi(b_i)
  long long d_derivative = 0;  // v_L(p'(pi_L))
  long long d_breaks = 0;      // break-formula value
  long long d_igsum = 0;       // sum over i >= 0 of (|G_i| - 1)
  long long criterion_residue = 0;  // (-d - 1) mod p^n
};

// i_G(sigma) = v_L(sigma pi - pi), breaks, orders. Upper breaks and the
// d fields other than d_derivative are left to the functions below.
RamificationData filtration(const Tower& tower);

// d = (1+b_1)(g_1-1) + sum_{i>=2} (b_i - b_{i-1})(g_i - 1); throws
// DifferentMismatch when it disagrees with d_derivative.
long long different_via_breaks(const RamificationData& rd);

// Herbrand conversion to upper numbering, exact rationals:
// u_j = (1/p^n) (b_1 g_1 + sum_{i=2..j} (b_i - b_{i-1}) g_i).
std::vector<Rational> herbrand_upper(const RamificationData& rd);

// filtration + both d routes + upper breaks + residue, cross-checked.
RamificationData ramification_data(const Tower& tower);

struct PropositionReport {
  long long d = 0;
  long long g1 = 0;
  long long b_m = 0;
  Rational u_m;
  long long criterion_residue = 0;
  bool identity_holds = false;     // d + 1 = g_1 - b_m + p^n u_m
  bool congruence_holds = false;   // d + 1 = p^n u_m - b_m  mod p^n
  bool hasse_arf_integral = false; // all u_i integers (abelian towers)
  bool remark_holds = false;       // criterion_residue = b_m mod p^n
};

// Verifies the exact identity d+1 = g_1 - b_m + p^n u_m, the congruence mod
// p^n, Hasse-Arf integrality and the abelian remark residue = b_m mod p^n.
// Throws IdentityViolated if any of them fails.
PropositionReport proposition_check(const RamificationData& rd);

struct TraceIdealReport {
  struct Row {
    long long k = 0;
    long long floor_vL = 0;          // k p^n - d
    bool containment_holds = false;  // v_L(beta) >= k p^n - d  =>  v_K(Tr beta) >= k
    long long witness_vL = 0;        // = k p^n - d - 1
    long long witness_trace_vK = 0;  // = k - 1
  };
  long long d = 0;
  std::vector<Row> rows;
};

// Tr maps {v_L >= k p^n - d} into {v_K >= k}, checked on one full period of
// monomials, and the boundary witness of valuation k p^n - d - 1 achieves
// v_K = k - 1 exactly. Throws TraceIdealViolated on failure.
TraceIdealReport trace_ideal_check(const Tower& tower, long long k_min, long long k_max);

}  // namespace ramac

#endif
