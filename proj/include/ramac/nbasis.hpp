#ifndef RAMAC_NBASIS_HPP
#define RAMAC_NBASIS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "ramac/tower.hpp"

namespace ramac {

// Deterministic RNG for reproducible sampling; mt19937_64 is fully pinned by
// the standard and no std distributions are used, so streams are identical
// across platforms for a fixed seed.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }

  // per-trial seed derived from (master seed, trial index), splitmix64 mix
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
};

// Rows are the monomial-basis coordinate vectors of the conjugates of rho;
// K[G] rho = L iff the rows are K-linearly independent.
struct ConjugateMatrix {
  std::vector<GaloisElem> row_labels;
  std::vector<std::vector<LaurentPoly>> rows;
};

ConjugateMatrix conjugate_matrix(const Tower& tower, const LElem& rho);

// Fraction-free (Bareiss) determinant over F_q[t,t^-1]. Rows are first
// cleared to nonnegative exponents, so the result is the determinant up to a
// sign and a monomial factor; the zero test is exact.
LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> rows, const FqField& field);

// Exact rank via fraction-free elimination (row ops only, no division).
long long matrix_rank(std::vector<std::vector<LaurentPoly>> rows, const FqField& field);

bool is_normal_generator(const Tower& tower, const LElem& rho);

// (-d - 1) mod p^n, with the derivative and break routes for d required to
// agree before the residue is reported.
long long criterion_residue(const Tower& tower);

// pi^i / p'(pi); throws NonRepresentableInverse when the inverse leaves the
// Laurent-polynomial subring (this happens on multi-step towers).
LElem euler_dual_basis(const Tower& tower, long long i);

struct EulerTraceReport {
  std::vector<int> traces;   // Tr(pi^i / p'(pi)) for i = 0..p^n-1, each 0 or 1
  bool direct_route_used = false;  // dual basis was representable and cross-checked
};

// Verifies Tr(pi^i/p'(pi)) = 0 for i <= p^n-2 and = 1 for i = p^n-1, exactly,
// through the denominator-cleared identity Tr(pi^i W) in {0, N} where
// W = prod_{sigma != 1} sigma(p'(pi)) and N = norm(p'(pi)). When 1/p'(pi) is
// representable the direct dual-basis traces are computed too and must agree.
EulerTraceReport verify_euler_traces(const Tower& tower);

// Seeded random element with v_L exactly v: random coefficients on the
// monomials of valuation v..v + budget*p^n - 1, rejection-resampled until the
// valuation is exact. Throws SamplerStarved after 100 rejected attempts.
LElem sample_element(const Tower& tower, long long v, DetRng& rng, long long budget);

// Trace-zero non-generator with v_L in the target class != r*: the element
// t^m pi^i / p'(pi) with i = (class + d) mod p^n, realized through the
// cleared form t^{m-d} pi^i W when the inverse is not representable (a K^x
// scaling, so class, zero trace and zero determinant are unaffected).
LElem sharpness_witness(const Tower& tower, long long target_class);

struct WitnessRecord {
  long long residue_class = 0;
  std::string element;
  std::string trace;   // always "0"
  long long vL = 0;
  bool is_generator = false;
};

struct CriterionReport {
  std::string tower_label;
  int p = 0;
  long long degree = 0;
  long long criterion_residue = 0;
  long long trials = 0;
  long long generators_found = 0;
  std::uint64_t seed = 0;
  std::vector<long long> trial_valuations;
  std::vector<WitnessRecord> witnesses;
  std::string note;
};

// Runs `trials` seeded samples in class r* over valuations r*, r*-p^n,
// r*+p^n, r*+2p^n and budgets 1..3; every sample must have nonzero trace and
// generate a normal basis, else CriterionViolated. Attaches a sharpness
// witness for every class != r*.
CriterionReport verify_criterion(const Tower& tower, long long trials, std::uint64_t seed,
                                 const std::string& label = "");

struct CounterexampleRecord {
  std::string kind;  // "tame" or "unramified"
  int q = 0;
  int param = 0;  // e (tame) or f (unramified)
  long long i = 0;
  std::string rho;
  std::vector<std::string> conjugates;
  long long span_dim = 0;   // dim_K K[G] rho, always 1 here
  long long full_dim = 0;   // e or f
  bool det_is_zero = false;
  bool is_generator = false;
};

// L = K(s), s^e = t, tame cyclic of degree e: rho_i = s^i is an eigenvector
// of the Galois action, so a valuation-i non-generator exists for every i.
CounterexampleRecord tame_counterexample(int q, int e, long long i);

// L = F_{q^f}((t)) unramified: rho_i = t^i is Galois-fixed. Supported for
// prime q.
CounterexampleRecord unramified_counterexample(int q, int f, long long i);

}  // namespace ramac

#endif
