#include "ramac/nbasis.hpp"

#include <algorithm>

#include "ramac/expr.hpp"
#include "ramac/ramify.hpp"

namespace ramac {

namespace {
long long pos_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

std::uint64_t DetRng::derive(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ConjugateMatrix conjugate_matrix(const Tower& tower, const LElem& rho) {
  ConjugateMatrix m;
  for (long long idx = 0; idx < tower.group_order(); ++idx) {
    GaloisElem sigma = tower.galois_elem(idx);
    m.rows.push_back(tower.galois_apply(sigma, rho).coords());
    m.row_labels.push_back(std::move(sigma));
  }
  return m;
}

LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> rows, const FqField& field) {
  const std::size_t n = rows.size();
  LaurentPoly zero(field);
  if (n == 0) return LaurentPoly::constant(field, 1);
  // clear each row to nonnegative exponents (changes det by a unit monomial)
  for (auto& row : rows) {
    long long mn = 0;
    bool any = false;
    for (const auto& e : row)
      if (!e.is_zero()) {
        long long v = e.valuation().value();
        mn = any ? std::min(mn, v) : v;
        any = true;
      }
    if (!any) return zero;
    if (mn < 0)
      for (auto& e : row) e = e.shifted(-mn);
  }
  LaurentPoly prev = LaurentPoly::constant(field, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && rows[piv][k].is_zero()) ++piv;
    if (piv == n) return zero;
    if (piv != k) std::swap(rows[piv], rows[k]);  // det sign flips; zero test unaffected
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        auto q = num.divided_exactly(prev);
        require(q.has_value(), Errc::IdentityViolated, "Bareiss division was not exact");
        rows[i][j] = std::move(*q);
      }
      rows[i][k] = zero;
    }
    prev = rows[k][k];
  }
  return rows[n - 1][n - 1];
}

long long matrix_rank(std::vector<std::vector<LaurentPoly>> rows, const FqField& field) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      // cross-multiplied row reduction keeps everything in the ring
      for (std::size_t j = 0; j < ncols; ++j)
        rows[i][j] = rows[i][j] * rows[r][c] - rows[r][j] * rows[i][c];
    }
    ++r;
  }
  (void)field;
  return static_cast<long long>(r);
}

bool is_normal_generator(const Tower& tower, const LElem& rho) {
  if (rho.is_zero()) return false;
  ConjugateMatrix m = conjugate_matrix(tower, rho);
  return !bareiss_determinant(std::move(m.rows), tower.base_field()).is_zero();
}

long long criterion_residue(const Tower& tower) {
  // ramification_data cross-checks the derivative and break routes for d
  RamificationData rd = ramification_data(tower);
  return rd.criterion_residue;
}

LElem euler_dual_basis(const Tower& tower, long long i) {
  require(i >= 0 && i < tower.degree(), Errc::BadParameters, "dual basis index out of range");
  const long long d = tower.different_exponent();
  LElem dual = tower.prime_element().pow(i) * tower.invert(tower.derivative_at_prime());
  require(dual.valuation() == Valuation::of(i - d), Errc::IdentityViolated,
          "dual basis element has wrong valuation");
  return dual;
}

EulerTraceReport verify_euler_traces(const Tower& tower) {
  const long long pn = tower.degree();
  LElem dprime = tower.derivative_at_prime();
  LElem w = tower.cofactor(dprime);          // W = N / p'(pi)
  LaurentPoly n_poly = tower.norm(dprime);   // N
  LaurentPoly zero(tower.base_field());
  EulerTraceReport rep;
  LElem acc = w;
  LElem pi = tower.prime_element();
  for (long long i = 0; i < pn; ++i) {
    LaurentPoly tr = tower.trace(acc);  // = N * Tr(pi^i / p'(pi))
    LaurentPoly expected = (i == pn - 1) ? n_poly : zero;
    require(tr == expected, Errc::EulerIdentityViolated,
            "Tr(pi^" + std::to_string(i) + "/p'(pi)) != " + (i == pn - 1 ? "1" : "0"));
    rep.traces.push_back(i == pn - 1 ? 1 : 0);
    if (i + 1 < pn) acc *= pi;
  }
  // When 1/p'(pi) is representable, also run the direct route and compare.
  try {
    LElem dual = tower.invert(dprime);
    rep.direct_route_used = true;
    LElem acc2 = dual;
    for (long long i = 0; i < pn; ++i) {
      LaurentPoly tr = tower.trace(acc2);
      LaurentPoly expected =
          (i == pn - 1) ? LaurentPoly::constant(tower.base_field(), 1) : zero;
      require(tr == expected, Errc::EulerIdentityViolated,
              "direct dual-basis trace disagrees at i = " + std::to_string(i));
      if (i + 1 < pn) acc2 *= pi;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NonRepresentableInverse) throw;
    rep.direct_route_used = false;
  }
  return rep;
}

LElem sample_element(const Tower& tower, long long v, DetRng& rng, long long budget) {
  require(budget >= 1, Errc::BadParameters, "sampler budget must be positive");
  const long long q = tower.base_field().q();
  const long long window = budget * tower.degree();
  for (int attempt = 0; attempt < 100; ++attempt) {
    LElem elem = tower.zero();
    for (long long j = 0; j < window; ++j) {
      long long c = rng.below(q);
      if (c == 0) continue;
      elem += tower.monomial_with_valuation(v + j)
                  .scaled(LaurentPoly::monomial(tower.base_field(), 0,
                                                tower.base_field().element_at(c)));
    }
    if (elem.valuation() == Valuation::of(v)) return elem;
  }
  fail(Errc::SamplerStarved, "no element of valuation " + std::to_string(v) +
                                 " found in 100 attempts");
}

LElem sharpness_witness(const Tower& tower, long long target_class) {
  const long long pn = tower.degree();
  const long long d = tower.different_exponent();
  const long long rstar = pos_mod(-d - 1, pn);
  const long long cls = pos_mod(target_class, pn);
  require(cls != rstar, Errc::InvalidClass,
          "class " + std::to_string(cls) + " is the criterion class r*");
  const long long i = pos_mod(cls + d, pn);  // != p^n - 1 since cls != r*
  LElem dprime = tower.derivative_at_prime();
  LElem pi_pow = tower.prime_element().pow(i);
  LElem rho = tower.zero();
  try {
    rho = pi_pow * tower.invert(dprime);
  } catch (const Error& e) {
    if (e.code() != Errc::NonRepresentableInverse) throw;
    // K^x-scaled member of the same family: t^-d pi^i W = N/(t^d) * pi^i/p'(pi)
    rho = (pi_pow * tower.cofactor(dprime))
              .scaled(LaurentPoly::monomial(tower.base_field(), -d, 1));
  }
  require(pos_mod(rho.valuation().value() - cls, pn) == 0, Errc::IdentityViolated,
          "witness valuation left the target class");
  require(tower.trace(rho).is_zero(), Errc::IdentityViolated, "witness trace is not zero");
  require(!is_normal_generator(tower, rho), Errc::IdentityViolated,
          "trace-zero witness unexpectedly generates");
  return rho;
}

CriterionReport verify_criterion(const Tower& tower, long long trials, std::uint64_t seed,
                                 const std::string& label) {
  require(trials >= 1, Errc::BadParameters, "need at least one trial");
  CriterionReport rep;
  rep.tower_label = label;
  rep.p = tower.p();
  rep.degree = tower.degree();
  rep.trials = trials;
  rep.seed = seed;
  rep.criterion_residue = criterion_residue(tower);
  rep.note =
      "sharpness family is pi_K^m pi_L^i / p'(pi_L) with i != p^n - 1; the source "
      "statement's exponent p^n - 1 next to the quantifier over i is a presumed typo";

  const long long pn = tower.degree();
  const long long offsets[4] = {0, -pn, pn, 2 * pn};
  for (long long t = 0; t < trials; ++t) {
    DetRng rng(DetRng::derive(seed, static_cast<std::uint64_t>(t)));
    long long v = rep.criterion_residue + offsets[t % 4];
    long long budget = 1 + (t % 3);
    LElem rho = sample_element(tower, v, rng, budget);
    rep.trial_valuations.push_back(v);
    require(!tower.trace(rho).is_zero(), Errc::CriterionViolated,
            "class-r* sample of valuation " + std::to_string(v) + " has zero trace");
    require(is_normal_generator(tower, rho), Errc::CriterionViolated,
            "class-r* sample of valuation " + std::to_string(v) +
                " does not generate a normal basis");
    ++rep.generators_found;
  }
  for (long long c = 0; c < pn; ++c) {
    if (c == rep.criterion_residue) continue;
    LElem w = sharpness_witness(tower, c);
    WitnessRecord rec;
    rec.residue_class = c;
    rec.element = print_lelem(w);
    rec.trace = "0";
    rec.vL = w.valuation().value();
    rec.is_generator = false;
    rep.witnesses.push_back(std::move(rec));
  }
  return rep;
}

// ------------------------------------------------------- counterexamples ----

namespace {

const FqField& field_by_order(int q) {
  for (int p : {2, 3, 5}) {
    long long pw = p;
    for (int f = 1; f <= 4; ++f, pw *= p)
      if (pw == q) return FqField::get(p, f);
  }
  fail(Errc::BadParameters, "no supported field of order " + std::to_string(q));
}

// multiplicative order of a nonzero element
long elem_order(const FqElem& a) {
  FqElem acc = a;
  long n = 1;
  while (!acc.is_one()) {
    acc = acc * a;
    ++n;
  }
  return n;
}

}  // namespace

CounterexampleRecord tame_counterexample(int q, int e, long long i) {
  require(e > 1, Errc::BadParameters, "tame degree e must exceed 1");
  const FqField& F = field_by_order(q);
  require((q - 1) % e == 0, Errc::BadParameters,
          "e must divide q - 1 so that the e-th roots of unity lie in F_q");
  require(e % F.p() != 0, Errc::BadParameters, "e must be prime to p");
  // primitive e-th root of unity
  FqElem zeta = F.one();
  for (long idx = 1; idx < F.q(); ++idx) {
    FqElem a = F.element_at(idx);
    if (elem_order(a) == e) {
      zeta = a;
      break;
    }
  }
  require(elem_order(zeta) == e, Errc::BadParameters, "no primitive e-th root of unity found");

  // L = K(s) with s^e = t; elements are Laurent polynomials in s and
  // sigma(s) = zeta s. rho_i = s^i is a simultaneous eigenvector.
  LaurentPoly rho = LaurentPoly::monomial(F, i, 1);
  CounterexampleRecord rec;
  rec.kind = "tame";
  rec.q = q;
  rec.param = e;
  rec.i = i;
  rec.full_dim = e;
  rec.rho = print_laurent(rho, "s");
  std::vector<std::vector<LaurentPoly>> rows;
  for (int j = 0; j < e; ++j) {
    // sigma^j(sum a_m s^m) = sum a_m zeta^{j m} s^m
    LaurentPoly conj(F);
    for (const auto& [m, a] : rho.terms()) conj.add_term(m, a * zeta.pow(j * m));
    rec.conjugates.push_back(print_laurent(conj, "s"));
    // coordinates over the K-basis {1, s, ..., s^{e-1}}: s^m = t^{(m-r)/e} s^r
    std::vector<LaurentPoly> row(static_cast<std::size_t>(e), LaurentPoly(F));
    for (const auto& [m, a] : conj.terms()) {
      long long r = pos_mod(m, e);
      row[static_cast<std::size_t>(r)].add_term((m - r) / e, a);
    }
    rows.push_back(std::move(row));
  }
  rec.span_dim = matrix_rank(rows, F);
  rec.det_is_zero = bareiss_determinant(std::move(rows), F).is_zero();
  rec.is_generator = !rec.det_is_zero;
  require(rec.span_dim == 1 && rec.det_is_zero, Errc::IdentityViolated,
          "tame eigenvector demonstration failed");
  return rec;
}

CounterexampleRecord unramified_counterexample(int q, int f, long long i) {
  require(f > 1, Errc::BadParameters, "unramified degree f must exceed 1");
  require(q == 2 || q == 3 || q == 5, Errc::BadParameters,
          "unramified demonstration supports prime q only");
  const FqField& base = FqField::get(q, 1);
  const FqField& big = FqField::get(q, f);
  // L = F_{q^f}((t)), G generated by the coefficientwise q-power Frobenius;
  // rho_i = t^i has all coefficients in F_q, hence is fixed by G.
  LaurentPoly rho = LaurentPoly::monomial(big, i, 1);
  CounterexampleRecord rec;
  rec.kind = "unramified";
  rec.q = q;
  rec.param = f;
  rec.i = i;
  rec.full_dim = f;
  rec.rho = print_laurent(rho, "t");
  std::vector<std::vector<LaurentPoly>> rows;
  for (int j = 0; j < f; ++j) {
    LaurentPoly conj(big);
    long long qe = 1;
    for (int s = 0; s < j; ++s) qe *= q;
    for (const auto& [m, a] : rho.terms()) conj.add_term(m, a.pow(qe));
    rec.conjugates.push_back(print_laurent(conj, "t"));
    // decompose over the K-basis {1, g, ..., g^{f-1}} of F_{q^f}/F_q
    std::vector<LaurentPoly> row(static_cast<std::size_t>(f), LaurentPoly(base));
    for (const auto& [m, a] : conj.terms()) {
      auto cs = a.coeffs();
      for (int r = 0; r < f; ++r)
        if (cs[static_cast<std::size_t>(r)])
          row[static_cast<std::size_t>(r)].add_term(m, base.from_int(cs[static_cast<std::size_t>(r)]));
    }
    rows.push_back(std::move(row));
  }
  rec.span_dim = matrix_rank(rows, base);
  rec.det_is_zero = bareiss_determinant(std::move(rows), base).is_zero();
  rec.is_generator = !rec.det_is_zero;
  require(rec.span_dim == 1 && rec.det_is_zero, Errc::IdentityViolated,
          "unramified fixed-element demonstration failed");
  return rec;
}

}  // namespace ramac
