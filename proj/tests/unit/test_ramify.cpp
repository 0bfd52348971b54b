#include <doctest.h>

#include "ramac/catalog.hpp"
#include "ramac/ramify.hpp"

using namespace ramac;

namespace {

Tower by_name(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return build_tower(e);
  throw std::runtime_error("no catalog entry " + name);
}

}  // namespace

TEST_CASE("filtration examples") {
  SUBCASE("p=2, b=1") {
    RamificationData rd = filtration(by_name("p2b1"));
    REQUIRE(rd.i_table.size() == 1);
    CHECK(rd.i_table[0].second == 2);
    CHECK(rd.lower_breaks == std::vector<long long>{1});
    CHECK(rd.orders == std::vector<long long>{2});
  }
  SUBCASE("p=2, upper breaks (1,3)") {
    RamificationData rd = filtration(by_name("p2b1b3"));
    std::vector<long long> igs;
    for (auto& [s, v] : rd.i_table) igs.push_back(v);
    std::sort(igs.begin(), igs.end());
    CHECK(igs == std::vector<long long>{2, 2, 6});
    CHECK(rd.lower_breaks == std::vector<long long>{1, 5});
    CHECK(rd.orders == std::vector<long long>{4, 2});
  }
  SUBCASE("p=3, b=2") {
    RamificationData rd = filtration(by_name("p3b2"));
    for (auto& [s, v] : rd.i_table) CHECK(v == 3);
    CHECK(rd.lower_breaks == std::vector<long long>{2});
    CHECK(rd.orders == std::vector<long long>{3});
  }
}

TEST_CASE("different via breaks matches the derivative route") {
  CHECK(different_via_breaks(filtration(by_name("p2b1"))) == 2);    // (1+1)(2-1)
  CHECK(different_via_breaks(filtration(by_name("p2b1b3"))) == 10);  // 2*3 + 4*1
  CHECK(different_via_breaks(filtration(by_name("p3b2"))) == 6);    // 3*2
}

TEST_CASE("herbrand conversion to upper numbering") {
  auto u1 = herbrand_upper(filtration(by_name("p2b1")));
  REQUIRE(u1.size() == 1);
  CHECK(u1[0] == Rational(1));

  auto u2 = herbrand_upper(filtration(by_name("p2b1b3")));
  REQUIRE(u2.size() == 2);
  CHECK(u2[0] == Rational(1));
  CHECK(u2[1] == Rational(3));  // (4 + 4*2)/4, recovering the spec's break 3

  auto u3 = herbrand_upper(filtration(by_name("p3b2")));
  CHECK(u3[0] == Rational(2));
}

TEST_CASE("proposition identity on the catalog") {
  struct Expected {
    const char* name;
    long long d, g1, bm, um, residue;
  };
  const Expected table[] = {
      {"p2b1", 2, 2, 1, 1, 1},   {"p2b3", 4, 2, 3, 3, 1},    {"p3b1", 4, 3, 1, 1, 1},
      {"p3b2", 6, 3, 2, 2, 2},   {"p5b2", 12, 5, 2, 2, 2},   {"p2b1b3", 10, 4, 5, 3, 1},
      {"p3b1b2", 22, 9, 4, 2, 4},
  };
  for (const auto& row : table) {
    CAPTURE(row.name);
    RamificationData rd = ramification_data(by_name(row.name));
    PropositionReport rep = proposition_check(rd);
    CHECK(rep.d == row.d);
    CHECK(rep.g1 == row.g1);
    CHECK(rep.b_m == row.bm);
    CHECK(rep.u_m == Rational(row.um));
    CHECK(rep.criterion_residue == row.residue);
    CHECK(rep.identity_holds);
    CHECK(rep.congruence_holds);
    CHECK(rep.hasse_arf_integral);
    CHECK(rep.remark_holds);
  }
}

TEST_CASE("proposition numeric triples from the source data") {
  // (d, g1, b_m, u_m) triples: d + 1 = g1 - b_m + p^n u_m
  CHECK(2 + 1 == 2 - 1 + 2 * 1);
  CHECK(10 + 1 == 4 - 5 + 4 * 3);
  CHECK(6 + 1 == 3 - 2 + 3 * 2);
}

TEST_CASE("three different routes agree on every catalog tower") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    Tower T = build_tower(e);
    RamificationData rd = ramification_data(T);
    CHECK(rd.d_derivative == rd.d_breaks);
    CHECK(rd.d_derivative == rd.d_igsum);
    long long ig_sum = 0;
    for (auto& [s, v] : rd.i_table) ig_sum += v;
    CHECK(ig_sum == rd.d_derivative);  // definitional consistency
    // orders are p-powers, weakly decreasing, g_1 = [L:K]
    CHECK(rd.orders.front() == T.degree());
    long long prev = rd.orders.front();
    for (long long g : rd.orders) {
      CHECK(g <= prev);
      prev = g;
      while (g % T.p() == 0) g /= T.p();
      CHECK(g == 1);
    }
  }
}

TEST_CASE("trace ideal lemma, hand-checked instance") {
  Tower T = by_name("p2b1");  // d = 2
  TraceIdealReport rep = trace_ideal_check(T, 1, 1);
  REQUIRE(rep.rows.size() == 1);
  // witness beta = pi/p'(pi) = y: v_L = -1 = 1*2 - 2 - 1, Tr(y) = 1, v_K = 0
  CHECK(rep.rows[0].witness_vL == -1);
  CHECK(rep.rows[0].witness_trace_vK == 0);
  CHECK(rep.rows[0].containment_holds);

  TraceIdealReport rep0 = trace_ideal_check(T, 0, 0);
  CHECK(rep0.rows[0].witness_vL == -3);
  CHECK(rep0.rows[0].witness_trace_vK == -1);  // trace = t^-1
}

TEST_CASE("trace ideal lemma over the default window on all towers") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    Tower T = build_tower(e);
    TraceIdealReport rep = trace_ideal_check(T, -2, 3);
    CHECK(rep.rows.size() == 6);
    for (const auto& row : rep.rows) {
      CHECK(row.containment_holds);
      CHECK(row.witness_vL == row.k * T.degree() - rep.d - 1);
      CHECK(row.witness_trace_vK == row.k - 1);
    }
  }
}

TEST_CASE("trace ideal rejects bad windows") {
  Tower T = by_name("p2b1");
  CHECK_THROWS_WITH_AS(trace_ideal_check(T, 2, 1), doctest::Contains("BadParameters"), Error);
}
