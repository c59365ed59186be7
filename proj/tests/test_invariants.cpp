#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hirz/invariants.hpp"

using namespace hirz;

namespace {

QuantumElement el(const std::string& s) { return parse_element(s); }

InvariantQuery query(int k, CurveClass cls, const std::vector<std::string>& ins,
                     const std::string& gamma) {
  InvariantQuery q;
  q.k = k;
  q.cls = cls;
  for (const auto& name : ins) q.insertions.push_back(cohomology_symbol(name));
  q.gamma = cohomology_symbol(gamma);
  return q;
}

std::vector<std::string> gwia_insertions(int k) {
  std::vector<std::string> ins = {"Z1", "Z2"};
  for (int i = 0; i < 2 * k; ++i) ins.push_back("Z4");
  return ins;
}

long long binom(long long n, long long j) {
  if (j < 0 || j > n) return 0;
  long long v = 1;
  for (long long i = 1; i <= j; ++i) v = v * (n - j + i) / i;
  return v;
}

long long ipow(long long b, long long e) {
  long long v = 1;
  for (long long i = 0; i < e; ++i) v *= b;
  return v;
}

} // namespace

TEST_CASE("projective line invariants") {
  CHECK(cp1_invariant(1, 3, 3) == 1);
  CHECK(cp1_invariant(0, 1, 5) == 1);
  CHECK(cp1_invariant(1, 2, 3) == 0);
  CHECK(cp1_invariant(2, 5, 5) == 1);
  CHECK(cp1_invariant(-1, 0, 3) == 0);
  for (long long m = 3; m <= 9; ++m)
    for (long long r = -2; r <= 4; ++r)
      for (long long s = 0; s <= m; ++s) {
        long long want = (r >= 0 && s == 2 * r + 1) ? 1 : 0;
        CHECK(cp1_invariant(r, s, m) == want);
      }
  CHECK_THROWS_AS(cp1_invariant(1, 4, 3), std::domain_error); // s > m
  CHECK_THROWS_AS(cp1_invariant(1, -1, 3), std::domain_error);
  CHECK_THROWS_AS(cp1_invariant(1, 1, 2), std::domain_error); // m < 3
}

TEST_CASE("product surface invariants") {
  auto pt = el("Z1*Z4");
  CHECK(f0_invariant({1, 1}, {pt, pt}, pt) == 1);
  CHECK(f0_invariant({1, 0}, {el("Z1"), el("Z1")}, pt) == 1);
  CHECK(f0_invariant({0, 0}, {el("Z1"), el("Z4")}, pt) == 0);
  // two ruling constraints and a point never balance both factors at once:
  // the counts (2,2) miss the required odd (2r+1, 2s+1) on every bidegree,
  // matching the absence of a quantum correction in Z1*Z4 on this surface
  CHECK(f0_invariant({1, 1}, {el("Z1"), el("Z4")}, pt) == 0);
  // multilinearity in an insertion slot
  std::mt19937 rng(808);
  std::uniform_int_distribution<long long> d(0, 2);
  const char* basis[] = {"1", "Z1", "Z4", "Z1*Z4"};
  for (int t = 0; t < 50; ++t) {
    CurveClass c{d(rng), d(rng)};
    QuantumElement a = el(basis[t % 4]);
    QuantumElement b = el(basis[(t / 4) % 4]);
    QuantumElement g = el(basis[(t / 16) % 4]);
    long long split = f0_invariant(c, {a, b}, g) + f0_invariant(c, {b, b}, g);
    CHECK(f0_invariant(c, {a + b, b}, g) == split);
  }
}

TEST_CASE("invariants of F_2k via transfer") {
  CHECK(f2k_invariant(query(1, {0, 1}, {"Z3", "Z4"}, "pt")) == 1);
  CHECK(f2k_invariant(query(2, {1, 2}, {"Z3", "Z4"}, "pt")) == -4);
  CHECK(f2k_invariant(query(2, {1, 3}, gwia_insertions(2), "1")) == 8);
  // k = 0 falls back to the product surface itself: Z3 = Z4 there, and
  // Phi^{(0,1)}(Z4, Z4, pt) counts the one fiber through the point
  CHECK(f2k_invariant(query(0, {0, 1}, {"Z3", "Z4"}, "pt")) == 1);
  CHECK(f2k_invariant(query(0, {1, 1}, {"pt", "pt"}, "pt")) == 1);
}

TEST_CASE("invariants are symmetric in the insertions") {
  std::mt19937 rng(6021);
  std::uniform_int_distribution<long long> dr(0, 2), ds(0, 4);
  const char* basis[] = {"1", "Z1", "Z3", "Z4", "pt"};
  for (int t = 0; t < 40; ++t) {
    int k = 1 + t % 2;
    InvariantQuery q = query(k, {dr(rng), ds(rng)},
                             {basis[t % 5], basis[(t / 5) % 5], basis[(t / 3) % 5]}, "pt");
    long long v = f2k_invariant(q);
    InvariantQuery qp = q;
    std::rotate(qp.insertions.begin(), qp.insertions.begin() + 1, qp.insertions.end());
    CHECK(f2k_invariant(qp) == v);
    std::swap(qp.insertions[0], qp.insertions[1]);
    CHECK(f2k_invariant(qp) == v);
  }
}

TEST_CASE("contributing classes") {
  auto one = el("1");
  auto pt = el("Z1*Z4");
  auto z3 = el("Z3");
  auto z4 = el("Z4");
  CHECK(enumerate_contributing(1, {z3, z4}, pt) ==
        std::vector<CurveClass>{{0, 1}, {1, 1}});
  CHECK(enumerate_contributing(1, {z3, z4}, one).empty());
  CHECK(enumerate_contributing(1, {el("Z1"), el("Z2"), z4, z4}, pt) ==
        std::vector<CurveClass>{{1, 2}, {2, 2}});
  // completeness: everything outside the list vanishes on a window
  for (int k : {1, 2}) {
    auto listed = enumerate_contributing(k, {z3, z4}, pt);
    for (long long r = 0; r <= 4; ++r)
      for (long long t = 0; t <= 4; ++t) {
        CurveClass c{r, k * r + t};
        if (c.r == 0 && c.s == 0) continue;
        bool in = std::find(listed.begin(), listed.end(), c) != listed.end();
        if (!in) CHECK(f2k_invariant(query(k, c, {"Z3", "Z4"}, "pt")) == 0);
      }
  }
}

TEST_CASE("closed forms match their shapes") {
  auto q1 = query(1, {1, 1}, {"Z3", "Z4"}, "pt");
  REQUIRE(closed_form_invariant(q1).has_value());
  CHECK(*closed_form_invariant(q1) == -1);

  auto q2 = query(1, {1, 1}, gwia_insertions(1), "1");
  REQUIRE(closed_form_invariant(q2).has_value());
  CHECK(*closed_form_invariant(q2) == 2);

  auto q3 = query(1, {2, 2}, gwia_insertions(1), "pt");
  REQUIRE(closed_form_invariant(q3).has_value());
  CHECK(*closed_form_invariant(q3) == 1);

  // shapes the formulas do not cover
  CHECK(!closed_form_invariant(query(1, {1, 1}, {"Z3", "Z3"}, "pt")).has_value());
  CHECK(!closed_form_invariant(query(1, {1, 1}, {"Z1", "Z2", "Z4"}, "pt")).has_value());
  // wrong Z4 multiplicity for k=2
  CHECK(!closed_form_invariant(query(2, {1, 1}, gwia_insertions(1), "pt")).has_value());
}

TEST_CASE("closed forms agree with the engine across windows") {
  for (int k : {1, 2}) {
    // three-point shape: engine equals the delta-supported closed form
    for (long long r = 0; r <= 2 * k + 3; ++r)
      for (long long t = 0; t <= 2 * k + 3; ++t) {
        CurveClass c{r, k * r + t};
        if (c.r == 0 && c.s == 0) continue;
        auto qq = query(k, c, {"Z3", "Z4"}, "pt");
        auto cf = closed_form_invariant(qq);
        REQUIRE(cf.has_value());
        CHECK(f2k_invariant(qq) == *cf);
        auto q1 = query(k, c, {"Z3", "Z4"}, "1");
        CHECK(f2k_invariant(q1) == *closed_form_invariant(q1));
      }
    // section-count shapes along their degree lines
    for (long long r = 0; r <= k + 3; ++r) {
      CurveClass ca{r, (k - 1) * (r + 1) + 1};
      auto qa = query(k, ca, gwia_insertions(k), "1");
      long long want_a = (r >= 1 && r <= k) ? binom(2 * k, 2 * r - 1) * ipow(k, 2 * r - 1) : 0;
      CHECK(*closed_form_invariant(qa) == want_a);
      CHECK(f2k_invariant(qa) == want_a);

      CurveClass cb{r, (k - 1) * (r + 1) + 2};
      auto qb = query(k, cb, gwia_insertions(k), "pt");
      long long want_b =
          (r >= 1 && r <= k + 1) ? binom(2 * k, 2 * r - 2) * ipow(k, 2 * r - 2) : 0;
      CHECK(*closed_form_invariant(qb) == want_b);
      CHECK(f2k_invariant(qb) == want_b);
    }
  }
}
