#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hirz/element.hpp"

using namespace hirz;

namespace {

QuantumElement Z(int i) { return QuantumElement::variable(i); }
QuantumElement Q(int a, int b) { return QuantumElement::q_power(a, b); }
QuantumElement C(long long n) { return QuantumElement::constant(n); }

Monomial mono(std::array<int, 4> z, std::array<int, 2> q = {0, 0}) {
  Monomial m;
  m.z = z;
  m.q = q;
  return m;
}

QuantumElement random_element(std::mt19937& rng, bool laurent) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<int> zexp(0, 3);
  std::uniform_int_distribution<int> qexp(laurent ? -2 : 0, 3);
  std::uniform_int_distribution<int> coeff(-6, 6);
  QuantumElement e;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (auto& v : m.z) v = zexp(rng);
    for (auto& v : m.q) v = qexp(rng);
    e.add_term(m, coeff(rng));
  }
  return e;
}

} // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(7) * Rational(2, 7) == Rational(2));
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(5, 1).as_integer() == 5);
  CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational(-4, 6) < Rational(0));
}

TEST_CASE("division order ranks monomials") {
  Monomial z4sq = mono({0, 0, 0, 2});
  Monomial z1z4 = mono({1, 0, 0, 1});
  Monomial z1sq = mono({2, 0, 0, 0});
  // graded first, then reverse-lex with Z4 > Z1 > Z3 > Z2
  CHECK(cmp_division(z4sq, z1z4) > 0);
  CHECK(cmp_division(z1z4, z1sq) > 0);
  CHECK(cmp_division(z1sq, mono({1, 0, 0, 0})) > 0);
  CHECK(cmp_division(z1sq, z1sq) == 0);
  // q-part only breaks Z-ties
  Monomial q1 = mono({0, 0, 0, 0}, {1, 0});
  Monomial q2 = mono({0, 0, 0, 0}, {0, 1});
  Monomial q1q2 = mono({0, 0, 0, 0}, {1, 1});
  CHECK(cmp_division(q1, q2) > 0);
  CHECK(cmp_division(q1q2, q1) > 0);
  CHECK(cmp_division(mono({1, 0, 0, 0}), q1q2) > 0); // any Z beats any pure q
}

TEST_CASE("render order puts classical terms first") {
  Monomial q2 = mono({0, 0, 0, 0}, {0, 1});
  Monomial q1q2 = mono({0, 0, 0, 0}, {1, 1});
  CHECK(render_before(q2, q1q2));     // lower q-degree first
  CHECK(!render_before(q1q2, q2));
  Monomial z1z4 = mono({1, 0, 0, 1});
  CHECK(render_before(z1z4, q2));     // higher Z-part first
}

TEST_CASE("element arithmetic identities") {
  // (Z1 + Z4)(Z1 - Z4) = Z1^2 - Z4^2
  QuantumElement lhs = (Z(1) + Z(4)) * (Z(1) - Z(4));
  QuantumElement rhs = Z(1) * Z(1) - Z(4) * Z(4);
  CHECK(lhs == rhs);

  // q1*q2^-1 * q2 = q1
  CHECK(Q(1, -1) * Q(0, 1) == Q(1, 0));

  // (Z4 - 2 Z1) * Z4 = Z4^2 - 2 Z1 Z4
  QuantumElement e = (Z(4) - C(2) * Z(1)) * Z(4);
  QuantumElement want;
  want.add_term(mono({0, 0, 0, 2}), 1);
  want.add_term(mono({1, 0, 0, 1}), -2);
  CHECK(e == want);

  CHECK((Z(1) - Z(1)).is_zero());
  CHECK((Z(1) + Z(4)).pow(0) == C(1));
  CHECK(Z(1).pow(3) == Z(1) * Z(1) * Z(1));
}

TEST_CASE("substitution is a ring map") {
  // Z3 -> Z4 - 2 Z1 inside Z3^2
  QuantumElement e = Z(3) * Z(3);
  QuantumElement s = e.substitute_z(3, Z(4) - C(2) * Z(1));
  QuantumElement want = Z(4) * Z(4) - C(4) * Z(1) * Z(4) + C(4) * Z(1) * Z(1);
  CHECK(s == want);
  std::mt19937 rng(991);
  for (int t = 0; t < 25; ++t) {
    QuantumElement a = random_element(rng, true);
    QuantumElement b = random_element(rng, true);
    QuantumElement r = Z(4) - C(3) * Z(1) + Q(1, 0);
    CHECK((a * b).substitute_z(2, r) == a.substitute_z(2, r) * b.substitute_z(2, r));
    CHECK((a + b).substitute_z(2, r) == a.substitute_z(2, r) + b.substitute_z(2, r));
  }
}

TEST_CASE("canonical rendering") {
  CHECK(render_element(QuantumElement::zero()) == "0");
  CHECK(render_element(C(1)) == "1");
  CHECK(render_element(C(-7)) == "-7");
  CHECK(render_element(Z(1)) == "Z1");
  CHECK(render_element(Q(0, 1) - Q(1, 1)) == "q2 - q1*q2");
  CHECK(render_element(Z(1) * Z(4) + Q(1, 1)) == "Z1*Z4 + q1*q2");
  CHECK(render_element(C(-2) * Z(1)) == "-2*Z1");
  CHECK(render_element(C(-1) * Z(1)) == "-Z1");
  CHECK(render_element(Z(1).pow(2) * Q(2, 0)) == "Z1^2*q1^2");
  CHECK(render_element(Q(1, -1)) == "q1*q2^-1");
  // Z-descending then q-ascending: Z1Z4 before Z1^2 before pure q
  QuantumElement e = C(4) * Z(1).pow(2) - C(2) * Z(1) * Z(4) + Q(0, 1);
  CHECK(render_element(e) == "-2*Z1*Z4 + 4*Z1^2 + q2");
  QuantumElement half;
  half.add_term(mono({2, 0, 0, 0}), Rational(1, 2));
  CHECK(render_element(half) == "1/2*Z1^2");
}

TEST_CASE("parse round-trips the canonical form") {
  for (const char* text : {"0", "1", "-1", "Z1", "q2 - q1*q2", "Z1*Z4 + q1*q2",
                           "-2*Z1*Z4 + 4*Z1^2 + q2", "q1*q2^-1", "1/2*Z1^2",
                           "Z1^2*Z4^3*q1^2*q2", "Z2*Z3 - 5"}) {
    QuantumElement e = parse_element(text);
    CHECK(render_element(e) == text);
  }
  CHECK(parse_element("q2-q1*q2") == Q(0, 1) - Q(1, 1)); // whitespace optional
  CHECK_THROWS_AS(parse_element("Z5"), std::domain_error);
  CHECK_THROWS_AS(parse_element("2**Z1"), std::domain_error);
  CHECK_THROWS_AS(parse_element(""), std::domain_error);

  std::mt19937 rng(2024);
  for (int t = 0; t < 200; ++t) {
    QuantumElement e = random_element(rng, true);
    CHECK(parse_element(render_element(e)) == e);
  }
}

TEST_CASE("element queries") {
  QuantumElement e = Z(1) * Z(4) + Q(1, 1);
  CHECK(e.coefficient(mono({1, 0, 0, 1})) == Rational(1));
  CHECK(e.coefficient(mono({0, 0, 0, 0}, {1, 1})) == Rational(1));
  CHECK(e.coefficient(mono({2, 0, 0, 0})) == Rational(0));
  CHECK(e.classical_part() == Z(1) * Z(4));
  CHECK(e.is_q_polynomial());
  CHECK(!Q(1, -1).is_q_polynomial());
  CHECK((Z(1) * Z(4)).is_classical());
  CHECK(!e.is_classical());
  CHECK(e.has_integer_coefficients());
  QuantumElement half;
  half.add_term(mono({0, 0, 0, 0}), Rational(1, 2));
  CHECK(!half.has_integer_coefficients());
  CHECK(e.uses_z(1));
  CHECK(!e.uses_z(2));
  CHECK(Z(1).homogeneous_degree() == 2);
  CHECK((Z(1) * Z(4)).homogeneous_degree() == 4);
  CHECK((Z(1) * Z(4) + Q(1, 1)).homogeneous_degree() == std::nullopt);
  // q-monomials carry Z-degree zero
  CHECK(Q(1, 1).homogeneous_degree() == 0);
  CHECK((Z(1) * Z(4) * Q(0, 1)).homogeneous_degree() == 4);
  // leading term is the division-order maximum
  CHECK(e.leading().first == mono({1, 0, 0, 1}));
}
