#ifndef HIRZ_ELEMENT_HPP
#define HIRZ_ELEMENT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hirz/rational.hpp"

namespace hirz {

// ===== monomials ==========================================================
//
// A monomial Z1^a1*Z2^a2*Z3^a3*Z4^a4 * q1^b1*q2^b2.  Z-exponents are
// non-negative; q-exponents may be negative (Laurent) in free arithmetic,
// though rewriting modulo a presentation only accepts q-polynomials.

struct Monomial {
  std::array<int, 4> z{0, 0, 0, 0};
  std::array<int, 2> q{0, 0};

  int zdeg() const { return z[0] + z[1] + z[2] + z[3]; }
  int qdeg() const { return q[0] + q[1]; }

  bool is_one() const { return zdeg() == 0 && q[0] == 0 && q[1] == 0; }
  bool z_is_one() const { return zdeg() == 0; }
  bool q_is_one() const { return q[0] == 0 && q[1] == 0; }
  bool q_nonnegative() const { return q[0] >= 0 && q[1] >= 0; }

  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial quotient(const Monomial& m) const; // *this / m, requires m.divides(*this)

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.z == b.z && a.q == b.q;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Division order: graded reverse-lexicographic on the Z-part with
// Z4 > Z1 > Z3 > Z2, ties broken by grevlex on the q-part with q1 > q2.
// Admissible and well-founded on non-negative exponents, which is all the
// rewrite engine accepts; the comparison itself is total on Laurent
// monomials too, so it doubles as the canonical map order.
int cmp_z(const Monomial& a, const Monomial& b);   // -1 / 0 / +1
int cmp_q(const Monomial& a, const Monomial& b);
int cmp_division(const Monomial& a, const Monomial& b);

struct DivisionLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_division(a, b) < 0;
  }
};

// Rendering order: Z-part descending, then q-part ascending, so classical
// terms precede their quantum corrections ("q2 - q1*q2", not the reverse).
bool render_before(const Monomial& a, const Monomial& b);

inline constexpr const char* kTermOrderId = "grevlex-Z4Z1Z3Z2";

// ===== elements ===========================================================

class QuantumElement {
public:
  using TermMap = std::map<Monomial, Rational, DivisionLess>;

  QuantumElement() = default;

  static QuantumElement zero() { return QuantumElement(); }
  static QuantumElement constant(const Rational& c);
  static QuantumElement monomial(const Monomial& m, const Rational& c = 1);
  static QuantumElement variable(int index); // Z1..Z4 for index 1..4
  static QuantumElement q_power(int a, int b);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  // leading term under the division order; requires non-zero
  const std::pair<const Monomial, Rational>& leading() const;

  QuantumElement operator-() const;
  friend QuantumElement operator+(const QuantumElement& a, const QuantumElement& b);
  friend QuantumElement operator-(const QuantumElement& a, const QuantumElement& b);
  friend QuantumElement operator*(const QuantumElement& a, const QuantumElement& b);
  QuantumElement& operator+=(const QuantumElement& o);
  QuantumElement& operator-=(const QuantumElement& o);
  QuantumElement& operator*=(const QuantumElement& o);
  QuantumElement scaled(const Rational& c) const;
  QuantumElement times_monomial(const Monomial& m, const Rational& c = 1) const;
  QuantumElement pow(int e) const; // e >= 0

  friend bool operator==(const QuantumElement& a, const QuantumElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QuantumElement& a, const QuantumElement& b) {
    return !(a == b);
  }

  // replace Z_index by the given element everywhere (index 1..4)
  QuantumElement substitute_z(int index, const QuantumElement& repl) const;

  QuantumElement classical_part() const; // terms with q-exponent (0,0)
  bool is_q_polynomial() const;          // no negative q-exponents
  bool is_classical() const;             // q-free
  bool has_integer_coefficients() const;
  bool uses_z(int index) const; // any term with positive Z_index exponent

  // cohomological degree of the Z-part (each Z counts 2); nullopt when mixed
  std::optional<int> homogeneous_degree() const;

  std::string str() const; // canonical rendering

private:
  TermMap terms_;
};

QuantumElement operator*(const Rational& c, const QuantumElement& e);

// Canonical text form:  terms sorted by render order, "*"-joined factors,
// "^" exponents (power 1 implicit), unit coefficients reduced to their sign,
// " + " / " - " separators.  parse_element accepts exactly this grammar plus
// harmless whitespace and rational coefficients "p/q"; round-trips are exact.
std::string render_element(const QuantumElement& e);
QuantumElement parse_element(const std::string& text);

} // namespace hirz

#endif
