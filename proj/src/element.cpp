#include "hirz/element.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hirz {

// ===== monomials ==========================================================

bool Monomial::divides(const Monomial& m) const {
  for (int i = 0; i < 4; ++i)
    if (z[i] > m.z[i]) return false;
  for (int i = 0; i < 2; ++i)
    if (q[i] > m.q[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.z[i] = z[i] + m.z[i];
  for (int i = 0; i < 2; ++i) r.q[i] = q[i] + m.q[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.z[i] = z[i] - m.z[i];
  for (int i = 0; i < 2; ++i) r.q[i] = q[i] - m.q[i];
  return r;
}

namespace {

// variable precedence, most significant first
constexpr int kZPrec[4] = {3, 0, 2, 1}; // Z4 > Z1 > Z3 > Z2 (0-based z indices)
constexpr int kQPrec[2] = {0, 1};       // q1 > q2

template <std::size_t N>
int cmp_grevlex(const std::array<int, N>& a, const std::array<int, N>& b,
                const int (&prec)[N]) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < N; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = static_cast<int>(N) - 1; i >= 0; --i) {
    int d = a[prec[i]] - b[prec[i]];
    if (d != 0) return d > 0 ? -1 : 1; // more weight on a less significant variable loses
  }
  return 0;
}

} // namespace

int cmp_z(const Monomial& a, const Monomial& b) { return cmp_grevlex(a.z, b.z, kZPrec); }
int cmp_q(const Monomial& a, const Monomial& b) { return cmp_grevlex(a.q, b.q, kQPrec); }

int cmp_division(const Monomial& a, const Monomial& b) {
  int c = cmp_z(a, b);
  return c != 0 ? c : cmp_q(a, b);
}

bool render_before(const Monomial& a, const Monomial& b) {
  int c = cmp_z(a, b);
  if (c != 0) return c > 0;
  return cmp_q(a, b) < 0;
}

// ===== elements ===========================================================

QuantumElement QuantumElement::constant(const Rational& c) {
  QuantumElement e;
  e.add_term(Monomial{}, c);
  return e;
}

QuantumElement QuantumElement::monomial(const Monomial& m, const Rational& c) {
  QuantumElement e;
  e.add_term(m, c);
  return e;
}

QuantumElement QuantumElement::variable(int index) {
  if (index < 1 || index > 4) throw std::domain_error("element: no variable Z" + std::to_string(index));
  Monomial m;
  m.z[index - 1] = 1;
  return monomial(m);
}

QuantumElement QuantumElement::q_power(int a, int b) {
  Monomial m;
  m.q = {a, b};
  return monomial(m);
}

Rational QuantumElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QuantumElement::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const std::pair<const Monomial, Rational>& QuantumElement::leading() const {
  if (terms_.empty()) throw std::domain_error("element: leading term of zero");
  return *terms_.rbegin();
}

QuantumElement QuantumElement::operator-() const {
  QuantumElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

QuantumElement operator+(const QuantumElement& a, const QuantumElement& b) {
  QuantumElement r = a;
  r += b;
  return r;
}

QuantumElement operator-(const QuantumElement& a, const QuantumElement& b) {
  QuantumElement r = a;
  r -= b;
  return r;
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QuantumElement& QuantumElement::operator-=(const QuantumElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QuantumElement operator*(const QuantumElement& a, const QuantumElement& b) {
  QuantumElement r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma.times(mb), ca * cb);
  return r;
}

QuantumElement& QuantumElement::operator*=(const QuantumElement& o) {
  return *this = *this * o;
}

QuantumElement QuantumElement::scaled(const Rational& c) const {
  QuantumElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

QuantumElement QuantumElement::times_monomial(const Monomial& m, const Rational& c) const {
  QuantumElement r;
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm.times(m), cc * c);
  return r;
}

QuantumElement QuantumElement::pow(int e) const {
  if (e < 0) throw std::domain_error("element: negative power");
  QuantumElement r = constant(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

QuantumElement operator*(const Rational& c, const QuantumElement& e) { return e.scaled(c); }

QuantumElement QuantumElement::substitute_z(int index, const QuantumElement& repl) const {
  if (index < 1 || index > 4) throw std::domain_error("element: no variable Z" + std::to_string(index));
  int max_exp = 0;
  for (const auto& [m, c] : terms_) max_exp = std::max(max_exp, m.z[index - 1]);
  std::vector<QuantumElement> powers(max_exp + 1);
  powers[0] = constant(1);
  for (int i = 1; i <= max_exp; ++i) powers[i] = powers[i - 1] * repl;

  QuantumElement r;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest.z[index - 1];
    rest.z[index - 1] = 0;
    r += powers[e].times_monomial(rest, c);
  }
  return r;
}

QuantumElement QuantumElement::classical_part() const {
  QuantumElement r;
  for (const auto& [m, c] : terms_)
    if (m.q_is_one()) r.terms_.emplace(m, c);
  return r;
}

bool QuantumElement::is_q_polynomial() const {
  for (const auto& [m, c] : terms_)
    if (!m.q_nonnegative()) return false;
  return true;
}

bool QuantumElement::is_classical() const {
  for (const auto& [m, c] : terms_)
    if (!m.q_is_one()) return false;
  return true;
}

bool QuantumElement::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

bool QuantumElement::uses_z(int index) const {
  for (const auto& [m, c] : terms_)
    if (m.z[index - 1] > 0) return true;
  return false;
}

std::optional<int> QuantumElement::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = 2 * m.zdeg();
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg ? deg : std::optional<int>(0);
}

std::string QuantumElement::str() const { return render_element(*this); }

// ===== canonical text =====================================================

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  auto factor = [&out](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  static const char* zname[4] = {"Z1", "Z2", "Z3", "Z4"};
  static const char* qname[2] = {"q1", "q2"};
  for (int i = 0; i < 4; ++i) factor(zname[i], m.z[i]);
  for (int i = 0; i < 2; ++i) factor(qname[i], m.q[i]);
  return out;
}

} // namespace

std::string render_element(const QuantumElement& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(e.terms().begin(), e.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return render_before(a.first, b.first); });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = c;
    if (first) {
      if (a.is_negative()) out += "-";
    } else {
      out += a.is_negative() ? " - " : " + ";
    }
    if (a.is_negative()) a = -a;
    std::string mono = render_monomial(m);
    if (mono.empty()) {
      out += a.str();
    } else {
      if (!(a == Rational(1))) out += a.str() + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::domain_error("parse: " + what + " at offset " + std::to_string(pos));
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected digit");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v < 0) fail("integer overflow");
    }
    return neg ? -v : v;
  }

  // one factor: a rational coefficient or a named variable with exponent
  void factor(Rational& coeff, Monomial& m) {
    skip_ws();
    if (pos >= s.size()) fail("expected factor");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = integer();
      long long den = 1;
      if (eat('/')) den = integer();
      coeff *= Rational(num, den);
      return;
    }
    if (c == 'Z' || c == 'q') {
      ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected variable index");
      int idx = s[pos++] - '0';
      int e = 1;
      if (eat('^')) e = static_cast<int>(integer());
      if (c == 'Z') {
        if (idx < 1 || idx > 4) fail("no variable Z" + std::to_string(idx));
        if (e < 0) fail("negative Z exponent");
        m.z[idx - 1] += e;
      } else {
        if (idx < 1 || idx > 2) fail("no variable q" + std::to_string(idx));
        m.q[idx - 1] += e;
      }
      return;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  QuantumElement element() {
    QuantumElement e;
    skip_ws();
    if (pos >= s.size()) fail("empty input");
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    for (;;) {
      Rational coeff = neg ? Rational(-1) : Rational(1);
      Monomial m;
      factor(coeff, m);
      while (eat('*')) factor(coeff, m);
      e.add_term(m, coeff);
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('-'))
        neg = true;
      else if (eat('+'))
        neg = false;
      else
        fail("expected '+' or '-'");
    }
    return e;
  }
};

} // namespace

QuantumElement parse_element(const std::string& text) {
  Parser p(text);
  QuantumElement e = p.element();
  return e;
}

} // namespace hirz
