#include "hirz/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace hirz {

namespace {

// decomposition of an F_0 class over the tensor basis 1x1, Hx1, 1xH, HxH,
// with the per-factor H-count each component contributes
struct TensorSlot {
  struct Component {
    Rational coeff;
    int h1 = 0;
    int h2 = 0;
  };
  std::vector<Component> components;
};

TensorSlot decompose_f0(const QuantumElement& e) {
  QuantumElement r = classical_reduce(0, e);
  if (!r.is_classical())
    throw std::domain_error("invariant: insertions must be classical cohomology classes");
  TensorSlot slot;
  for (const auto& [m, c] : r.terms()) {
    TensorSlot::Component comp;
    comp.coeff = c;
    comp.h1 = m.z[0];
    comp.h2 = m.z[3];
    slot.components.push_back(comp);
  }
  return slot;
}

long long ipow(long long b, long long e) {
  long long v = 1;
  for (long long i = 0; i < e; ++i) v *= b;
  return v;
}

long long binom(long long n, long long j) {
  if (j < 0 || j > n) return 0;
  long long v = 1;
  for (long long i = 1; i <= j; ++i) v = v * (n - j + i) / i;
  return v;
}

bool is_variable(const QuantumElement& e, int index) {
  Monomial m;
  m.z[index - 1] = 1;
  return e.term_count() == 1 && e.coefficient(m) == Rational(1);
}

} // namespace

long long cp1_invariant(long long r, long long s, long long m) {
  if (m < 3) throw std::domain_error("cp1 invariant: need at least three marked points");
  if (s < 0 || s > m)
    throw std::domain_error("cp1 invariant: point count " + std::to_string(s) +
                            " outside [0, " + std::to_string(m) + "]");
  return (r >= 0 && s == 2 * r + 1) ? 1 : 0;
}

long long f0_invariant(const CurveClass& cls,
                       const std::vector<QuantumElement>& insertions,
                       const QuantumElement& gamma) {
  if (insertions.size() < 2)
    throw std::domain_error("invariant: need at least two insertions");
  const long long m = static_cast<long long>(insertions.size()) + 1;

  std::vector<TensorSlot> slots;
  slots.reserve(insertions.size() + 1);
  for (const auto& ins : insertions) slots.push_back(decompose_f0(ins));
  slots.push_back(decompose_f0(gamma));

  // multilinear expansion: pick one tensor component per slot, multiply the
  // per-factor counts into two CP1 invariants
  Rational total(0);
  std::vector<std::size_t> choice(slots.size(), 0);
  for (;;) {
    Rational coeff(1);
    long long s1 = 0, s2 = 0;
    bool live = true;
    for (std::size_t i = 0; i < slots.size() && live; ++i) {
      if (slots[i].components.empty()) {
        live = false;
        break;
      }
      const auto& comp = slots[i].components[choice[i]];
      coeff *= comp.coeff;
      s1 += comp.h1;
      s2 += comp.h2;
    }
    if (!live) return 0; // a zero insertion kills every term
    if (!coeff.is_zero()) {
      long long v = cp1_invariant(cls.r, s1, m);
      if (v != 0) v *= cp1_invariant(cls.s, s2, m);
      if (v != 0) total += coeff * Rational(v);
    }
    // advance the mixed-radix counter
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++choice[i] < slots[i].components.size()) break;
      choice[i] = 0;
    }
    if (i == slots.size()) break;
  }
  return total.as_integer();
}

long long f2k_invariant(const InvariantQuery& q) {
  if (q.k < 0) throw std::domain_error("invariant: k must be non-negative");
  CurveClass pushed = pushforward_class(q.k, q.cls);
  std::vector<QuantumElement> transferred;
  transferred.reserve(q.insertions.size());
  for (const auto& ins : q.insertions) transferred.push_back(transfer_element(q.k, ins));
  return f0_invariant(pushed, transferred, transfer_element(q.k, q.gamma));
}

std::vector<CurveClass> enumerate_contributing(int k,
                                               const std::vector<QuantumElement>& insertions,
                                               const QuantumElement& gamma) {
  if (k < 0) throw std::domain_error("invariant: k must be non-negative");
  if (insertions.size() < 2)
    throw std::domain_error("invariant: need at least two insertions");

  long long total_degree = 0;
  for (const auto& ins : insertions) {
    auto d = ins.homogeneous_degree();
    if (!d) throw std::domain_error("enumerate: insertions must be homogeneous");
    total_degree += *d;
  }
  auto dg = gamma.homogeneous_degree();
  if (!dg) throw std::domain_error("enumerate: gamma must be homogeneous");
  total_degree += *dg;

  // dimension count: total degree = 4 + 2 c1(c), and c1 is even for even kappa
  long long c1_twice = total_degree - 4;
  if (c1_twice < 0 || c1_twice % 4 != 0) return {};
  long long d = c1_twice / 4; // = c1 / 2

  // per-factor achievable point counts after transfer to F_0
  long long lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0;
  auto add_range = [&](const QuantumElement& e) {
    TensorSlot slot = decompose_f0(transfer_element(k, e));
    if (slot.components.empty()) return false;
    int a_min = 2, a_max = 0, b_min = 2, b_max = 0;
    for (const auto& comp : slot.components) {
      a_min = std::min(a_min, comp.h1);
      a_max = std::max(a_max, comp.h1);
      b_min = std::min(b_min, comp.h2);
      b_max = std::max(b_max, comp.h2);
    }
    lo1 += a_min;
    hi1 += a_max;
    lo2 += b_min;
    hi2 += b_max;
    return true;
  };
  bool live = true;
  for (const auto& ins : insertions) live = live && add_range(ins);
  live = live && add_range(gamma);
  if (!live) return {};

  std::vector<CurveClass> out;
  for (long long r = 0; r <= d; ++r) {
    CurveClass c{r, d + (static_cast<long long>(k) - 1) * r};
    if (c.r == 0 && c.s == 0) continue;
    long long fiber = c.s - static_cast<long long>(k) * c.r; // = d - r >= 0
    long long need1 = 2 * c.r + 1;
    long long need2 = 2 * fiber + 1;
    if (need1 < lo1 || need1 > hi1) continue;
    if (need2 < lo2 || need2 > hi2) continue;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<long long> closed_form_invariant(const InvariantQuery& q) {
  if (q.k < 0) return std::nullopt;
  const long long k = q.k;

  int gamma_kind; // 0: fundamental class, 1: point
  if (q.gamma == QuantumElement::constant(1))
    gamma_kind = 0;
  else if (q.gamma == QuantumElement::variable(1) * QuantumElement::variable(4))
    gamma_kind = 1;
  else
    return std::nullopt;

  long long count[5] = {0, 0, 0, 0, 0};
  for (const auto& ins : q.insertions) {
    int which = 0;
    for (int i = 1; i <= 4; ++i)
      if (is_variable(ins, i)) which = i;
    if (which == 0) return std::nullopt;
    ++count[which];
  }
  const long long n = static_cast<long long>(q.insertions.size());
  const long long r = q.cls.r, s = q.cls.s;

  if (n == 2 && count[3] == 1 && count[4] == 1) {
    if (gamma_kind == 0) return 0;
    if (r == 0 && s == 1) return 1;
    if (r == 1 && s == k) return -k * k;
    return 0;
  }
  if (count[1] == 1 && count[2] == 1 && count[4] == n - 2 && count[3] == 0 &&
      n == 2 + 2 * k) {
    if (gamma_kind == 0) {
      if (r >= 1 && r <= k && s == (k - 1) * (r + 1) + 1)
        return binom(2 * k, 2 * r - 1) * ipow(k, 2 * r - 1);
      return 0;
    }
    if (r >= 1 && r <= k + 1 && s == (k - 1) * (r + 1) + 2)
      return binom(2 * k, 2 * r - 2) * ipow(k, 2 * r - 2);
    return 0;
  }
  return std::nullopt;
}

} // namespace hirz
