#include "hirz/quantum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hirz {

namespace {

QuantumElement z_var(int i) { return QuantumElement::variable(i); }

QuantumElement point_class() { return z_var(1) * z_var(4); }

Monomial q_monomial(long long a, long long b) {
  Monomial m;
  m.q = {static_cast<int>(a), static_cast<int>(b)};
  return m;
}

void require_classical(const QuantumElement& e, const char* who) {
  if (!e.is_classical())
    throw std::domain_error(std::string(who) + ": argument must be q-free");
}

// the additive basis and its intersection-dual on F_2k:
//   pairing matrix on degree 2 is [[0,1],[1,2k]], inverse [[-2k,1],[1,0]]
std::vector<QuantumElement> additive_basis() {
  return {QuantumElement::constant(1), z_var(1), z_var(4), point_class()};
}

std::vector<QuantumElement> dual_basis(int k) {
  return {point_class(), Rational(-2 * k) * z_var(1) + z_var(4), z_var(1),
          QuantumElement::constant(1)};
}

// split into cohomologically homogeneous layers (degree 0, 2, 4), dropping
// empty ones
std::vector<QuantumElement> homogeneous_parts(const QuantumElement& e) {
  QuantumElement parts[3];
  for (const auto& [m, c] : e.terms()) {
    int d = m.zdeg();
    if (d > 2) throw std::domain_error("quantum product: factor outside the basis");
    parts[d].add_term(m, c);
  }
  std::vector<QuantumElement> out;
  for (auto& p : parts)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

// sum over c != 0 of q^c Phi^c(slots..., T_i) T^i for one homogeneous slot
// assignment
QuantumElement correction_sum(int k, const std::vector<QuantumElement>& slots) {
  QuantumElement out;
  auto basis = additive_basis();
  auto duals = dual_basis(k);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const CurveClass& c : enumerate_contributing(k, slots, basis[i])) {
      InvariantQuery q;
      q.k = k;
      q.cls = c;
      q.insertions = slots;
      q.gamma = basis[i];
      long long v = f2k_invariant(q);
      if (v == 0) continue;
      out += duals[i].times_monomial(q_monomial(c.r, c.s), Rational(v));
    }
  }
  return out;
}

// all ways to pick one homogeneous part per factor
void for_each_combination(const std::vector<std::vector<QuantumElement>>& split,
                          std::vector<QuantumElement>& current, std::size_t at,
                          const std::function<void(const std::vector<QuantumElement>&)>& fn) {
  if (at == split.size()) {
    fn(current);
    return;
  }
  for (const auto& part : split[at]) {
    current.push_back(part);
    for_each_combination(split, current, at + 1, fn);
    current.pop_back();
  }
}

} // namespace

QuantumElement classical_product(int kappa, const QuantumElement& a, const QuantumElement& b) {
  require_classical(a, "classical product");
  require_classical(b, "classical product");
  return classical_reduce(kappa, a * b);
}

long long poincare_pairing(int kappa, const QuantumElement& a, const QuantumElement& b) {
  QuantumElement p = classical_product(kappa, a, b);
  Monomial pt;
  pt.z = {1, 0, 0, 1};
  return p.coefficient(pt).as_integer();
}

QuantumElement small_quantum_product(int k, const QuantumElement& a, const QuantumElement& b) {
  if (k < 0) throw std::domain_error("quantum product: k must be non-negative");
  require_classical(a, "quantum product");
  require_classical(b, "quantum product");
  QuantumElement ar = classical_reduce(2 * k, a);
  QuantumElement br = classical_reduce(2 * k, b);
  QuantumElement out = classical_reduce(2 * k, ar * br);
  for (const auto& pa : homogeneous_parts(ar))
    for (const auto& pb : homogeneous_parts(br)) out += correction_sum(k, {pa, pb});
  return out;
}

QuantumElement m_fold_quantum_product(int k, const std::vector<QuantumElement>& factors) {
  if (k < 0) throw std::domain_error("quantum product: k must be non-negative");
  if (factors.size() < 2)
    throw std::domain_error("quantum product: need at least two factors");
  std::vector<std::vector<QuantumElement>> split;
  QuantumElement classical = QuantumElement::constant(1);
  for (const auto& f : factors) {
    require_classical(f, "quantum product");
    QuantumElement fr = classical_reduce(2 * k, f);
    if (fr.is_zero()) return QuantumElement::zero();
    classical = classical_reduce(2 * k, classical * fr);
    split.push_back(homogeneous_parts(fr));
  }
  QuantumElement out = classical;
  std::vector<QuantumElement> current;
  for_each_combination(split, current, 0, [&](const std::vector<QuantumElement>& slots) {
    out += correction_sum(k, slots);
  });
  return out;
}

namespace {

// q-multiple of the star-monomial Z1Z4 beyond the point class
QuantumElement star_point_shift(int k) {
  return small_quantum_product(k, z_var(1), z_var(4)) - point_class();
}

QuantumElement convert_star(int k, const QuantumElement& e, bool to_classical) {
  if (k < 0) throw std::domain_error("star conversion: k must be non-negative");
  Monomial pt;
  pt.z = {1, 0, 0, 1};
  QuantumElement qfactor;
  for (const auto& [m, c] : e.terms()) {
    if (m.z == std::array<int, 4>{0, 0, 0, 0} || m.z == std::array<int, 4>{1, 0, 0, 0} ||
        m.z == std::array<int, 4>{0, 0, 0, 1})
      continue;
    if (m.z == pt.z) {
      Monomial qonly;
      qonly.q = m.q;
      qfactor.add_term(qonly, c);
      continue;
    }
    throw std::domain_error("star conversion: input outside the additive basis");
  }
  QuantumElement shift = star_point_shift(k) * qfactor;
  return to_classical ? e + shift : e - shift;
}

} // namespace

QuantumElement star_to_classical(int k, const QuantumElement& e) {
  return convert_star(k, e, true);
}

QuantumElement classical_to_star(int k, const QuantumElement& e) {
  return convert_star(k, e, false);
}

Presentation qh_presentation(int k) {
  if (k < 0) throw std::domain_error("quantum ring: k must be non-negative");
  QuantumElement z1 = z_var(1), z4 = z_var(4);
  QuantumElement section = z4 - Rational(k) * z1; // the divisor Z3 + k Z1 pulled straight
  QuantumElement rel1 = z1 * z1 - QuantumElement::q_power(1, k);
  QuantumElement rel2 = section * section - QuantumElement::q_power(0, 1);
  return complete_relations({rel1, rel2},
                            {{2, z1}, {3, z4 - Rational(2 * k) * z1}});
}

std::vector<std::string> qh_variant_relations(int k) {
  if (k < 0) throw std::domain_error("quantum ring: k must be non-negative");
  std::vector<std::string> out;
  out.push_back("Z1^2 -> " + render_element(QuantumElement::q_power(1, -k)));
  std::string lhs = "Z4^2";
  if (k > 0) {
    lhs = "(Z4 - " + (k == 1 ? std::string() : std::to_string(k) + "*") + "Z1)^2";
  }
  out.push_back(lhs + " -> q2");
  return out;
}

QuantumElement batyrev_monomial_relation(int kappa, const CurveClass& c) {
  auto co = ray_coordinates(kappa, c);
  for (auto v : co)
    if (v < 0)
      throw std::domain_error("batyrev ring: class has a negative ray coordinate");
  Monomial lhs;
  for (int i = 0; i < 4; ++i) lhs.z[i] = static_cast<int>(co[i]);
  return QuantumElement::monomial(lhs) -
         QuantumElement::monomial(q_monomial(c.r, c.s));
}

Presentation batyrev_presentation(int kappa) {
  if (kappa < 0 || kappa % 2 != 0)
    throw std::domain_error("batyrev ring: kappa must be even and non-negative");
  std::vector<QuantumElement> relations;
  for (const CurveClass& c : nonnegative_hilbert_basis(kappa))
    relations.push_back(batyrev_monomial_relation(kappa, c));
  QuantumElement z1 = z_var(1), z4 = z_var(4);
  return complete_relations(relations, {{2, z1}, {3, z4 - Rational(kappa) * z1}});
}

QuantumElement batyrev_product(int kappa, const std::vector<QuantumElement>& factors) {
  if (factors.empty()) throw std::domain_error("batyrev ring: need at least one factor");
  QuantumElement word = QuantumElement::constant(1);
  for (const auto& f : factors) {
    require_classical(f, "batyrev product");
    word *= f;
  }
  QuantumElement nf = normal_form(batyrev_presentation(kappa), word);
  if (!nf.has_integer_coefficients())
    throw std::domain_error("batyrev ring: non-integer product coefficients");
  return nf;
}

ProductReport compare_rings(int k, const std::vector<QuantumElement>& factors) {
  if (k < 0) throw std::domain_error("ring comparison: k must be non-negative");
  ProductReport rep;
  rep.k = k;
  rep.factors = factors;

  rep.qh_classical_basis = m_fold_quantum_product(k, factors);

  QuantumElement word = QuantumElement::constant(1);
  for (const auto& f : factors) word *= f;
  rep.qh_normal_form = normal_form(qh_presentation(k), word);
  if (star_to_classical(k, rep.qh_normal_form) != rep.qh_classical_basis)
    throw std::domain_error("ring comparison: quantum routes disagree");

  rep.batyrev_result = batyrev_product(2 * k, factors);
  rep.batyrev_classical = classical_reduce(2 * k, rep.batyrev_result);
  rep.discrepancy = rep.qh_classical_basis - rep.batyrev_classical;

  for (const auto& [m, c] : rep.qh_classical_basis.terms()) {
    CurveClass cls{m.q[0], m.q[1]};
    auto co = ray_coordinates(2 * k, cls);
    if (std::all_of(co.begin(), co.end(), [](long long v) { return v >= 0; }))
      rep.qh_nonnegative.add_term(m, c);
  }
  rep.batyrev_included = rep.qh_nonnegative == rep.batyrev_classical;

  std::vector<std::pair<Monomial, Rational>> terms(rep.discrepancy.terms().begin(),
                                                   rep.discrepancy.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return render_before(a.first, b.first); });
  for (const auto& [m, c] : terms) {
    NodalTerm t;
    t.cls = {m.q[0], m.q[1]};
    t.coefficient = c.as_integer();
    t.basis_part.z = m.z;
    rep.nodal_attribution.push_back(t);
  }
  return rep;
}

std::optional<ObstructionWitness> irreducibility_obstruction(int kappa, const CurveClass& c) {
  auto co = ray_coordinates(kappa, c);
  // curves contained in the divisor Z_i carry a multiple of its class
  const CurveClass divisor_class[4] = {{0, 1}, {0, 1}, {1, 0}, {1, kappa}};
  for (int i = 0; i < 4; ++i) {
    if (co[i] >= 0) continue;
    const CurveClass& g = divisor_class[i];
    bool multiple;
    if (g.r == 0)
      multiple = c.r == 0 && c.s >= 0;
    else
      multiple = c.s * g.r == c.r * g.s && c.r >= 0 && c.r % g.r == 0;
    if (multiple) continue; // the section or fiber itself, smooth as it stands
    ObstructionWitness w;
    w.ray_index = i + 1;
    w.coordinate = co[i];
    w.divisor_curve_class = g;
    return w;
  }
  return std::nullopt;
}

} // namespace hirz
