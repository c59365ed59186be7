#include "hirz/toric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hirz {

FanData build_fan(int kappa) {
  if (kappa < 0) throw std::domain_error("fan: kappa must be non-negative");
  FanData f;
  f.kappa = kappa;
  f.rays = {{{1, 0}, {-1, kappa}, {0, 1}, {0, -1}}};
  f.primitive_collections = {{{1, 2}, {3, 4}}};
  f.lattice_basis = {{{1, 1, -kappa, 0}, {0, 0, 1, 1}}};
  return f;
}

std::array<long long, 4> ray_coordinates(int kappa, const CurveClass& c) {
  if (kappa < 0) throw std::domain_error("fan: kappa must be non-negative");
  return {c.r, c.r, c.s - static_cast<long long>(kappa) * c.r, c.s};
}

long long c1_degree(int kappa, const CurveClass& c) {
  auto co = ray_coordinates(kappa, c);
  return co[0] + co[1] + co[2] + co[3];
}

long long virtual_dimension(int kappa, const CurveClass& c) {
  return 2 * (2 + c1_degree(kappa, c));
}

CurveClass pushforward_class(int k, const CurveClass& c) {
  if (k < 0) throw std::domain_error("transfer: k must be non-negative");
  return {c.r, c.s - static_cast<long long>(k) * c.r};
}

QuantumElement transfer_divisor(int k, int index) {
  if (k < 0) throw std::domain_error("transfer: k must be non-negative");
  QuantumElement z1 = QuantumElement::variable(1);
  QuantumElement z4 = QuantumElement::variable(4);
  switch (index) {
    case 1:
    case 2:
      return z1;
    case 3:
      return z4 - Rational(k) * z1;
    case 4:
      return z4 + Rational(k) * z1;
    default:
      throw std::domain_error("transfer: no divisor Z" + std::to_string(index));
  }
}

QuantumElement transfer_element(int k, const QuantumElement& e) {
  QuantumElement reduced = classical_reduce(2 * k, e);
  QuantumElement out;
  QuantumElement z4_image = transfer_divisor(k, 4);
  for (const auto& [m, c] : reduced.terms()) {
    QuantumElement piece = QuantumElement::constant(c);
    Monomial qpart;
    qpart.q = m.q;
    piece = piece.times_monomial(qpart);
    if (m.z[0] > 0) piece *= QuantumElement::variable(1).pow(m.z[0]);
    if (m.z[3] > 0) piece *= z4_image.pow(m.z[3]);
    out += classical_reduce(0, piece);
  }
  return out;
}

std::vector<CurveClass> nonnegative_hilbert_basis(int kappa) {
  if (kappa < 0) throw std::domain_error("fan: kappa must be non-negative");
  const long long B = std::max(8, 4 * kappa + 4);
  std::vector<CurveClass> cone;
  for (long long r = 0; r <= B; ++r)
    for (long long s = 0; s <= B; ++s) {
      if (r == 0 && s == 0) continue;
      auto co = ray_coordinates(kappa, {r, s});
      if (std::all_of(co.begin(), co.end(), [](long long v) { return v >= 0; }))
        cone.push_back({r, s});
    }
  std::vector<CurveClass> basis;
  for (const auto& c : cone) {
    bool decomposable = false;
    for (const auto& a : cone) {
      CurveClass b{c.r - a.r, c.s - a.s};
      if (b.r == 0 && b.s == 0) continue;
      if (b.r < 0 || b.s < 0) continue;
      auto co = ray_coordinates(kappa, b);
      if (std::all_of(co.begin(), co.end(), [](long long v) { return v >= 0; })) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.push_back(c);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Presentation classical_presentation(int kappa) {
  if (kappa < 0) throw std::domain_error("fan: kappa must be non-negative");
  static std::map<int, Presentation> cache;
  auto it = cache.find(kappa);
  if (it != cache.end()) return it->second;
  QuantumElement z1 = QuantumElement::variable(1);
  QuantumElement z4 = QuantumElement::variable(4);
  Presentation p = complete_relations(
      {z1 * z1, z4 * z4 - Rational(kappa) * (z1 * z4)},
      {{2, z1}, {3, z4 - Rational(kappa) * z1}});
  cache.emplace(kappa, p);
  return p;
}

QuantumElement classical_reduce(int kappa, const QuantumElement& e) {
  return normal_form(classical_presentation(kappa), e);
}

QuantumElement cohomology_symbol(const std::string& name) {
  if (name == "1") return QuantumElement::constant(1);
  if (name == "pt") return QuantumElement::variable(1) * QuantumElement::variable(4);
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '4')
    return QuantumElement::variable(name[1] - '0');
  throw std::domain_error("unknown cohomology symbol '" + name + "'");
}

} // namespace hirz
