#ifndef HIRZ_QUANTUM_HPP
#define HIRZ_QUANTUM_HPP

#include <optional>
#include <vector>

#include "hirz/element.hpp"
#include "hirz/invariants.hpp"
#include "hirz/presentation.hpp"
#include "hirz/toric.hpp"

namespace hirz {

// cup product in H*(F_kappa), result in the classical basis
QuantumElement classical_product(int kappa, const QuantumElement& a, const QuantumElement& b);

// intersection pairing: coefficient of the point class in a.b
long long poincare_pairing(int kappa, const QuantumElement& a, const QuantumElement& b);

// Small quantum product on F_2k in the classical basis:
//   a * b = a.b + sum_{c != 0} q^c sum_i Phi^c(a, b, T_i) T^i
// over the basis {1, Z1, Z4, pt} and its intersection-dual.
QuantumElement small_quantum_product(int k, const QuantumElement& a, const QuantumElement& b);

// m-fold quantum product, m >= 2, via (m+1)-point invariants:
//   prod_j a_j = sum_c q^c sum_i Phi^c(a_1..a_m, T_i) T^i
// (the c = 0 term is the classical product).
QuantumElement m_fold_quantum_product(int k, const std::vector<QuantumElement>& factors);

// Change of additive basis between star-monomials and the classical basis:
// the only non-trivial identification is Z1*Z4 as a star-monomial against
// the point class, Z1 star Z4 = pt + k q1 q2^k.  Inputs must be supported on
// {1, Z1, Z4, Z1Z4}; exact inverses of each other.
QuantumElement star_to_classical(int k, const QuantumElement& e);
QuantumElement classical_to_star(int k, const QuantumElement& e);

// Quantum cohomology ring of F_2k as a completed rewrite system:
//   Z1^2 -> q1 q2^k,   Z4^2 -> 2k Z1Z4 + q2 - k^2 q1 q2^k
// (monomials denote star-products of Z1, Z4).
Presentation qh_presentation(int k);

// The same first relation in its alternative printed form with a negative
// q2-exponent; rendered for documentation only, never computed with.
std::vector<std::string> qh_variant_relations(int k);

// Batyrev's quantum ring for even kappa = 2k: one monomial relation
// prod_i Z_i^{<Z_i,c>} = q^c per Hilbert-basis class c, then completion.
Presentation batyrev_presentation(int kappa);

// The monomial relation for one class, before linear elimination.
QuantumElement batyrev_monomial_relation(int kappa, const CurveClass& c);

// Product of the factors in Batyrev's ring: normal form of the cup-product
// word.  The result can keep monomials that are irreducible there (Z1^2,
// products with small q-support) even though they vanish classically.
QuantumElement batyrev_product(int kappa, const std::vector<QuantumElement>& factors);

// One discrepancy term, attributed to the curve class read off q^c.
struct NodalTerm {
  CurveClass cls;
  long long coefficient = 0;
  Monomial basis_part; // Z-part the term multiplies (1 or Z1*Z4)
};

struct ProductReport {
  int k = 1;
  std::vector<QuantumElement> factors;
  QuantumElement qh_classical_basis; // m-fold quantum product, classical basis
  QuantumElement qh_normal_form;     // presentation route, star-monomials
  QuantumElement batyrev_result;     // Batyrev normal form, unprojected
  QuantumElement batyrev_classical;  // ... projected to the classical basis
  QuantumElement discrepancy;        // qh_classical_basis - batyrev_classical
  QuantumElement qh_nonnegative;     // qh terms with all ray coordinates >= 0
  bool batyrev_included = false;     // qh_nonnegative == batyrev_classical
  std::vector<NodalTerm> nodal_attribution;
};

// Same product through both rings, with the discrepancy isolated and each
// term attributed to its curve class.  The two quantum routes are checked
// against each other internally.
ProductReport compare_rings(int k, const std::vector<QuantumElement>& factors);

// Negative ray coordinate forcing every representative into a divisor whose
// own curves cannot carry the class: the witness that no irreducible
// representative exists.
struct ObstructionWitness {
  int ray_index = 0;    // 1-based, <Z_i, c> < 0
  long long coordinate = 0;
  CurveClass divisor_curve_class; // class of curves inside that divisor
};

// nullopt when c has an irreducible representative candidate: either all
// coordinates are non-negative, or c is a non-negative multiple of the
// contained divisor's own class (the section itself).
std::optional<ObstructionWitness> irreducibility_obstruction(int kappa, const CurveClass& c);

} // namespace hirz

#endif
