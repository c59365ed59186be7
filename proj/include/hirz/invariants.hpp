#ifndef HIRZ_INVARIANTS_HPP
#define HIRZ_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "hirz/element.hpp"
#include "hirz/toric.hpp"

namespace hirz {

// Genus-0, m-point invariant of CP1 in degree r with s point-class and m-s
// fundamental-class insertions: 1 when r >= 0 and s = 2r+1, else 0.
// Requires m >= 3 and 0 <= s <= m.
long long cp1_invariant(long long r, long long s, long long m);

// Invariant of F_0 = CP1 x CP1 for class (a,b), insertions and gamma given in
// the classical basis; evaluated by multilinear expansion over the tensor
// basis 1x1, Hx1, 1xH, HxH with per-factor CP1 invariants.
long long f0_invariant(const CurveClass& cls,
                       const std::vector<QuantumElement>& insertions,
                       const QuantumElement& gamma);

struct InvariantQuery {
  int k = 1; // surface F_2k
  CurveClass cls;
  std::vector<QuantumElement> insertions; // at least two
  QuantumElement gamma;                   // the final marked point
};

// Invariant of F_2k, computed by transfer to F_0: pushforward the class,
// transfer every insertion, evaluate there.
long long f2k_invariant(const InvariantQuery& q);

// All curve classes c != 0 with r >= 0, s - kr >= 0 that can support a
// non-zero invariant for these insertions: the dimension count
//   sum deg(insertions) + deg(gamma) = 4 + 2*c1_degree(c)
// plus a per-factor point-count feasibility bound.  Complete: any class
// outside the list has invariant zero.
std::vector<CurveClass> enumerate_contributing(int k,
                                               const std::vector<QuantumElement>& insertions,
                                               const QuantumElement& gamma);

// Closed-form evaluation for the three special shapes with known formulas:
//   {Z3, Z4} with gamma 1 or pt, and {Z1, Z2, Z4 x 2k} with gamma 1 or pt.
// nullopt when the query matches no shape.
std::optional<long long> closed_form_invariant(const InvariantQuery& q);

} // namespace hirz

#endif
