#ifndef HIRZ_TORIC_HPP
#define HIRZ_TORIC_HPP

#include <array>
#include <string>
#include <vector>

#include "hirz/element.hpp"
#include "hirz/presentation.hpp"

namespace hirz {

// Degree-2 curve class on F_kappa, written in the basis dual to the divisor
// basis {Z1, Z4}: r = <Z1, c>, s = <Z4, c>.
struct CurveClass {
  long long r = 0;
  long long s = 0;

  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.r == b.r && a.s == b.s;
  }
  friend bool operator!=(const CurveClass& a, const CurveClass& b) { return !(a == b); }
  friend bool operator<(const CurveClass& a, const CurveClass& b) {
    return a.r != b.r ? a.r < b.r : a.s < b.s;
  }
};

// Fan of the Hirzebruch surface F_kappa: four rays, two primitive
// collections, and the dual basis of the relation lattice.
struct FanData {
  int kappa = 0;
  std::array<std::array<int, 2>, 4> rays{};                  // v1..v4
  std::array<std::array<int, 2>, 2> primitive_collections{}; // 1-based ray indices
  std::array<std::array<int, 4>, 2> lattice_basis{};         // lambda1, lambda2 in ray coords
};

FanData build_fan(int kappa); // kappa >= 0

// <Z_i, c> for i = 1..4: the expansion of c in ray coordinates.
std::array<long long, 4> ray_coordinates(int kappa, const CurveClass& c);

// degree of c against the anticanonical class sum_i Z_i
long long c1_degree(int kappa, const CurveClass& c);

// expected dimension of the genus-0 moduli space with no marked points,
// doubled to real dimension: 2*(2 + c1_degree)
long long virtual_dimension(int kappa, const CurveClass& c);

// The diffeomorphism F_2k ~ F_0 on degree-2 homology: (r,s) -> (r, s-kr).
CurveClass pushforward_class(int k, const CurveClass& c);

// The same diffeomorphism on divisors, F_2k -> F_0:
//   Z1, Z2 -> Z1;  Z3 -> Z4 - k*Z1;  Z4 -> Z4 + k*Z1   (right side on F_0).
QuantumElement transfer_divisor(int k, int index); // index 1..4

// Transfer of an arbitrary F_2k class to F_0, compatible with cup products:
// reduce to the classical basis on F_2k, then map basis elements.
QuantumElement transfer_element(int k, const QuantumElement& e);

// Minimal generators of the monoid {c : all ray coordinates >= 0}, found by
// bounded scan + sieve, sorted by (r, s).
std::vector<CurveClass> nonnegative_hilbert_basis(int kappa);

// Cohomology ring H*(F_kappa) as a rewrite system:
//   Z2 -> Z1,  Z3 -> Z4 - kappa*Z1,  Z1^2 -> 0,  Z4^2 -> kappa*Z1*Z4,
// with additive basis {1, Z1, Z4, Z1*Z4}.
Presentation classical_presentation(int kappa);

// Image of e in the additive basis.
QuantumElement classical_reduce(int kappa, const QuantumElement& e);

// "1", "Z1".."Z4", "pt" (= Z1*Z4) as elements; unknown names throw.
QuantumElement cohomology_symbol(const std::string& name);

} // namespace hirz

#endif
