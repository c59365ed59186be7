#ifndef HIRZ_PRESENTATION_HPP
#define HIRZ_PRESENTATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "hirz/element.hpp"

namespace hirz {

// A ring presentation as a confluent rewrite system: linear eliminations of
// redundant generators followed by a completed (Buchberger) rule set over the
// surviving Z-variables, with q1,q2 as ordinary lowest-block variables.
// Rules are monic: each stored rule r has leading coefficient 1 and reads
// "leading monomial -> leading monomial - r".
struct Presentation {
  std::vector<std::pair<int, QuantumElement>> linear_substitutions; // Z_i -> element
  std::vector<QuantumElement> relations;       // inputs after substitution
  std::vector<QuantumElement> completed_rules; // reduced, monic, sorted by head
  std::string order_id = kTermOrderId;
};

// Completion trace for ideal-membership checking: completed_rules[i] equals
// sum_j cofactors[i][j] * relations[j], an identity a test can verify by
// direct multiplication.
struct CompletionTrace {
  std::vector<std::vector<QuantumElement>> cofactors;
};

// Buchberger completion of the given relations (after applying the linear
// substitutions).  Throws std::domain_error when a completed rule degenerates
// to a pure q-polynomial (the quotient would collapse a quantum parameter)
// and std::runtime_error if the pair queue exceeds its safety cap; neither
// occurs for the rings this project builds.
Presentation complete_relations(std::vector<QuantumElement> relations,
                                std::vector<std::pair<int, QuantumElement>> substitutions = {},
                                CompletionTrace* trace = nullptr);

// Unique normal form modulo the presentation.  The input must be a
// q-polynomial (no negative q-exponents); rewriting in the localized ring is
// not defined here and such inputs throw std::domain_error.
QuantumElement normal_form(const Presentation& p, const QuantumElement& e);

// Reduce by the completed rules only (no linear substitutions applied first).
QuantumElement reduce_by_rules(const std::vector<QuantumElement>& rules,
                               const QuantumElement& e);

// S-polynomial of two monic rules.
QuantumElement s_polynomial(const QuantumElement& f, const QuantumElement& g);

// True iff every S-polynomial of the completed rules reduces to zero.  Used
// by the confluence property tests; no pair-skipping criteria.
bool verify_confluence(const Presentation& p);

// Rules rendered as "head -> tail" lines, in stored order.
std::vector<std::string> describe_rules(const Presentation& p);

} // namespace hirz

#endif
