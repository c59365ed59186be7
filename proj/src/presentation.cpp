#include "hirz/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace hirz {

namespace {

constexpr std::size_t kMaxRules = 256;
constexpr std::size_t kMaxPairReductions = 20000;

struct Work {
  QuantumElement p;
  std::vector<QuantumElement> cof; // p = sum cof[j] * input[j]
};

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.z[i] = std::max(a.z[i], b.z[i]);
  for (int i = 0; i < 2; ++i) r.q[i] = std::max(a.q[i], b.q[i]);
  return r;
}

void make_monic(Work& w) {
  Rational lead = w.p.leading().second;
  if (lead == Rational(1)) return;
  Rational inv = Rational(1) / lead;
  w.p = w.p.scaled(inv);
  for (auto& c : w.cof) c = c.scaled(inv);
}

// Largest reducible term of e under the rule heads, or nullopt.
std::optional<std::pair<Monomial, Rational>> find_reducible(
    const QuantumElement& e, const std::vector<Work>& rules, std::size_t* which) {
  const auto& terms = e.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    for (std::size_t g = 0; g < rules.size(); ++g) {
      if (rules[g].p.is_zero()) continue;
      if (rules[g].p.leading().first.divides(it->first)) {
        *which = g;
        return std::make_pair(it->first, it->second);
      }
    }
  }
  return std::nullopt;
}

// Full reduction: repeat until no term of w.p is divisible by any rule head.
// Terminates because the division order is well-founded on non-negative
// exponents and each step trades a term for strictly smaller ones.
void reduce_full(Work& w, const std::vector<Work>& rules) {
  for (;;) {
    std::size_t g = 0;
    auto red = find_reducible(w.p, rules, &g);
    if (!red) return;
    Monomial quot = red->first.quotient(rules[g].p.leading().first);
    const Rational& c = red->second;
    w.p -= rules[g].p.times_monomial(quot, c);
    for (std::size_t j = 0; j < w.cof.size(); ++j)
      w.cof[j] -= rules[g].cof[j].times_monomial(quot, c);
  }
}

Work s_poly(const Work& f, const Work& g) {
  const Monomial& hf = f.p.leading().first;
  const Monomial& hg = g.p.leading().first;
  Monomial l = lcm(hf, hg);
  Work r;
  r.p = f.p.times_monomial(l.quotient(hf)) - g.p.times_monomial(l.quotient(hg));
  r.cof.resize(f.cof.size());
  for (std::size_t j = 0; j < f.cof.size(); ++j)
    r.cof[j] = f.cof[j].times_monomial(l.quotient(hf)) - g.cof[j].times_monomial(l.quotient(hg));
  return r;
}

void check_not_degenerate(const Work& w) {
  if (w.p.is_zero()) return;
  if (w.p.leading().first.z_is_one())
    throw std::domain_error(
        "completion: relations force a pure quantum-parameter identity (" +
        render_element(w.p) + "); the quotient is degenerate");
}

struct PairOrder {
  // deterministic pair selection: smallest lcm first, then indices
  bool operator()(const std::tuple<Monomial, std::size_t, std::size_t>& a,
                  const std::tuple<Monomial, std::size_t, std::size_t>& b) const {
    int c = cmp_division(std::get<0>(a), std::get<0>(b));
    if (c != 0) return c < 0;
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  }
};

} // namespace

QuantumElement s_polynomial(const QuantumElement& f, const QuantumElement& g) {
  Work wf{f, {}}, wg{g, {}};
  return s_poly(wf, wg).p;
}

QuantumElement reduce_by_rules(const std::vector<QuantumElement>& rules,
                               const QuantumElement& e) {
  std::vector<Work> ws;
  ws.reserve(rules.size());
  for (const auto& r : rules) ws.push_back({r, {}});
  Work w{e, {}};
  reduce_full(w, ws);
  return w.p;
}

Presentation complete_relations(std::vector<QuantumElement> relations,
                                std::vector<std::pair<int, QuantumElement>> substitutions,
                                CompletionTrace* trace) {
  Presentation out;
  out.linear_substitutions = substitutions;

  for (auto& rel : relations) {
    for (const auto& [var, repl] : substitutions) rel = rel.substitute_z(var, repl);
    if (!rel.is_q_polynomial())
      throw std::domain_error("completion: relations must be q-polynomial");
  }
  out.relations = relations;

  std::vector<Work> G;
  const std::size_t n = relations.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (relations[j].is_zero()) continue;
    Work w{relations[j], std::vector<QuantumElement>(n)};
    w.cof[j] = QuantumElement::constant(1);
    reduce_full(w, G); // keep the working set lightly reduced as it grows
    if (w.p.is_zero()) continue;
    check_not_degenerate(w);
    make_monic(w);
    G.push_back(std::move(w));
  }

  std::set<std::tuple<Monomial, std::size_t, std::size_t>, PairOrder> pending;
  auto queue_pairs_with = [&](std::size_t idx) {
    for (std::size_t i = 0; i < G.size(); ++i)
      if (i != idx)
        pending.emplace(lcm(G[i].p.leading().first, G[idx].p.leading().first),
                        std::min(i, idx), std::max(i, idx));
  };
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      pending.emplace(lcm(G[i].p.leading().first, G[j].p.leading().first), i, j);

  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > kMaxPairReductions)
      throw std::runtime_error("completion: pair budget exhausted");
    auto [l, i, j] = *pending.begin();
    pending.erase(pending.begin());
    Work h = s_poly(G[i], G[j]);
    reduce_full(h, G);
    if (h.p.is_zero()) continue;
    check_not_degenerate(h);
    make_monic(h);
    G.push_back(std::move(h));
    if (G.size() > kMaxRules) throw std::runtime_error("completion: rule budget exhausted");
    queue_pairs_with(G.size() - 1);
  }

  // reduced system: minimal heads, then fully reduced tails
  std::vector<Work> kept;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& hi = G[i].p.leading().first;
      const Monomial& hj = G[j].p.leading().first;
      if (hj.divides(hi) && !(hi == hj)) redundant = true;
      if (hi == hj && j < i) redundant = true; // duplicate heads: keep the first
    }
    if (!redundant) kept.push_back(G[i]);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Work> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      Work w = kept[i];
      reduce_full(w, others);
      if (w.p.is_zero()) throw std::logic_error("completion: minimal rule vanished");
      make_monic(w);
      if (!(w.p == kept[i].p)) {
        kept[i] = std::move(w);
        changed = true;
      }
    }
  }

  std::sort(kept.begin(), kept.end(), [](const Work& a, const Work& b) {
    return cmp_division(a.p.leading().first, b.p.leading().first) < 0;
  });

  for (auto& w : kept) out.completed_rules.push_back(w.p);
  if (trace) {
    trace->cofactors.clear();
    for (auto& w : kept) trace->cofactors.push_back(w.cof);
  }
  return out;
}

QuantumElement normal_form(const Presentation& p, const QuantumElement& e) {
  QuantumElement x = e;
  for (const auto& [var, repl] : p.linear_substitutions) x = x.substitute_z(var, repl);
  if (!x.is_q_polynomial())
    throw std::domain_error("normal form: input must be q-polynomial");
  return reduce_by_rules(p.completed_rules, x);
}

bool verify_confluence(const Presentation& p) {
  const auto& rules = p.completed_rules;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      QuantumElement s = s_polynomial(rules[i], rules[j]);
      if (!reduce_by_rules(rules, s).is_zero()) return false;
    }
  return true;
}

std::vector<std::string> describe_rules(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.completed_rules) {
    const Monomial& head = r.leading().first;
    QuantumElement tail = QuantumElement::monomial(head) - r; // rules are monic
    out.push_back(render_element(QuantumElement::monomial(head)) + " -> " +
                  render_element(tail));
  }
  return out;
}

} // namespace hirz
