#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablekernel/aggregate.hpp"
#include "stablekernel/analysis.hpp"
#include "stablekernel/error.hpp"
#include "stablekernel/formula.hpp"
#include "stablekernel/simplify.hpp"
#include "stablekernel/theory.hpp"

namespace stablekernel {

/// An atom or a negated atom.
struct Literal {
  Atom atom;
  bool negated = false;

  Literal complement() const { return {atom, !negated}; }
  Formula formula() const { return negated ? neg(Formula::atom(atom)) : Formula::atom(atom); }

  static std::optional<Literal> from(const Formula& f) {
    if (f.is_atom()) return Literal{f.atom(), false};
    if (f.is_negation() && f.lhs().is_atom()) return Literal{f.lhs().atom(), true};
    return std::nullopt;
  }

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct WeightedLiteral {
  Literal literal;
  Weight weight;

  friend bool operator==(const WeightedLiteral&, const WeightedLiteral&) = default;
};

/// `N ≤ {l1=w1, ..., lm=wm}` (LowerBound) or `{l1=w1, ..., lm=wm} ≤ N`
/// (UpperBound).
struct WeightConstraint {
  enum class Direction { LowerBound, UpperBound };

  Direction direction = Direction::LowerBound;
  Weight bound;
  std::vector<WeightedLiteral> elements;

  friend bool operator==(const WeightConstraint&, const WeightConstraint&) = default;
};

/// Rewrites each (l, w) with w < 0 as (l̄, −w) and raises the bound by −w.
/// Both directions move the bound the same way, since w·l = w + (−w)·l̄.
inline WeightConstraint eliminate_negative_weights(const WeightConstraint& c) {
  WeightConstraint out{c.direction, c.bound, {}};
  for (const auto& e : c.elements) {
    if (e.weight < Weight(0)) {
      out.elements.push_back({e.literal.complement(), -e.weight});
      out.bound -= e.weight;
    } else {
      out.elements.push_back(e);
    }
  }
  return out;
}

/// The nested expression [C]: for a lower bound, the disjunction over index
/// sets I with N ≤ Σ_I w of ∧_I l; for an upper bound, the negation of the
/// disjunction over I with N < Σ_I w.
inline Formula wc_to_nested(const WeightConstraint& c, const Budget& budget = {}) {
  const std::size_t n = c.elements.size();
  check_aggregate_budget(n, budget);
  const bool lower = c.direction == WeightConstraint::Direction::LowerBound;
  std::vector<Formula> disjuncts;
  for (std::uint64_t mask : canonical_subsets(n)) {
    Weight total;
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1U)) continue;
      total += c.elements[i].weight;
      lits.push_back(c.elements[i].literal.formula());
    }
    if (lower ? c.bound <= total : c.bound < total) disjuncts.push_back(conj_all(lits));
  }
  const Formula d = disj_all(disjuncts);
  return lower ? d : neg(d);
}

/// `N ≤ S` as sum⟨S⟩ ≥ N and `S ≤ N` as sum⟨S⟩ ≤ N.
inline Aggregate wc_to_aggregate(const WeightConstraint& c) {
  std::vector<AggregateElement> elems;
  elems.reserve(c.elements.size());
  for (const auto& e : c.elements) elems.push_back({e.literal.formula(), e.weight});
  const Rel rel = c.direction == WeightConstraint::Direction::LowerBound ? Rel::Ge : Rel::Le;
  return Aggregate(AggOp::Sum, std::move(elems), rel, c.bound);
}

/// Inverse of wc_to_aggregate(): sum or count aggregates over literals with
/// relation ≥ or ≤. Count elements get weight 1.
inline std::optional<WeightConstraint> aggregate_to_wc(const Aggregate& a) {
  if (a.op() != AggOp::Sum && a.op() != AggOp::Count) return std::nullopt;
  if (a.rel() != Rel::Ge && a.rel() != Rel::Le) return std::nullopt;
  WeightConstraint c;
  c.direction = a.rel() == Rel::Ge ? WeightConstraint::Direction::LowerBound : WeightConstraint::Direction::UpperBound;
  c.bound = a.bound();
  for (const auto& e : a.elements()) {
    auto lit = Literal::from(e.formula);
    if (!lit) return std::nullopt;
    c.elements.push_back({*lit, a.op() == AggOp::Count ? Weight(1) : e.weight});
  }
  return c;
}

/// A rule `head ← C1 ∧ ... ∧ Cn`; a missing head is ⊥.
struct WCRule {
  std::optional<Atom> head;
  std::vector<WeightConstraint> body;
};

namespace detail {

inline std::vector<Formula> body_conjuncts(const Formula& body) {
  std::vector<Formula> out;
  if (!body.is_top()) flatten(body, FormulaKind::And, out);
  return out;
}

inline std::optional<WeightConstraint> as_weight_constraint(const Formula& f) {
  if (auto lit = Literal::from(f))
    return WeightConstraint{WeightConstraint::Direction::LowerBound, Weight(1), {{*lit, Weight(1)}}};
  if (f.kind() == FormulaKind::Aggregate) return aggregate_to_wc(f.aggregate());
  return std::nullopt;
}

}  // namespace detail

/// Reads `t` as a weight-constraint program. Body literals l stand for
/// 1 ≤ {l=1}.
inline std::vector<WCRule> as_wc_program(const Theory& t) {
  std::vector<WCRule> rules;
  for (const auto& f : t) {
    const auto [head, body] = as_rule(f);
    if (!head.is_atom() && !head.is_bottom())
      throw NotWeightConstraintProgram("head is not an atom or bot: " + print_statement(f));
    WCRule rule;
    if (head.is_atom()) rule.head = head.atom();
    for (const auto& c : detail::body_conjuncts(body)) {
      if (c.is_top()) continue;
      auto wc = detail::as_weight_constraint(c);
      if (!wc) throw NotWeightConstraintProgram("body item is not a weight constraint: " + print_formula(c));
      rule.body.push_back(std::move(*wc));
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

inline bool is_wc_program(const Theory& t) {
  try {
    as_wc_program(t);
    return true;
  } catch (const NotWeightConstraintProgram&) {
    return false;
  }
}

/// The smodels reading: negative weights eliminated, then each constraint
/// replaced by its nested expression [C].
inline Theory smodels_translate(const Theory& t, const Budget& budget = {}) {
  std::vector<Formula> out;
  for (const auto& rule : as_wc_program(t)) {
    std::vector<Formula> body;
    for (const auto& c : rule.body) body.push_back(wc_to_nested(eliminate_negative_weights(c), budget));
    const Formula head = rule.head ? Formula::atom(*rule.head) : Formula::bottom();
    out.push_back(Formula::implies(conj_all(body), head));
  }
  return Theory(std::move(out));
}

/// Aggregate whose elements are all literals.
inline bool is_pdb_aggregate(const Aggregate& a) {
  for (const auto& e : a.elements())
    if (!Literal::from(e.formula)) return false;
  return true;
}

/// The nested expression A_tr: the disjunction, over pairs I1 ⊆ I2 such that
/// every I between them satisfies op(W_I) ≺ N, of
/// (∧_{i∈I1} li) ∧ (∧_{i∉I2} l̄i).
inline Formula pdb_translate(const Aggregate& a, const Budget& budget = {}) {
  if (!is_pdb_aggregate(a)) throw NotPDB("aggregate elements are not literals");
  const std::size_t n = a.size();
  check_aggregate_budget(n, budget);
  std::vector<Literal> lits;
  for (const auto& e : a.elements()) lits.push_back(*Literal::from(e.formula));
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> ok(count);
  for (std::uint64_t m = 0; m < count; ++m) ok[m] = aggregate_holds_for(a, m) ? 1 : 0;
  const auto order = canonical_subsets(n);
  std::vector<Formula> disjuncts;
  for (std::uint64_t lo : order) {
    if (!ok[lo]) continue;
    for (std::uint64_t hi : order) {
      if ((lo & hi) != lo) continue;
      const std::uint64_t free = hi & ~lo;
      bool all = true;
      for (std::uint64_t s = free;; s = (s - 1) & free) {
        if (!ok[lo | s]) {
          all = false;
          break;
        }
        if (s == 0) break;
      }
      if (!all) continue;
      std::vector<Formula> parts;
      for (std::size_t i = 0; i < n; ++i)
        if ((lo >> i) & 1U) parts.push_back(lits[i].formula());
      for (std::size_t i = 0; i < n; ++i)
        if (!((hi >> i) & 1U)) parts.push_back(lits[i].complement().formula());
      disjuncts.push_back(conj_all(parts));
    }
  }
  return disj_all(disjuncts);
}

namespace detail {

inline bool is_pdb_body_item(const Formula& f) {
  if (f.is_top() || Literal::from(f)) return true;
  return f.kind() == FormulaKind::Aggregate && is_pdb_aggregate(f.aggregate());
}

inline Formula pdb_body_item(const Formula& f, const Budget& budget) {
  return f.kind() == FormulaKind::Aggregate ? pdb_translate(f.aggregate(), budget) : f;
}

}  // namespace detail

/// Rules `a ← B` with a an atom or ⊥ and B a conjunction of literals and
/// aggregates over literals.
inline bool is_pdb_program(const Theory& t) {
  for (const auto& f : t) {
    const auto [head, body] = as_rule(f);
    if (!head.is_atom() && !head.is_bottom()) return false;
    for (const auto& c : detail::body_conjuncts(body))
      if (!detail::is_pdb_body_item(c)) return false;
  }
  return true;
}

/// Replaces every aggregate in the rule bodies by A_tr.
inline Theory pdb_translate(const Theory& t, const Budget& budget = {}) {
  if (!is_pdb_program(t)) throw NotPDB("not a program with aggregates over literals");
  std::vector<Formula> out;
  for (const auto& f : t) {
    const auto [head, body] = as_rule(f);
    if (f.kind() != FormulaKind::Implies) {
      out.push_back(f);
      continue;
    }
    std::vector<Formula> items;
    for (const auto& c : detail::body_conjuncts(body)) items.push_back(detail::pdb_body_item(c, budget));
    out.push_back(Formula::implies(conj_all(items), head));
  }
  return Theory(std::move(out));
}

/// l1 ∧ ... ∧ lm → a1 ∨ ... ∨ an becomes the n formulas
/// (l1 ∧ ... ∧ lm ∧ (a1 → ai) ∧ ... ∧ (an → ai)) → ai.
inline Theory disjunctive_to_implications(const Formula& rule) {
  const auto [head, body] = as_rule(rule);
  if (!detail::is_atom_disjunction(head)) throw NotDisjunctiveRule("head is not a disjunction of atoms");
  std::vector<Formula> lits;
  for (const auto& c : detail::body_conjuncts(body)) {
    if (!Literal::from(c)) throw NotDisjunctiveRule("body is not a conjunction of literals");
    lits.push_back(c);
  }
  const auto heads = detail::operands(head, FormulaKind::Or);
  std::vector<Formula> out;
  for (const auto& ai : heads) {
    std::vector<Formula> parts = lits;
    for (const auto& aj : heads) parts.push_back(Formula::implies(aj, ai));
    out.push_back(Formula::implies(conj_all(parts), ai));
  }
  return Theory(std::move(out));
}

using Definitions = std::map<Atom, Formula>;

namespace detail {

inline Formula as_aggregate_free(const Formula& f, const Budget& budget) {
  return contains_aggregate(f) ? compile_aggregates(f, budget) : f;
}

}  // namespace detail

/// Γ ∪ {Def(q) → q}. Each q must not occur in Γ, and no Def(q) may mention a
/// defined atom.
inline Theory add_explicit_defs(const Theory& t, const Definitions& defs) {
  const AtomSet vocab = atoms_of(t);
  std::vector<Formula> out(t.begin(), t.end());
  for (const auto& [q, def] : defs) {
    if (vocab.contains(q)) throw PolarityViolation("defined atom " + q.name() + " occurs in the theory");
    for (const auto& [r, unused] : defs)
      if (atoms_of(def).contains(r)) throw PolarityViolation("definition of " + q.name() + " mentions " + r.name());
    out.push_back(Formula::implies(def, Formula::atom(q)));
  }
  return Theory(std::move(out));
}

/// Γ ∪ {Def(q) ↔ q}. Positive occurrences of defined atoms in Γ must lie in
/// the scope of negation, and so must negative occurrences of defined atoms
/// in each Def(q).
inline Theory complete(const Theory& t, const Definitions& defs, const Budget& budget = {}) {
  for (const auto& f : t) {
    const Formula g = detail::as_aggregate_free(f, budget);
    for (const auto& [q, unused] : defs)
      for (const auto& p : occurrences(g, q))
        if (p.is_positive() && !p.in_negation_scope)
          throw PolarityViolation("positive occurrence of " + q.name() + " outside negation in " + print_statement(f));
  }
  for (const auto& [q, def] : defs) {
    const Formula g = detail::as_aggregate_free(def, budget);
    for (const auto& [r, unused] : defs)
      for (const auto& p : occurrences(g, r))
        if (!p.is_positive() && !p.in_negation_scope)
          throw PolarityViolation("negative occurrence of " + r.name() + " outside negation in the definition of " +
                                  q.name());
  }
  std::vector<Formula> out(t.begin(), t.end());
  for (const auto& [q, def] : defs) out.push_back(iff(def, Formula::atom(q)));
  return Theory(std::move(out));
}

/// Replaces every aggregate, outermost first, by `fn` of it.
template <typename Fn>
Formula map_aggregates(const Formula& f, const Fn& fn) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom: return f;
    case FormulaKind::Aggregate: return fn(f.aggregate());
    case FormulaKind::And: return Formula::conj(map_aggregates(f.lhs(), fn), map_aggregates(f.rhs(), fn));
    case FormulaKind::Or: return Formula::disj(map_aggregates(f.lhs(), fn), map_aggregates(f.rhs(), fn));
    case FormulaKind::Implies: return Formula::implies(map_aggregates(f.lhs(), fn), map_aggregates(f.rhs(), fn));
  }
  return f;
}

template <typename Fn>
Theory map_aggregates(const Theory& t, const Fn& fn) {
  std::vector<Formula> out;
  for (const auto& f : t) out.push_back(map_aggregates(f, fn));
  return Theory(std::move(out));
}

/// compile_monotone() or compile_antimonotone(), whichever applies.
inline Formula compile_simplified(const Aggregate& a, const Budget& budget = {}) {
  switch (classify_monotonicity(a, budget)) {
    case Monotonicity::Monotone:
    case Monotonicity::Both: return compile_monotone(a, budget);
    case Monotonicity::Antimonotone: return compile_antimonotone(a, budget);
    case Monotonicity::Neither: break;
  }
  throw NotMonotone("aggregate is neither monotone nor antimonotone: " + print_formula(Formula::aggregate(a)));
}

}  // namespace stablekernel
