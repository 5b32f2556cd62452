#pragma once

#include <optional>
#include <vector>

#include "stablekernel/aggregate.hpp"
#include "stablekernel/error.hpp"
#include "stablekernel/formula.hpp"
#include "stablekernel/theory.hpp"

namespace stablekernel {

namespace detail {

inline void collect_atoms(const Formula& f, std::vector<Atom>& out) {
  switch (f.kind()) {
    case FormulaKind::Bottom: return;
    case FormulaKind::Atom: out.push_back(f.atom()); return;
    case FormulaKind::Aggregate:
      for (const auto& e : f.aggregate().elements()) collect_atoms(e.formula, out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

}  // namespace detail

/// Every atom occurring in `f`, including inside aggregate elements.
inline AtomSet atoms_of(const Formula& f) {
  std::vector<Atom> v;
  detail::collect_atoms(f, v);
  return AtomSet(std::move(v));
}

inline AtomSet atoms_of(std::span<const Formula> fs) {
  std::vector<Atom> v;
  for (const auto& f : fs) detail::collect_atoms(f, v);
  return AtomSet(std::move(v));
}

inline AtomSet atoms_of(const Theory& t) { return atoms_of(t.formulas()); }

enum class PolarityKind { StrictlyPositive, Positive, Negative };

/// Polarity of one atom occurrence: the parity of the number of implications
/// whose antecedent contains it (0 is strictly positive), plus whether some
/// enclosing subformula is a negation G → ⊥.
struct Polarity {
  PolarityKind kind;
  bool in_negation_scope;

  bool is_positive() const noexcept { return kind != PolarityKind::Negative; }
  bool is_strictly_positive() const noexcept { return kind == PolarityKind::StrictlyPositive; }

  friend bool operator==(const Polarity&, const Polarity&) = default;
};

namespace detail {

template <typename Visit>
void walk_occurrences(const Formula& f, unsigned depth, bool in_negation, Visit& visit) {
  switch (f.kind()) {
    case FormulaKind::Bottom: return;
    case FormulaKind::Atom: visit(f.atom(), depth, in_negation); return;
    case FormulaKind::Aggregate: throw AggregatePresent();
    case FormulaKind::And:
    case FormulaKind::Or:
      walk_occurrences(f.lhs(), depth, in_negation, visit);
      walk_occurrences(f.rhs(), depth, in_negation, visit);
      return;
    case FormulaKind::Implies:
      walk_occurrences(f.lhs(), depth + 1, in_negation || f.rhs().is_bottom(), visit);
      walk_occurrences(f.rhs(), depth, in_negation, visit);
      return;
  }
}

inline Polarity polarity_at(unsigned depth, bool in_negation) {
  const PolarityKind kind =
      depth == 0 ? PolarityKind::StrictlyPositive : (depth % 2 == 0 ? PolarityKind::Positive : PolarityKind::Negative);
  return {kind, in_negation};
}

}  // namespace detail

/// Polarities of the occurrences of `a` in `f`, left to right. `f` must be
/// aggregate-free.
inline std::vector<Polarity> occurrences(const Formula& f, const Atom& a) {
  if (contains_aggregate(f)) throw AggregatePresent();
  std::vector<Polarity> out;
  auto visit = [&](const Atom& b, unsigned depth, bool in_negation) {
    if (b == a) out.push_back(detail::polarity_at(depth, in_negation));
  };
  detail::walk_occurrences(f, 0, false, visit);
  return out;
}

/// Atoms with at least one strictly positive occurrence. Aggregates are
/// compiled before the analysis.
inline AtomSet head_atoms(const Formula& f, const Budget& budget = {}) {
  const Formula g = contains_aggregate(f) ? compile_aggregates(f, budget) : f;
  std::vector<Atom> out;
  auto visit = [&](const Atom& b, unsigned depth, bool) {
    if (depth == 0) out.push_back(b);
  };
  detail::walk_occurrences(g, 0, false, visit);
  return AtomSet(std::move(out));
}

inline AtomSet head_atoms(const Theory& t, const Budget& budget = {}) {
  AtomSet out;
  for (const auto& f : t) out = out | head_atoms(f, budget);
  return out;
}

/// Syntactic program classes. Traditional ⊆ Disjunctive ⊆ NestedExpressions
/// ⊆ GeneralTheory and Traditional ⊆ NondisjunctiveNested ⊆
/// NestedExpressions; Disjunctive and NondisjunctiveNested are incomparable.
enum class ProgramClass { Traditional, Disjunctive, NondisjunctiveNested, NestedExpressions, GeneralTheory };

inline const char* to_string(ProgramClass c) {
  switch (c) {
    case ProgramClass::Traditional: return "traditional";
    case ProgramClass::Disjunctive: return "disjunctive";
    case ProgramClass::NondisjunctiveNested: return "nondisjunctive-nested";
    case ProgramClass::NestedExpressions: return "nested";
    case ProgramClass::GeneralTheory: return "general";
  }
  return "?";
}

/// Whether every theory of class `a` is also of class `b`.
inline bool class_included(ProgramClass a, ProgramClass b) {
  if (a == b || b == ProgramClass::GeneralTheory) return true;
  switch (a) {
    case ProgramClass::Traditional: return true;
    case ProgramClass::Disjunctive:
    case ProgramClass::NondisjunctiveNested: return b == ProgramClass::NestedExpressions;
    default: return false;
  }
}

/// A formula read as a rule: `head ← body`. Implications are rules; any
/// other formula is a rule with body ⊤.
struct RuleView {
  Formula head;
  Formula body;
};

inline RuleView as_rule(const Formula& f) {
  if (f.kind() == FormulaKind::Implies) return {f.rhs(), f.lhs()};
  return {f, top()};
}

/// Atom or negated atom.
inline bool is_literal(const Formula& f) { return f.is_atom() || (f.is_negation() && f.lhs().is_atom()); }

/// Contains no implications other than negations (and ⊤), and no aggregates.
inline bool is_nested_expression(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom: return true;
    case FormulaKind::Aggregate: return false;
    case FormulaKind::And:
    case FormulaKind::Or: return is_nested_expression(f.lhs()) && is_nested_expression(f.rhs());
    case FormulaKind::Implies: return f.rhs().is_bottom() && is_nested_expression(f.lhs());
  }
  return false;
}

namespace detail {

inline bool is_literal_conjunction(const Formula& f) {
  if (f.is_top() || is_literal(f)) return true;
  return f.kind() == FormulaKind::And && is_literal_conjunction(f.lhs()) && is_literal_conjunction(f.rhs()) &&
         !f.lhs().is_top() && !f.rhs().is_top();
}

inline bool is_atom_disjunction_or_bottom(const Formula& f) { return f.is_bottom() || is_atom_disjunction(f); }

struct RuleShape {
  bool traditional;
  bool disjunctive;
  bool nondisjunctive_nested;
  bool nested;
};

inline RuleShape rule_shape(const Formula& f) {
  const auto [head, body] = as_rule(f);
  const bool literal_body = is_literal_conjunction(body);
  const bool nested = is_nested_expression(head) && is_nested_expression(body);
  return {head.is_atom() && literal_body, is_atom_disjunction_or_bottom(head) && literal_body,
          nested && (head.is_atom() || head.is_bottom()), nested};
}

}  // namespace detail

/// The smallest class containing every formula of `t`.
inline ProgramClass classify(const Theory& t) {
  bool traditional = true, disjunctive = true, nondisjunctive = true, nested = true;
  for (const auto& f : t) {
    const auto shape = detail::rule_shape(f);
    traditional = traditional && shape.traditional;
    disjunctive = disjunctive && shape.disjunctive;
    nondisjunctive = nondisjunctive && shape.nondisjunctive_nested;
    nested = nested && shape.nested;
  }
  if (traditional) return ProgramClass::Traditional;
  if (disjunctive) return ProgramClass::Disjunctive;
  if (nondisjunctive) return ProgramClass::NondisjunctiveNested;
  if (nested) return ProgramClass::NestedExpressions;
  return ProgramClass::GeneralTheory;
}

inline bool is_nested_program(const Theory& t) { return classify(t) != ProgramClass::GeneralTheory; }

}  // namespace stablekernel
