#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stablekernel/analysis.hpp"
#include "stablekernel/error.hpp"
#include "stablekernel/evaluation.hpp"
#include "stablekernel/theory.hpp"

namespace stablekernel {

namespace detail {

struct Reduced {
  bool satisfied;
  Formula formula;
};

// Computes satisfaction and reduct bottom-up in one pass.
inline Reduced reduce(const Formula& f, const Interpretation& x) {
  switch (f.kind()) {
    case FormulaKind::Bottom: return {false, f};
    case FormulaKind::Atom: {
      const bool s = x.contains(f.atom());
      return {s, s ? f : Formula::bottom()};
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      auto l = reduce(f.lhs(), x);
      auto r = reduce(f.rhs(), x);
      bool s = false;
      switch (f.kind()) {
        case FormulaKind::And: s = l.satisfied && r.satisfied; break;
        case FormulaKind::Or: s = l.satisfied || r.satisfied; break;
        default: s = !l.satisfied || r.satisfied; break;
      }
      if (!s) return {false, Formula::bottom()};
      switch (f.kind()) {
        case FormulaKind::And: return {true, Formula::conj(std::move(l.formula), std::move(r.formula))};
        case FormulaKind::Or: return {true, Formula::disj(std::move(l.formula), std::move(r.formula))};
        default: return {true, Formula::implies(std::move(l.formula), std::move(r.formula))};
      }
    }
    case FormulaKind::Aggregate: {
      const Aggregate& a = f.aggregate();
      std::vector<Formula> reduced;
      std::vector<Weight> ws;
      reduced.reserve(a.size());
      for (const auto& e : a.elements()) {
        auto r = reduce(e.formula, x);
        if (r.satisfied) ws.push_back(e.weight);
        reduced.push_back(std::move(r.formula));
      }
      if (!holds(a.rel(), eval_op(a.op(), ws), a.bound())) return {false, Formula::bottom()};
      return {true, Formula::aggregate(a.with_formulas(std::move(reduced)))};
    }
  }
  return {false, Formula::bottom()};
}

}  // namespace detail

/// F^X: every maximal subformula (aggregates included) not satisfied by X
/// is replaced by ⊥.
inline Formula reduct_ferraris(const Formula& f, const Interpretation& x) { return detail::reduce(f, x).formula; }

inline std::vector<Formula> reduct_ferraris(std::span<const Formula> fs, const Interpretation& x) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(reduct_ferraris(f, x));
  return out;
}

inline Theory reduct_ferraris(const Theory& t, const Interpretation& x) {
  return Theory(reduct_ferraris(t.formulas(), x));
}

namespace detail {

// Nested-expression reduct: maximal negations become ⊤ or ⊥.
inline Formula nested_reduct(const Formula& f, const Interpretation& x) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom: return f;
    case FormulaKind::And: return Formula::conj(nested_reduct(f.lhs(), x), nested_reduct(f.rhs(), x));
    case FormulaKind::Or: return Formula::disj(nested_reduct(f.lhs(), x), nested_reduct(f.rhs(), x));
    case FormulaKind::Implies:
      if (f.is_negation()) return sat(x, f) ? top() : Formula::bottom();
      break;
    case FormulaKind::Aggregate: break;
  }
  throw NotNested("not a nested expression: " + print_formula(f));
}

inline std::vector<Formula> reduct_lif99_rules(std::span<const Formula> fs, const Interpretation& x) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    const auto [head, body] = as_rule(f);
    if (!is_nested_expression(head) || !is_nested_expression(body))
      throw NotNested("not a rule with nested expressions: " + print_statement(f));
    if (f.kind() == FormulaKind::Implies)
      out.push_back(Formula::implies(nested_reduct(body, x), nested_reduct(head, x)));
    else
      out.push_back(nested_reduct(head, x));
  }
  return out;
}

}  // namespace detail

/// Π^X̲ for programs with nested expressions: in each rule F ← G, each
/// maximal ¬H becomes ⊤ if X ⊨ ¬H and ⊥ otherwise.
inline Theory reduct_lif99(const Theory& t, const Interpretation& x) {
  return Theory(detail::reduct_lif99_rules(t.formulas(), x));
}

namespace detail {

inline bool is_literal_conjunction_or_top(const Formula& f) {
  if (f.is_top() || is_literal(f)) return true;
  return f.kind() == FormulaKind::And && is_literal_conjunction_or_top(f.lhs()) &&
         is_literal_conjunction_or_top(f.rhs());
}

inline bool is_flp_aggregate(const Formula& f) {
  if (f.kind() != FormulaKind::Aggregate) return false;
  for (const auto& e : f.aggregate().elements())
    if (!is_literal_conjunction_or_top(e.formula)) return false;
  return true;
}

// Body conjunct: A, ¬A, a, ¬a or ⊤.
inline bool is_flp_body_item(const Formula& f, bool allow_negation) {
  if (f.is_top() || f.is_atom() || is_flp_aggregate(f)) return true;
  if (f.is_negation()) return allow_negation && (f.lhs().is_atom() || is_flp_aggregate(f.lhs()));
  return false;
}

inline bool is_flp_body(const Formula& f, bool allow_negation) {
  if (is_flp_body_item(f, allow_negation)) return true;
  return f.kind() == FormulaKind::And && is_flp_body(f.lhs(), allow_negation) && is_flp_body(f.rhs(), allow_negation);
}

}  // namespace detail

/// Rules a1 ∨ ... ∨ an ← A1 ∧ ... ∧ Am ∧ ¬Am+1 ∧ ... ∧ ¬Ap whose aggregates
/// have conjunctions of literals as elements. Body atoms stand for
/// sum⟨{a=1}⟩ ≥ 1.
inline bool is_flp_program(const Theory& t, bool positive_only = false) {
  for (const auto& f : t) {
    const auto [head, body] = as_rule(f);
    if (!detail::is_atom_disjunction_or_bottom(head) || !detail::is_flp_body(body, !positive_only)) return false;
  }
  return true;
}

/// Keeps exactly the rules whose body X satisfies, unchanged.
inline Theory reduct_flp(const Theory& t, const Interpretation& x) {
  if (!is_flp_program(t)) throw NotFLP("not a program with FLP-aggregates");
  std::vector<Formula> kept;
  for (const auto& f : t)
    if (sat(x, as_rule(f).body)) kept.push_back(f);
  return Theory(std::move(kept));
}

}  // namespace stablekernel
