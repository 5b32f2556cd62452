#pragma once

#include <algorithm>
#include <vector>

#include "stablekernel/formula.hpp"
#include "stablekernel/theory.hpp"

namespace stablekernel {

namespace detail {

inline void flatten(const Formula& f, FormulaKind kind, std::vector<Formula>& out) {
  if (f.kind() == kind) {
    flatten(f.lhs(), kind, out);
    flatten(f.rhs(), kind, out);
  } else {
    out.push_back(f);
  }
}

inline std::vector<Formula> operands(const Formula& f, FormulaKind kind) {
  std::vector<Formula> out;
  flatten(f, kind, out);
  return out;
}

inline bool contains_formula(const std::vector<Formula>& fs, const Formula& f) {
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

inline bool includes_all(const std::vector<Formula>& big, const std::vector<Formula>& small) {
  return std::all_of(small.begin(), small.end(), [&](const Formula& f) { return contains_formula(big, f); });
}

// Shared by ∧ and ∨: `unit` is the neutral element, `zero` the absorbing one.
// An operand is dropped when another operand's dual operands are a subset of
// its own: F ∧ (F ∨ G) = F and F ∨ (F ∧ G) = F.
inline Formula rebuild(std::vector<Formula> items, FormulaKind kind) {
  const bool is_and = kind == FormulaKind::And;
  const FormulaKind dual = is_and ? FormulaKind::Or : FormulaKind::And;
  std::vector<Formula> kept;
  for (auto& f : items) {
    if (is_and ? f.is_top() : f.is_bottom()) continue;
    if (is_and ? f.is_bottom() : f.is_top()) return f;
    if (!contains_formula(kept, f)) kept.push_back(std::move(f));
  }
  std::vector<std::vector<Formula>> parts;
  parts.reserve(kept.size());
  for (const auto& f : kept) parts.push_back(operands(f, dual));
  std::vector<Formula> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < kept.size() && !absorbed; ++j) {
      if (i == j || !includes_all(parts[i], parts[j])) continue;
      // Equal operand sets: keep the earlier one.
      absorbed = !includes_all(parts[j], parts[i]) || j < i;
    }
    if (!absorbed) out.push_back(kept[i]);
  }
  return is_and ? conj_all(out) : disj_all(out);
}

}  // namespace detail

/// Rewrites `f` into a strongly equivalent formula using identities valid in
/// here-and-there: unit and zero laws for ⊤ and ⊥, idempotence, absorption,
/// ⊥ → F = ⊤, F → ⊤ = ⊤, ⊤ → F = F and F → F = ⊤.
inline Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom: return f;
    case FormulaKind::Aggregate: {
      const Aggregate& a = f.aggregate();
      std::vector<Formula> fs;
      fs.reserve(a.size());
      for (const auto& e : a.elements()) fs.push_back(simplify(e.formula));
      return Formula::aggregate(a.with_formulas(std::move(fs)));
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> items;
      for (const auto& g : detail::operands(f, f.kind())) detail::flatten(simplify(g), f.kind(), items);
      return detail::rebuild(std::move(items), f.kind());
    }
    case FormulaKind::Implies: {
      const Formula l = simplify(f.lhs());
      const Formula r = simplify(f.rhs());
      if (l.is_bottom() || r.is_top() || l == r) return top();
      if (l.is_top()) return r;
      return Formula::implies(l, r);
    }
  }
  return f;
}

inline Theory simplify(const Theory& t) {
  std::vector<Formula> out;
  for (const auto& f : t) {
    const Formula g = simplify(f);
    if (!g.is_top()) out.push_back(g);
  }
  return Theory(std::move(out));
}

}  // namespace stablekernel
