#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stablekernel/error.hpp"
#include "stablekernel/evaluation.hpp"
#include "stablekernel/formula.hpp"
#include "stablekernel/theory.hpp"

namespace stablekernel {

/// Limits on the exhaustive enumerations performed by the library.
struct Budget {
  /// Largest vocabulary enumerated by the model-search routines.
  std::size_t max_atoms = 20;
  /// Largest aggregate whose 2^n index subsets may be scanned.
  std::size_t max_aggregate_elements = 20;
};

enum class Monotonicity { Monotone, Antimonotone, Both, Neither };

inline const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Monotone: return "monotone";
    case Monotonicity::Antimonotone: return "antimonotone";
    case Monotonicity::Both: return "both";
    case Monotonicity::Neither: return "neither";
  }
  return "?";
}

inline void check_aggregate_budget(std::size_t n, const Budget& budget) {
  const std::size_t limit = std::min<std::size_t>(budget.max_aggregate_elements, 62);
  if (n > limit) throw BudgetExceeded("aggregate elements", n, limit);
}

/// All index subsets of {0..n-1} as bitmasks (bit i <-> element i), ordered
/// by binary counting with element 0 as the most significant digit:
/// ∅, {n-1}, ..., {0, ..., n-1}.
inline std::vector<std::uint64_t> canonical_subsets(std::size_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((k >> (n - 1 - i)) & 1U) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
  }
  return out;
}

/// Monotone iff adding elements never falsifies op(W) ≺ N; antimonotone iff
/// removing them never does. Checked over every index subset.
inline Monotonicity classify_monotonicity(const Aggregate& a, const Budget& budget = {}) {
  const std::size_t n = a.size();
  check_aggregate_budget(n, budget);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> value(count);
  for (std::uint64_t m = 0; m < count; ++m) value[m] = aggregate_holds_for(a, m) ? 1 : 0;
  bool monotone = true;
  bool antimonotone = true;
  for (std::uint64_t m = 0; m < count; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (m & bit) continue;
      if (value[m] && !value[m | bit]) monotone = false;
      if (value[m | bit] && !value[m]) antimonotone = false;
    }
  }
  if (monotone && antimonotone) return Monotonicity::Both;
  if (monotone) return Monotonicity::Monotone;
  if (antimonotone) return Monotonicity::Antimonotone;
  return Monotonicity::Neither;
}

inline Formula compile_aggregates(const Formula& f, const Budget& budget = {});

namespace detail {

inline std::vector<Formula> pick(const std::vector<Formula>& fs, std::uint64_t mask, bool inside) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if ((((mask >> i) & 1U) != 0) == inside) out.push_back(fs[i]);
  return out;
}

inline std::vector<Formula> compiled_elements(const Aggregate& a, const Budget& budget) {
  std::vector<Formula> fs;
  fs.reserve(a.size());
  for (const auto& e : a.elements()) fs.push_back(compile_aggregates(e.formula, budget));
  return fs;
}

}  // namespace detail

/// The propositional reading of an aggregate: the conjunction, over index
/// sets I with op(W_I) ⊀ N, of (∧_{i∈I} Fi) → (∨_{i∉I} Fi). Nested
/// aggregates are compiled innermost-first.
inline Formula compile_aggregate(const Aggregate& a, const Budget& budget = {}) {
  check_aggregate_budget(a.size(), budget);
  const auto fs = detail::compiled_elements(a, budget);
  std::vector<Formula> conjuncts;
  for (std::uint64_t mask : canonical_subsets(a.size())) {
    if (aggregate_holds_for(a, mask)) continue;
    conjuncts.push_back(Formula::implies(conj_all(detail::pick(fs, mask, true)), disj_all(detail::pick(fs, mask, false))));
  }
  return conj_all(conjuncts);
}

/// Antecedents dropped: the conjunction over failing I of ∨_{i∉I} Fi.
/// Strongly equivalent to compile_aggregate() for monotone aggregates.
inline Formula compile_monotone(const Aggregate& a, const Budget& budget = {}) {
  const auto m = classify_monotonicity(a, budget);
  if (m != Monotonicity::Monotone && m != Monotonicity::Both)
    throw NotMonotone(std::string("aggregate is ") + to_string(m) + ", not monotone");
  const auto fs = detail::compiled_elements(a, budget);
  std::vector<Formula> conjuncts;
  for (std::uint64_t mask : canonical_subsets(a.size()))
    if (!aggregate_holds_for(a, mask)) conjuncts.push_back(disj_all(detail::pick(fs, mask, false)));
  return conj_all(conjuncts);
}

/// Consequents replaced by ⊥: the conjunction over failing I of
/// ¬∧_{i∈I} Fi. Strongly equivalent to compile_aggregate() for antimonotone
/// aggregates.
inline Formula compile_antimonotone(const Aggregate& a, const Budget& budget = {}) {
  const auto m = classify_monotonicity(a, budget);
  if (m != Monotonicity::Antimonotone && m != Monotonicity::Both)
    throw NotAntimonotone(std::string("aggregate is ") + to_string(m) + ", not antimonotone");
  const auto fs = detail::compiled_elements(a, budget);
  std::vector<Formula> conjuncts;
  for (std::uint64_t mask : canonical_subsets(a.size()))
    if (!aggregate_holds_for(a, mask)) conjuncts.push_back(neg(conj_all(detail::pick(fs, mask, true))));
  return conj_all(conjuncts);
}

/// Replaces every aggregate in `f` by its compiled formula.
inline Formula compile_aggregates(const Formula& f, const Budget& budget) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom: return f;
    case FormulaKind::Aggregate: return compile_aggregate(f.aggregate(), budget);
    case FormulaKind::And: return Formula::conj(compile_aggregates(f.lhs(), budget), compile_aggregates(f.rhs(), budget));
    case FormulaKind::Or: return Formula::disj(compile_aggregates(f.lhs(), budget), compile_aggregates(f.rhs(), budget));
    case FormulaKind::Implies:
      return Formula::implies(compile_aggregates(f.lhs(), budget), compile_aggregates(f.rhs(), budget));
  }
  return f;
}

inline Theory compile_aggregates(const Theory& t, const Budget& budget = {}) {
  bool any = false;
  for (const auto& f : t) any = any || contains_aggregate(f);
  if (!any) return t;
  std::vector<Formula> out;
  out.reserve(t.size());
  for (const auto& f : t) out.push_back(compile_aggregates(f, budget));
  return Theory(std::move(out));
}

}  // namespace stablekernel
