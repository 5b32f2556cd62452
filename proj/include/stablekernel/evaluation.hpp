#pragma once

#include <span>
#include <vector>

#include "stablekernel/error.hpp"
#include "stablekernel/formula.hpp"
#include "stablekernel/theory.hpp"

namespace stablekernel {

/// Applies an aggregate function to a multiset of weights.
///
/// Empty-multiset conventions: sum and count give 0, times gives 1, min gives
/// +∞ and max gives −∞. Only the codomain (reals plus the two infinities) is
/// fixed by the theory; these values keep every aggregate total.
inline ExtendedValue eval_op(AggOp op, std::span<const Weight> ws) {
  switch (op) {
    case AggOp::Sum: {
      Weight total;
      for (const auto& w : ws) total += w;
      return total;
    }
    case AggOp::Count: return Weight(static_cast<std::int64_t>(ws.size()));
    case AggOp::Product: {
      Weight total(1);
      for (const auto& w : ws) total *= w;
      return total;
    }
    case AggOp::Min: {
      if (ws.empty()) return ExtendedValue::plus_infinity();
      return *std::min_element(ws.begin(), ws.end());
    }
    case AggOp::Max: {
      if (ws.empty()) return ExtendedValue::minus_infinity();
      return *std::max_element(ws.begin(), ws.end());
    }
  }
  return Weight();
}

/// value ≺ bound
inline bool holds(Rel rel, const ExtendedValue& value, const Weight& bound) {
  const ExtendedValue b(bound);
  switch (rel) {
    case Rel::Le: return value <= b;
    case Rel::Lt: return value < b;
    case Rel::Ge: return value >= b;
    case Rel::Gt: return value > b;
    case Rel::Eq: return value == b;
    case Rel::Ne: return value != b;
  }
  return false;
}

/// Whether op applied to the weights of the elements selected by `mask`
/// (bit i <-> element i) stands in the aggregate's relation to its bound.
inline bool aggregate_holds_for(const Aggregate& a, std::uint64_t mask) {
  std::vector<Weight> ws;
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((mask >> i) & 1U) ws.push_back(a.elements()[i].weight);
  return holds(a.rel(), eval_op(a.op(), ws), a.bound());
}

inline bool sat(const Interpretation& x, const Formula& f);

/// X ⊨ op⟨{F1=w1,...}⟩ ≺ N: op of the weights whose formulas X satisfies.
inline bool agg_sat(const Interpretation& x, const Aggregate& a) {
  std::vector<Weight> ws;
  for (const auto& e : a.elements())
    if (sat(x, e.formula)) ws.push_back(e.weight);
  return holds(a.rel(), eval_op(a.op(), ws), a.bound());
}

/// Classical satisfaction.
inline bool sat(const Interpretation& x, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bottom: return false;
    case FormulaKind::Atom: return x.contains(f.atom());
    case FormulaKind::And: return sat(x, f.lhs()) && sat(x, f.rhs());
    case FormulaKind::Or: return sat(x, f.lhs()) || sat(x, f.rhs());
    case FormulaKind::Implies: return !sat(x, f.lhs()) || sat(x, f.rhs());
    case FormulaKind::Aggregate: return agg_sat(x, f.aggregate());
  }
  return false;
}

inline bool sat(const Interpretation& x, std::span<const Formula> fs) {
  for (const auto& f : fs)
    if (!sat(x, f)) return false;
  return true;
}

inline bool sat(const Interpretation& x, const Theory& t) { return sat(x, t.formulas()); }

namespace detail {

inline bool ht_sat_connectives(const HTInterpretation& i, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bottom: return false;
    case FormulaKind::Atom: return i.here().contains(f.atom());
    case FormulaKind::And: return ht_sat_connectives(i, f.lhs()) && ht_sat_connectives(i, f.rhs());
    case FormulaKind::Or: return ht_sat_connectives(i, f.lhs()) || ht_sat_connectives(i, f.rhs());
    case FormulaKind::Implies:
      return (!ht_sat_connectives(i, f.lhs()) || ht_sat_connectives(i, f.rhs())) && sat(i.there(), f);
    case FormulaKind::Aggregate: throw AggregatePresent();
  }
  return false;
}

}  // namespace detail

/// Satisfaction in the logic of here-and-there. Aggregates must be compiled
/// away first.
inline bool ht_sat(const HTInterpretation& i, const Formula& f) {
  if (contains_aggregate(f)) throw AggregatePresent();
  return detail::ht_sat_connectives(i, f);
}

inline bool ht_sat(const HTInterpretation& i, std::span<const Formula> fs) {
  for (const auto& f : fs)
    if (contains_aggregate(f)) throw AggregatePresent();
  for (const auto& f : fs)
    if (!detail::ht_sat_connectives(i, f)) return false;
  return true;
}

inline bool ht_sat(const HTInterpretation& i, const Theory& t) { return ht_sat(i, t.formulas()); }

}  // namespace stablekernel
