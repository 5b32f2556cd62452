#pragma once

#include <span>
#include <string>
#include <vector>

#include "stablekernel/formula.hpp"

namespace stablekernel {

inline const char* to_string(AggOp op) {
  switch (op) {
    case AggOp::Sum: return "sum";
    case AggOp::Count: return "count";
    case AggOp::Min: return "min";
    case AggOp::Max: return "max";
    case AggOp::Product: return "times";
  }
  return "?";
}

inline const char* to_string(Rel rel) {
  switch (rel) {
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
  }
  return "?";
}

namespace detail {

// Binding strength, loosest first. `<->` is accepted by the parser but the
// printer never produces it.
enum Level : int { kIff = 0, kImplies = 1, kOr = 2, kAnd = 3, kNot = 4, kPrimary = 5 };

inline void print_formula(const Formula& f, int context, std::string& out);

inline void print_aggregate(const Aggregate& a, std::string& out) {
  out += to_string(a.op());
  out += '{';
  bool first = true;
  for (const auto& e : a.elements()) {
    out += first ? "" : "; ";
    first = false;
    print_formula(e.formula, kIff, out);
    out += " = ";
    out += e.weight.to_string();
  }
  out += "} ";
  out += to_string(a.rel());
  out += ' ';
  out += a.bound().to_string();
}

inline void print_formula(const Formula& f, int context, std::string& out) {
  int level = kPrimary;
  std::string text;
  switch (f.kind()) {
    case FormulaKind::Bottom: text = "bot"; break;
    case FormulaKind::Atom: text = f.atom().name(); break;
    case FormulaKind::Aggregate: print_aggregate(f.aggregate(), text); break;
    case FormulaKind::And:
      level = kAnd;
      print_formula(f.lhs(), kAnd, text);
      text += " & ";
      print_formula(f.rhs(), kNot, text);
      break;
    case FormulaKind::Or:
      level = kOr;
      print_formula(f.lhs(), kOr, text);
      text += " | ";
      print_formula(f.rhs(), kAnd, text);
      break;
    case FormulaKind::Implies:
      if (f.is_top()) {
        text = "top";
      } else if (f.is_negation()) {
        level = kNot;
        text = "not ";
        print_formula(f.lhs(), kNot, text);
      } else {
        level = kImplies;
        print_formula(f.lhs(), kOr, text);
        text += " -> ";
        print_formula(f.rhs(), kImplies, text);
      }
      break;
  }
  if (level < context) {
    out += '(';
    out += text;
    out += ')';
  } else {
    out += text;
  }
}

inline bool is_atom_disjunction(const Formula& f) {
  if (f.is_atom()) return true;
  return f.kind() == FormulaKind::Or && is_atom_disjunction(f.lhs()) && is_atom_disjunction(f.rhs());
}

}  // namespace detail

/// Formula text with minimal parentheses.
inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_formula(f, detail::kIff, out);
  return out;
}

/// One statement, including the terminating `.`. A top-level implication
/// whose consequent is an atom, ⊥ or a disjunction of atoms is written as a
/// rule `H :- B.`.
inline std::string print_statement(const Formula& f) {
  std::string out;
  if (f.kind() == FormulaKind::Implies && !f.is_top() &&
      (f.rhs().is_bottom() || detail::is_atom_disjunction(f.rhs()))) {
    detail::print_formula(f.rhs(), detail::kIff, out);
    out += " :- ";
    detail::print_formula(f.lhs(), detail::kIff, out);
  } else {
    detail::print_formula(f, detail::kIff, out);
  }
  out += '.';
  return out;
}

/// Statements in the given order, one per line.
inline std::string print_statements(std::span<const Formula> formulas) {
  std::string out;
  for (const Formula& f : formulas) {
    out += print_statement(f);
    out += '\n';
  }
  return out;
}

/// `{p,q}`
inline std::string print_interpretation(const Interpretation& x) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : x) {
    if (!first) out += ',';
    first = false;
    out += a.name();
  }
  out += '}';
  return out;
}

/// One model per line.
inline std::string print_models(std::span<const Interpretation> models) {
  std::string out;
  for (const auto& m : models) {
    out += print_interpretation(m);
    out += '\n';
  }
  return out;
}

}  // namespace stablekernel
