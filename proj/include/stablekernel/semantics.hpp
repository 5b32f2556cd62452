#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stablekernel/aggregate.hpp"
#include "stablekernel/analysis.hpp"
#include "stablekernel/error.hpp"
#include "stablekernel/evaluation.hpp"
#include "stablekernel/reduct.hpp"
#include "stablekernel/theory.hpp"
#include "stablekernel/translations.hpp"

namespace stablekernel {

enum class Semantics { Ferraris, Lif99, FLP, SmodelsWC, PDB };

inline const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::Ferraris: return "ferraris";
    case Semantics::Lif99: return "lif99";
    case Semantics::FLP: return "flp";
    case Semantics::SmodelsWC: return "smodels";
    case Semantics::PDB: return "pdb";
  }
  return "?";
}

inline std::optional<Semantics> parse_semantics(std::string_view name) {
  for (auto s : {Semantics::Ferraris, Semantics::Lif99, Semantics::FLP, Semantics::SmodelsWC, Semantics::PDB})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

/// Whether `t` has the syntactic shape semantics `s` is defined on.
inline bool applicable(const Theory& t, Semantics s) {
  switch (s) {
    case Semantics::Ferraris: return true;
    case Semantics::Lif99: return is_nested_program(t);
    case Semantics::FLP: return is_flp_program(t);
    case Semantics::SmodelsWC: return is_wc_program(t);
    case Semantics::PDB: return is_pdb_program(t);
  }
  return false;
}

struct SolveOptions {
  Budget budget;
  /// Ferraris only: enumerate candidates among the head atoms.
  bool prune_head_atoms = true;
};

namespace detail {

inline void check_vocabulary_budget(const AtomSet& vocab, const Budget& budget) {
  const std::size_t limit = std::min<std::size_t>(budget.max_atoms, 62);
  if (vocab.size() > limit) throw BudgetExceeded("atoms", vocab.size(), limit);
}

// A semantics after translation: a reduct function on the theory it reduces.
struct Reducer {
  Theory theory;
  std::function<std::vector<Formula>(const Interpretation&)> reduct;
};

inline Reducer make_reducer(const Theory& t, Semantics s, const Budget& budget) {
  switch (s) {
    case Semantics::Ferraris:
      return {t, [t](const Interpretation& x) { return reduct_ferraris(t.formulas(), x); }};
    case Semantics::Lif99:
      if (!is_nested_program(t)) throw NotNested("not a program with nested expressions");
      return {t, [t](const Interpretation& x) { return reduct_lif99_rules(t.formulas(), x); }};
    case Semantics::FLP: {
      if (!is_flp_program(t)) throw NotFLP("not a program with FLP-aggregates");
      return {t, [t](const Interpretation& x) {
                const Theory r = reduct_flp(t, x);
                return std::vector<Formula>(r.begin(), r.end());
              }};
    }
    case Semantics::SmodelsWC: return make_reducer(smodels_translate(t, budget), Semantics::Lif99, budget);
    case Semantics::PDB: return make_reducer(pdb_translate(t, budget), Semantics::Lif99, budget);
  }
  throw Error("unknown semantics");
}

inline std::optional<Interpretation> one_atom_witness(const Interpretation& x, std::span<const Formula> reduct) {
  std::optional<Interpretation> best;
  for (const Atom& a : x) {
    Interpretation y = x.without(a);
    if (sat(y, reduct) && (!best || y < *best)) best = std::move(y);
  }
  return best;
}

inline std::optional<Interpretation> any_witness(const Interpretation& x, std::span<const Formula> reduct) {
  const std::uint64_t full = (std::uint64_t{1} << x.size()) - 1;
  std::optional<Interpretation> best;
  for (std::uint64_t m = 0; m < full; ++m) {
    Interpretation y = x.subset(m);
    if (sat(y, reduct) && (!best || y < *best)) best = std::move(y);
  }
  return best;
}

// A proper subset of X satisfying the reduct, if any. Removals of a single
// atom are tried first; the full scan decides when none of them works.
inline std::optional<Interpretation> smaller_model(const Interpretation& x, std::span<const Formula> reduct) {
  if (auto w = one_atom_witness(x, reduct)) return w;
  return any_witness(x, reduct);
}

}  // namespace detail

/// Why X is or is not stable.
struct StabilityReport {
  enum class Verdict { Stable, NotAModel, NotMinimal };

  Verdict verdict;
  /// For NotMinimal: a proper subset of X satisfying the reduct. A subset
  /// with one atom removed is preferred; ties go to the canonically least.
  std::optional<Interpretation> witness;

  bool stable() const noexcept { return verdict == Verdict::Stable; }
};

inline std::string to_string(const StabilityReport& r) {
  switch (r.verdict) {
    case StabilityReport::Verdict::Stable: return "stable";
    case StabilityReport::Verdict::NotAModel: return "not-stable (not-a-model)";
    case StabilityReport::Verdict::NotMinimal: return "not-stable (not-minimal: " + print_interpretation(*r.witness) + ")";
  }
  return "?";
}

inline StabilityReport explain_stability(const Theory& t, const Interpretation& x, Semantics s,
                                         const SolveOptions& options = {}) {
  detail::check_vocabulary_budget(x | atoms_of(t), options.budget);
  const auto reducer = detail::make_reducer(t, s, options.budget);
  const auto reduct = reducer.reduct(x);
  if (!sat(x, std::span<const Formula>(reduct))) return {StabilityReport::Verdict::NotAModel, std::nullopt};
  if (auto w = detail::smaller_model(x, reduct)) return {StabilityReport::Verdict::NotMinimal, std::move(w)};
  return {StabilityReport::Verdict::Stable, std::nullopt};
}

/// X is a minimal set satisfying the reduct of `t` relative to X.
inline bool is_stable(const Theory& t, const Interpretation& x, Semantics s, const SolveOptions& options = {}) {
  return explain_stability(t, x, s, options).stable();
}

/// Every stable model of `t` under `s`, in canonical order. Candidates are
/// the subsets of the vocabulary of the (translated) theory, or of its head
/// atoms for Ferraris.
inline std::vector<Interpretation> stable_models(const Theory& t, Semantics s, const SolveOptions& options = {}) {
  detail::check_vocabulary_budget(atoms_of(t), options.budget);
  const auto reducer = detail::make_reducer(t, s, options.budget);
  const AtomSet vocab = s == Semantics::Ferraris && options.prune_head_atoms ? head_atoms(t, options.budget)
                                                                             : atoms_of(reducer.theory);
  detail::check_vocabulary_budget(vocab, options.budget);
  std::vector<Interpretation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vocab.size()); ++m) {
    Interpretation x = vocab.subset(m);
    const auto reduct = reducer.reduct(x);
    if (!sat(x, std::span<const Formula>(reduct))) continue;
    if (detail::smaller_model(x, reduct)) continue;
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Interpretation> stable_models(const Theory& t, const SolveOptions& options = {}) {
  return stable_models(t, Semantics::Ferraris, options);
}

/// X with (X,X) ⊨ t such that no (Z,X) with Z ⊂ X satisfies t. Aggregates
/// are compiled first.
inline std::vector<Interpretation> equilibrium_models(const Theory& t, const Budget& budget = {}) {
  const Theory g = compile_aggregates(t, budget);
  const AtomSet vocab = atoms_of(g);
  detail::check_vocabulary_budget(vocab, budget);
  std::vector<Interpretation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vocab.size()); ++m) {
    Interpretation x = vocab.subset(m);
    if (!ht_sat(HTInterpretation(x, x), g)) continue;
    bool minimal = true;
    const std::uint64_t full = (std::uint64_t{1} << x.size()) - 1;
    for (std::uint64_t k = 0; k < full && minimal; ++k) minimal = !ht_sat(HTInterpretation(x.subset(k), x), g);
    if (minimal) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct StrongEqReport {
  bool equivalent;
  /// Least HT-interpretation satisfying exactly one of the theories.
  std::optional<HTInterpretation> witness;
};

enum class StrongEqMethod { HT, ReductEq };

/// Strong equivalence, decided either by comparing HT-models over the joint
/// vocabulary or by classical equivalence of Ferraris reducts for every X.
inline StrongEqReport strong_equiv(const Theory& t1, const Theory& t2, StrongEqMethod method = StrongEqMethod::HT,
                                   const Budget& budget = {}) {
  const AtomSet vocab = atoms_of(t1) | atoms_of(t2);
  detail::check_vocabulary_budget(vocab, budget);
  std::optional<HTInterpretation> best;
  if (method == StrongEqMethod::HT) {
    const Theory g1 = compile_aggregates(t1, budget);
    const Theory g2 = compile_aggregates(t2, budget);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << vocab.size()); ++m) {
      const Interpretation there = vocab.subset(m);
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << there.size()); ++k) {
        HTInterpretation i(there.subset(k), there);
        if (ht_sat(i, g1) != ht_sat(i, g2) && (!best || i < *best)) best = std::move(i);
      }
    }
  } else {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << vocab.size()); ++m) {
      const Interpretation x = vocab.subset(m);
      const auto r1 = reduct_ferraris(t1.formulas(), x);
      const auto r2 = reduct_ferraris(t2.formulas(), x);
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << x.size()); ++k) {
        const Interpretation y = x.subset(k);
        if (sat(y, std::span<const Formula>(r1)) != sat(y, std::span<const Formula>(r2))) {
          HTInterpretation i(y, x);
          if (!best || i < *best) best = std::move(i);
        }
      }
    }
  }
  return {!best.has_value(), std::move(best)};
}

/// Classical equivalence over the joint vocabulary.
inline bool classically_equivalent(std::span<const Formula> a, std::span<const Formula> b, const Budget& budget = {}) {
  const AtomSet vocab = atoms_of(a) | atoms_of(b);
  detail::check_vocabulary_budget(vocab, budget);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vocab.size()); ++m) {
    const Interpretation x = vocab.subset(m);
    if (sat(x, a) != sat(x, b)) return false;
  }
  return true;
}

inline bool classically_equivalent(const Theory& a, const Theory& b, const Budget& budget = {}) {
  return classically_equivalent(a.formulas(), b.formulas(), budget);
}

}  // namespace stablekernel
