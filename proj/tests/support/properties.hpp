#pragma once

// Randomized property checks shared by the GoogleTest property suite and the
// acceptance binary. Each check runs a fixed number of generated instances
// from a fixed seed and reports the first violation it finds.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "support/generators.hpp"

namespace props {

namespace sk = stablekernel;

struct Outcome {
  int cases = 0;
  int violations = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
  bool ok() const { return violations == 0; }
  std::string summary() const {
    std::string out = std::to_string(cases) + " cases, " + std::to_string(violations) + " violations";
    if (!first.empty()) out += "; first: " + first;
    return out;
  }
};

namespace detail {

inline std::string show(const sk::Theory& t) {
  std::string out = sk::print_theory(t);
  for (auto& c : out)
    if (c == '\n') c = ' ';
  return out;
}

inline std::string show(const std::vector<sk::Interpretation>& ms) {
  std::string out = "[";
  for (const auto& m : ms) out += sk::print_interpretation(m);
  return out + "]";
}

inline sk::Theory facts(const sk::Interpretation& x) {
  std::vector<sk::Formula> fs;
  for (const auto& a : x) fs.push_back(sk::Formula::atom(a));
  return sk::Theory(std::move(fs));
}

inline bool strongly_equivalent(const sk::Formula& a, const sk::Formula& b) {
  return sk::strong_equiv(sk::Theory{a}, sk::Theory{b}).equivalent;
}

inline std::vector<sk::Interpretation> stable_unpruned(const sk::Theory& t) {
  sk::SolveOptions o;
  o.prune_head_atoms = false;
  return sk::stable_models(t, sk::Semantics::Ferraris, o);
}

}  // namespace detail

/// (X,Y) ⊨ F in HT iff X ⊨ F^Y, for all X ⊆ Y.
inline Outcome ht_reduct_bridge(std::uint64_t seed, int n = 500) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 5));
    const auto f = gen::formula(rng, vocab, 5);
    const auto all = gen::atom_set(vocab);
    for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << all.size()); ++ym) {
      const auto y = all.subset(ym);
      const auto reduct = sk::reduct_ferraris(f, y);
      for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << y.size()); ++xm) {
        const auto x = y.subset(xm);
        if (sk::ht_sat(sk::HTInterpretation(x, y), f) != sk::sat(x, reduct))
          out.fail(sk::print_formula(f) + " at (" + sk::print_interpretation(x) + "," + sk::print_interpretation(y) + ")");
      }
    }
  }
  return out;
}

/// Equilibrium models coincide with stable models.
inline Outcome equilibrium_equals_stable(std::uint64_t seed, int n = 300) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto t = gen::theory(rng, gen::vocabulary(rng.uniform(1, 5)), 4, 3);
    const auto eq = sk::equilibrium_models(t);
    const auto st = sk::stable_models(t);
    if (eq != st) out.fail(detail::show(t) + " equilibrium " + detail::show(eq) + " stable " + detail::show(st));
  }
  return out;
}

/// For programs with nested expressions the two reducts give the same stable
/// models, and Y ⊨ Π^X iff X ⊨ Π and Y ⊨ Π^X(1999) for every Y ⊆ X.
inline Outcome nested_reducts_agree(std::uint64_t seed, int n = 300) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 4));
    const auto t = gen::nested_program(rng, vocab, 4);
    const auto fer = sk::stable_models(t, sk::Semantics::Ferraris);
    const auto lif = sk::stable_models(t, sk::Semantics::Lif99);
    if (fer != lif) out.fail(detail::show(t) + " ferraris " + detail::show(fer) + " lif99 " + detail::show(lif));
    const auto all = gen::atom_set(vocab);
    for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << all.size()); ++xm) {
      const auto x = all.subset(xm);
      const auto fr = sk::reduct_ferraris(t, x);
      const auto lr = sk::reduct_lif99(t, x);
      const bool x_model = sk::sat(x, t);
      for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << x.size()); ++ym) {
        const auto y = x.subset(ym);
        if (sk::sat(y, fr) != (x_model && sk::sat(y, lr)))
          out.fail(detail::show(t) + " X=" + sk::print_interpretation(x) + " Y=" + sk::print_interpretation(y));
      }
    }
  }
  return out;
}

/// A second theory related to `t1`: unrelated, simplified, extended or with
/// one formula replaced.
inline sk::Theory partner(gen::Rng& rng, const std::vector<sk::Atom>& vocab, const sk::Theory& t1) {
  switch (rng.uniform(0, 3)) {
    case 0: return gen::theory(rng, vocab, 3, 3);
    case 1: return sk::simplify(t1);
    case 2: return t1.with(gen::formula(rng, vocab, 2));
    default: {
      std::vector<sk::Formula> fs(t1.begin(), t1.end());
      fs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(fs.size()) - 1))] = gen::formula(rng, vocab, 2);
      return sk::Theory(std::move(fs));
    }
  }
}

/// The HT method and the reduct method give the same verdict and witness.
inline Outcome strong_eq_methods_agree(std::uint64_t seed, int n = 300) {
  gen::Rng rng(seed);
  Outcome out;
  int equivalent = 0;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 4));
    const auto t1 = gen::theory(rng, vocab, 3, 3);
    const auto t2 = partner(rng, vocab, t1);
    const auto ht = sk::strong_equiv(t1, t2, sk::StrongEqMethod::HT);
    const auto re = sk::strong_equiv(t1, t2, sk::StrongEqMethod::ReductEq);
    equivalent += ht.equivalent;
    if (ht.equivalent != re.equivalent || ht.witness != re.witness)
      out.fail(detail::show(t1) + " vs " + detail::show(t2));
  }
  if (equivalent == 0 || equivalent == n) out.fail("generator produced only one verdict");
  return out;
}

/// Stable models are models, and X ⊨ Γ^X iff X ⊨ Γ.
inline Outcome models_and_reduct_fixpoint(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 6));
    const auto t = gen::theory(rng, vocab, 4, 3);
    for (const auto& x : sk::stable_models(t))
      if (!sk::sat(x, t)) out.fail(detail::show(t) + " stable non-model " + sk::print_interpretation(x));
    for (const auto& x : gen::subsets(gen::atom_set(vocab)))
      if (sk::sat(x, sk::reduct_ferraris(t, x)) != sk::sat(x, t))
        out.fail(detail::show(t) + " reduct fixpoint at " + sk::print_interpretation(x));
  }
  return out;
}

/// Every stable model consists of head atoms (enumeration not pruned).
inline Outcome stable_models_are_head_atoms(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto t = gen::theory(rng, gen::vocabulary(rng.uniform(1, 5)), 4, 3);
    const auto heads = sk::head_atoms(t);
    if (!heads.is_subset_of(sk::atoms_of(t))) out.fail(detail::show(t) + " head atoms outside vocabulary");
    const auto all = detail::stable_unpruned(t);
    for (const auto& x : all)
      if (!x.is_subset_of(heads)) out.fail(detail::show(t) + " stable " + sk::print_interpretation(x));
    if (all != sk::stable_models(t)) out.fail(detail::show(t) + " pruned enumeration differs");
  }
  return out;
}

/// Adding formulas without head atoms filters the stable models.
inline Outcome constraints_filter(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  while (out.cases < n) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 5));
    const auto t1 = gen::theory(rng, vocab, 3, 3);
    auto t2 = gen::theory(rng, vocab, 2, 3);
    if (!sk::head_atoms(t2).empty()) {
      std::vector<sk::Formula> negated;
      for (const auto& f : t2) negated.push_back(sk::neg(f));
      t2 = sk::Theory(std::move(negated));
    }
    if (!sk::head_atoms(t2).empty()) continue;
    ++out.cases;
    std::vector<sk::Interpretation> filtered;
    for (const auto& x : sk::stable_models(t1))
      if (sk::sat(x, t2)) filtered.push_back(x);
    if (sk::stable_models(t1 | t2) != filtered) out.fail(detail::show(t1) + " with " + detail::show(t2));
  }
  return out;
}

/// With a fresh atom defined by a formula not mentioning it, X ↦ X∖{q} is a
/// bijection between stable models.
inline Outcome explicit_definitions(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  const sk::Atom q("w");
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 4));
    const auto gamma = gen::theory(rng, vocab, 3, 3);
    const auto def = gen::formula(rng, vocab, 3);
    const auto extended = sk::add_explicit_defs(gamma, {{q, def}});
    std::set<sk::Interpretation> image;
    const auto models = sk::stable_models(extended);
    for (const auto& x : models) image.insert(x.without(q));
    const auto base = sk::stable_models(gamma);
    if (image.size() != models.size() || std::vector<sk::Interpretation>(image.begin(), image.end()) != base)
      out.fail(detail::show(gamma) + " def " + sk::print_formula(def));
  }
  return out;
}

/// Formula over `vocab` that may also contain `not q`.
inline sk::Formula with_negated(gen::Rng& rng, const std::vector<sk::Atom>& vocab, const sk::Atom& q, int depth) {
  if (depth <= 0 || rng.coin(0.25)) return rng.coin(0.25) ? sk::neg(sk::Formula::atom(q)) : gen::atom(rng, vocab);
  switch (rng.uniform(0, 3)) {
    case 0: return sk::Formula::conj(with_negated(rng, vocab, q, depth - 1), with_negated(rng, vocab, q, depth - 1));
    case 1: return sk::Formula::disj(with_negated(rng, vocab, q, depth - 1), with_negated(rng, vocab, q, depth - 1));
    case 2: return sk::neg(with_negated(rng, vocab, q, depth - 1));
    default:
      return sk::Formula::implies(with_negated(rng, vocab, q, depth - 1), with_negated(rng, vocab, q, depth - 1));
  }
}

/// Completion: when q occurs in Γ only negatively or under negation and
/// Def(q) has no such occurrences outside negation, Def(q) → q may become
/// Def(q) ↔ q. Instances violating the preconditions are regenerated.
inline Outcome completion(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  const sk::Atom q("w");
  int rejected = 0;
  while (out.cases < n) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 4));
    std::vector<sk::Formula> fs;
    for (int i = rng.uniform(1, 3); i > 0; --i) fs.push_back(with_negated(rng, vocab, q, 3));
    const sk::Theory gamma(std::move(fs));
    const auto def = with_negated(rng, vocab, q, 2);
    sk::Theory completed;
    try {
      completed = sk::complete(gamma, {{q, def}});
    } catch (const sk::PolarityViolation&) {
      ++rejected;
      continue;
    }
    ++out.cases;
    const auto implied = gamma.with(sk::Formula::implies(def, sk::Formula::atom(q)));
    if (sk::stable_models(implied) != sk::stable_models(completed))
      out.fail(detail::show(gamma) + " def " + sk::print_formula(def));
  }
  if (rejected > 50 * n) out.fail("precondition rarely satisfied");
  return out;
}

/// Splitting: for Γ1, Γ2 and S meeting the head-atom conditions, X is stable
/// for Γ1 ∪ Γ2 iff X∩S is stable for Γ1 and X is stable for (X∩S) ∪ Γ2.
inline Outcome splitting(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  const auto lower = gen::vocabulary(3);
  const auto all_atoms = gen::vocabulary(5);
  const std::vector<sk::Atom> upper(all_atoms.begin() + 3, all_atoms.end());
  const auto vocab = gen::atom_set(all_atoms);
  while (out.cases < n) {
    const auto g1 = gen::theory(rng, lower, 3, 3);
    std::vector<sk::Formula> rules;
    for (int i = rng.uniform(1, 3); i > 0; --i)
      rules.push_back(sk::Formula::implies(gen::formula(rng, all_atoms, 2), gen::formula(rng, upper, 1)));
    const sk::Theory g2(std::move(rules));
    const auto h1 = sk::head_atoms(g1);
    const auto h2 = sk::head_atoms(g2);
    if (!(sk::atoms_of(g1) & h2).empty()) continue;
    sk::Interpretation s = h1;
    for (const auto& a : vocab - h2)
      if (rng.coin()) s = s.with(a);
    if (!(s & h2).empty()) continue;
    ++out.cases;
    const auto whole = g1 | g2;
    for (const auto& x : gen::subsets(vocab)) {
      const auto xs = x & s;
      const bool lhs = sk::is_stable(whole, x, sk::Semantics::Ferraris);
      const bool rhs = sk::is_stable(g1, xs, sk::Semantics::Ferraris) &&
                       sk::is_stable(detail::facts(xs) | g2, x, sk::Semantics::Ferraris);
      if (lhs != rhs)
        out.fail(detail::show(g1) + " | " + detail::show(g2) + " S=" + sk::print_interpretation(s) +
                 " X=" + sk::print_interpretation(x));
    }
  }
  return out;
}

/// Compiled aggregates: classical equivalence with primitive satisfaction,
/// commutation with the reduct, a unique violated conjunct when false, and
/// the monotone and antimonotone shortcuts when applicable.
inline Outcome aggregate_compilation(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  std::set<std::pair<int, int>> seen;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 4));
    const auto a = gen::aggregate(rng, vocab, 4, rng.coin(0.7) ? 0 : 1);
    seen.emplace(static_cast<int>(a.op()), static_cast<int>(a.rel()));
    const sk::Formula af = sk::Formula::aggregate(a);
    const auto g = sk::compile_aggregate(a);
    const auto where = sk::print_formula(af);
    const auto conjuncts = sk::detail::operands(g, sk::FormulaKind::And);
    for (const auto& x : gen::subsets(gen::atom_set(vocab))) {
      if (sk::sat(x, g) != sk::agg_sat(x, a)) out.fail(where + " classical at " + sk::print_interpretation(x));
      const auto lhs = sk::reduct_ferraris(g, x);
      const auto rhs = sk::compile_aggregates(sk::reduct_ferraris(af, x));
      if (!sk::classically_equivalent(sk::Theory{lhs}, sk::Theory{rhs}))
        out.fail(where + " reduct at " + sk::print_interpretation(x));
      if (!sk::agg_sat(x, a)) {
        const auto violated = std::count_if(conjuncts.begin(), conjuncts.end(), [&](const auto& c) { return !sk::sat(x, c); });
        if (violated != 1) out.fail(where + " violated conjuncts at " + sk::print_interpretation(x));
      }
    }
    const auto m = sk::classify_monotonicity(a);
    if (m == sk::Monotonicity::Monotone || m == sk::Monotonicity::Both)
      if (!detail::strongly_equivalent(g, sk::compile_monotone(a))) out.fail(where + " monotone shortcut");
    if (m == sk::Monotonicity::Antimonotone || m == sk::Monotonicity::Both)
      if (!detail::strongly_equivalent(g, sk::compile_antimonotone(a))) out.fail(where + " antimonotone shortcut");
  }
  if (seen.size() != 30) out.fail("not every op/relation pair was generated");
  return out;
}

/// [C] and the compiled aggregate agree for nonnegative weights.
inline Outcome weight_constraints_nonnegative(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto c = gen::weight_constraint(rng, gen::vocabulary(rng.uniform(1, 4)), 4, 0, 3);
    const auto lhs = sk::wc_to_nested(c);
    const auto rhs = sk::compile_aggregate(sk::wc_to_aggregate(c));
    if (!detail::strongly_equivalent(lhs, rhs)) out.fail(sk::print_formula(sk::Formula::aggregate(sk::wc_to_aggregate(c))));
  }
  return out;
}

/// A_tr and the compiled aggregate agree for monotone or antimonotone
/// aggregates over atoms.
inline Outcome pdb_monotone(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  while (out.cases < n) {
    const auto a = gen::aggregate(rng, gen::vocabulary(rng.uniform(1, 4)), 4, 0);
    if (sk::classify_monotonicity(a) == sk::Monotonicity::Neither) continue;
    ++out.cases;
    if (!detail::strongly_equivalent(sk::pdb_translate(a), sk::compile_aggregate(a)))
      out.fail(sk::print_formula(sk::Formula::aggregate(a)));
  }
  return out;
}

/// Positive program with FLP-aggregates: heads are atom disjunctions or ⊥,
/// bodies conjoin atoms and aggregates over conjunctions of literals (of
/// atoms only when `negative_literals` is false).
inline sk::Theory positive_flp_program(gen::Rng& rng, const std::vector<sk::Atom>& vocab, bool negative_literals) {
  std::vector<sk::Formula> rules;
  for (int i = rng.uniform(1, 3); i > 0; --i) {
    std::vector<sk::Formula> heads;
    for (int h = rng.uniform(0, 2); h > 0; --h) heads.push_back(gen::atom(rng, vocab));
    std::vector<sk::Formula> body;
    for (int b = rng.uniform(0, 2); b > 0; --b) {
      if (rng.coin(0.4)) {
        body.push_back(gen::atom(rng, vocab));
        continue;
      }
      std::vector<sk::AggregateElement> elems;
      for (int e = rng.uniform(0, 3); e > 0; --e) {
        std::vector<sk::Formula> lits;
        for (int l = rng.uniform(1, 2); l > 0; --l) lits.push_back(gen::literal(rng, vocab, negative_literals));
        elems.push_back({sk::conj_all(lits), gen::weight(rng)});
      }
      body.push_back(sk::Formula::aggregate(sk::Aggregate(gen::op(rng), std::move(elems), gen::rel(rng), gen::weight(rng))));
    }
    const auto head = heads.empty() ? sk::Formula::bottom() : sk::disj_all(heads);
    rules.push_back(sk::Formula::implies(body.empty() ? sk::top() : sk::conj_all(body), head));
  }
  return sk::Theory(std::move(rules));
}

/// FLP and Ferraris stable models agree on positive FLP programs.
inline Outcome flp_positive_agrees(std::uint64_t seed, int n = 200, bool negative_literals = true) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto t = positive_flp_program(rng, gen::vocabulary(rng.uniform(1, 4)), negative_literals);
    if (!sk::is_flp_program(t, true)) {
      out.fail(detail::show(t) + " not recognised as a positive FLP program");
      continue;
    }
    const auto flp = sk::stable_models(t, sk::Semantics::FLP);
    const auto fer = sk::stable_models(t, sk::Semantics::Ferraris);
    if (flp != fer) out.fail(detail::show(t) + " flp " + detail::show(flp) + " ferraris " + detail::show(fer));
  }
  return out;
}

/// A disjunctive rule is strongly equivalent to its n implications.
inline Outcome disjunctive_rules(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 5));
    std::vector<sk::Formula> heads, body;
    for (int h = rng.uniform(1, 3); h > 0; --h) heads.push_back(gen::atom(rng, vocab));
    for (int b = rng.uniform(0, 3); b > 0; --b) body.push_back(gen::literal(rng, vocab));
    const auto rule = sk::Formula::implies(body.empty() ? sk::top() : sk::conj_all(body), sk::disj_all(heads));
    if (!sk::strong_equiv(sk::Theory{rule}, sk::disjunctive_to_implications(rule)).equivalent)
      out.fail(sk::print_statement(rule));
  }
  return out;
}

/// Simplification preserves strong equivalence.
inline Outcome simplify_preserves(std::uint64_t seed, int n = 200) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto t = gen::theory(rng, gen::vocabulary(rng.uniform(1, 4)), 3, 4);
    if (!sk::strong_equiv(t, sk::simplify(t)).equivalent) out.fail(detail::show(t));
  }
  return out;
}

/// parse(print(t)) == t, and printing is a fixpoint.
inline Outcome parse_print_round_trip(std::uint64_t seed, int n = 1000) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 6));
    std::vector<sk::Formula> fs;
    for (int i = rng.uniform(0, 4); i > 0; --i) fs.push_back(gen::formula_with_aggregates(rng, vocab, 4));
    const sk::Theory t(std::move(fs));
    const auto printed = sk::print_theory(t);
    try {
      const auto back = sk::parse_theory(printed);
      if (!(back == t) || sk::print_theory(back) != printed) out.fail(printed);
    } catch (const sk::Error& e) {
      out.fail(printed + " (" + e.what() + ")");
    }
  }
  return out;
}

/// Adding a formula never moves a theory to a strictly smaller class.
inline Outcome classify_monotone(std::uint64_t seed, int n = 300) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto vocab = gen::vocabulary(rng.uniform(1, 4));
    const auto t = rng.coin() ? gen::nested_program(rng, vocab, 3) : gen::theory(rng, vocab, 3, 2);
    const auto f = rng.coin() ? *gen::nested_program(rng, vocab, 1).begin() : gen::formula(rng, vocab, 2);
    const auto before = sk::classify(t);
    const auto after = sk::classify(t.with(f));
    if (after != before && sk::class_included(after, before))
      out.fail(detail::show(t) + " plus " + sk::print_statement(f));
  }
  return out;
}

/// Auction encoding stable models correspond one to one with the oracle.
inline Outcome auction_bijection(std::uint64_t seed, int n = 100) {
  gen::Rng rng(seed);
  Outcome out;
  for (int k = 0; k < n; ++k, ++out.cases) {
    const auto inst = gen::auction(rng, 4, 4);
    std::vector<sk::BidSet> encoded;
    for (const auto& m : sk::stable_models(sk::auction_encode(inst))) encoded.push_back(sk::accepted_bids(inst, m));
    std::sort(encoded.begin(), encoded.end());
    const bool injective = std::adjacent_find(encoded.begin(), encoded.end()) == encoded.end();
    if (!injective || encoded != sk::auction_oracle(inst)) out.fail("instance " + std::to_string(k));
  }
  return out;
}

}  // namespace props
