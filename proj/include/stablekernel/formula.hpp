#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stablekernel/rational.hpp"

namespace stablekernel {

inline constexpr std::array<std::string_view, 8> kKeywords = {"not", "bot", "top",  "sum",
                                                              "count", "min", "max", "times"};

/// `[a-z][A-Za-z0-9_]*`, excluding the keywords of the concrete syntax.
inline bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return std::find(kKeywords.begin(), kKeywords.end(), name) == kKeywords.end();
}

/// An interned propositional atom. Equal names yield the same atom; atoms
/// order lexicographically by name.
class Atom {
 public:
  explicit Atom(std::string_view name) : entry_(intern(name)) {}

  const std::string& name() const noexcept { return entry_->name; }
  /// Dense process-wide index, used for bitset membership.
  std::uint32_t index() const noexcept { return entry_->index; }

  friend bool operator==(const Atom& a, const Atom& b) noexcept { return a.entry_ == b.entry_; }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
    if (a.entry_ == b.entry_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  struct Entry {
    std::string name;
    std::uint32_t index;
  };

  static const Entry* intern(std::string_view name) {
    if (!is_valid_atom_name(name)) throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
    static std::mutex mutex;
    static std::deque<Entry> entries;
    static std::unordered_map<std::string, const Entry*> by_name;
    std::lock_guard lock(mutex);
    if (auto it = by_name.find(std::string(name)); it != by_name.end()) return it->second;
    entries.push_back(Entry{std::string(name), static_cast<std::uint32_t>(entries.size())});
    const Entry* e = &entries.back();
    by_name.emplace(e->name, e);
    return e;
  }

  const Entry* entry_;
};

/// Finite set of atoms, kept sorted by name. Doubles as a classical
/// interpretation (the atoms it contains are true).
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms) : AtomSet(std::vector<Atom>(atoms)) {}
  explicit AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    for (const Atom& a : atoms_) {
      const std::size_t word = a.index() / 64;
      if (word >= bits_.size()) bits_.resize(word + 1, 0);
      bits_[word] |= std::uint64_t{1} << (a.index() % 64);
    }
  }

  bool contains(const Atom& a) const noexcept {
    const std::size_t word = a.index() / 64;
    return word < bits_.size() && ((bits_[word] >> (a.index() % 64)) & 1U) != 0;
  }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  auto begin() const noexcept { return atoms_.begin(); }
  auto end() const noexcept { return atoms_.end(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  bool is_subset_of(const AtomSet& other) const noexcept {
    return std::all_of(atoms_.begin(), atoms_.end(), [&](const Atom& a) { return other.contains(a); });
  }

  AtomSet with(const Atom& a) const {
    auto v = atoms_;
    v.push_back(a);
    return AtomSet(std::move(v));
  }
  AtomSet without(const Atom& a) const {
    std::vector<Atom> v;
    for (const Atom& b : atoms_)
      if (!(b == a)) v.push_back(b);
    return AtomSet(std::move(v));
  }

  friend AtomSet operator|(const AtomSet& a, const AtomSet& b) {
    auto v = a.atoms_;
    v.insert(v.end(), b.atoms_.begin(), b.atoms_.end());
    return AtomSet(std::move(v));
  }
  friend AtomSet operator&(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> v;
    for (const Atom& x : a.atoms_)
      if (b.contains(x)) v.push_back(x);
    return AtomSet(std::move(v));
  }
  friend AtomSet operator-(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> v;
    for (const Atom& x : a.atoms_)
      if (!b.contains(x)) v.push_back(x);
    return AtomSet(std::move(v));
  }

  friend bool operator==(const AtomSet& a, const AtomSet& b) noexcept { return a.atoms_ == b.atoms_; }
  /// Canonical order: lexicographic on the sorted name lists, so
  /// {} < {p} < {p,q} < {q}.
  friend std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b) noexcept {
    return std::lexicographical_compare_three_way(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                                                  b.atoms_.end());
  }

  /// The subset selected by the low bits of `mask` (bit i <-> i-th atom).
  AtomSet subset(std::uint64_t mask) const {
    std::vector<Atom> v;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if ((mask >> i) & 1U) v.push_back(atoms_[i]);
    return AtomSet(std::move(v));
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<std::uint64_t> bits_;
};

using Interpretation = AtomSet;

class Aggregate;

enum class FormulaKind { Bottom, Atom, And, Or, Implies, Aggregate };

/// Immutable propositional formula, possibly containing aggregates.
///
/// ⊤, ¬ and ↔ are not node kinds; top(), neg() and iff() build their
/// expansions. Copies share structure.
class Formula {
 public:
  Formula() : node_(bottom_node()) {}

  static Formula bottom() { return Formula(); }
  static Formula atom(Atom a) { return Formula(std::make_shared<const Node>(Node{FormulaKind::Atom, a, {}, {}, {}})); }
  static Formula atom(std::string_view name) { return atom(Atom(name)); }
  static Formula conj(Formula lhs, Formula rhs) { return binary(FormulaKind::And, std::move(lhs), std::move(rhs)); }
  static Formula disj(Formula lhs, Formula rhs) { return binary(FormulaKind::Or, std::move(lhs), std::move(rhs)); }
  static Formula implies(Formula lhs, Formula rhs) {
    return binary(FormulaKind::Implies, std::move(lhs), std::move(rhs));
  }
  static Formula aggregate(Aggregate agg);

  FormulaKind kind() const noexcept { return node_->kind; }
  bool is_bottom() const noexcept { return kind() == FormulaKind::Bottom; }
  bool is_atom() const noexcept { return kind() == FormulaKind::Atom; }
  bool is_binary() const noexcept {
    return kind() == FormulaKind::And || kind() == FormulaKind::Or || kind() == FormulaKind::Implies;
  }
  /// F → ⊥
  bool is_negation() const noexcept { return kind() == FormulaKind::Implies && rhs().is_bottom(); }
  /// ⊥ → ⊥
  bool is_top() const noexcept { return is_negation() && lhs().is_bottom(); }

  const Atom& atom() const {
    if (!node_->atom) throw std::logic_error("formula is not an atom");
    return *node_->atom;
  }
  const Formula& lhs() const noexcept { return *node_->lhs; }
  const Formula& rhs() const noexcept { return *node_->rhs; }
  const Aggregate& aggregate() const {
    if (!node_->agg) throw std::logic_error("formula is not an aggregate");
    return *node_->agg;
  }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    FormulaKind kind;
    std::optional<Atom> atom;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
    std::shared_ptr<const Aggregate> agg;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula binary(FormulaKind kind, Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(Node{kind, std::nullopt, std::make_shared<const Formula>(std::move(lhs)),
                                                     std::make_shared<const Formula>(std::move(rhs)), {}}));
  }

  static const std::shared_ptr<const Node>& bottom_node() {
    static const auto node = std::make_shared<const Node>(Node{FormulaKind::Bottom, std::nullopt, {}, {}, {}});
    return node;
  }

  bool same_node(const Formula& o) const noexcept { return node_ == o.node_; }

  std::shared_ptr<const Node> node_;
};

enum class AggOp { Sum, Count, Min, Max, Product };
enum class Rel { Le, Lt, Ge, Gt, Eq, Ne };

struct AggregateElement {
  Formula formula;
  Weight weight;

  friend bool operator==(const AggregateElement&, const AggregateElement&) = default;
};

/// op⟨{F1=w1, ..., Fn=wn}⟩ ≺ bound. Elements form a list: duplicates are
/// kept, matching multiset semantics.
class Aggregate {
 public:
  Aggregate(AggOp op, std::vector<AggregateElement> elements, Rel rel, Weight bound)
      : op_(op), rel_(rel), bound_(bound), elements_(std::move(elements)) {}

  AggOp op() const noexcept { return op_; }
  Rel rel() const noexcept { return rel_; }
  const Weight& bound() const noexcept { return bound_; }
  const std::vector<AggregateElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Same op, relation and weights with new element formulas.
  Aggregate with_formulas(std::vector<Formula> formulas) const {
    std::vector<AggregateElement> elems;
    elems.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) elems.push_back({std::move(formulas.at(i)), elements_[i].weight});
    return Aggregate(op_, std::move(elems), rel_, bound_);
  }

  friend bool operator==(const Aggregate&, const Aggregate&) = default;

 private:
  AggOp op_;
  Rel rel_;
  Weight bound_;
  std::vector<AggregateElement> elements_;
};

inline Formula Formula::aggregate(Aggregate agg) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Aggregate, std::nullopt, {}, {}, std::make_shared<const Aggregate>(std::move(agg))}));
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Bottom: return true;
    case FormulaKind::Atom: return a.atom() == b.atom();
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case FormulaKind::Aggregate: return a.aggregate() == b.aggregate();
  }
  return false;
}

// Abbreviations, expanded at construction.

/// ⊤ ≡ ⊥ → ⊥
inline Formula top() { return Formula::implies(Formula::bottom(), Formula::bottom()); }
/// ¬F ≡ F → ⊥
inline Formula neg(Formula f) { return Formula::implies(std::move(f), Formula::bottom()); }
/// F ↔ G ≡ (F → G) ∧ (G → F)
inline Formula iff(const Formula& f, const Formula& g) {
  return Formula::conj(Formula::implies(f, g), Formula::implies(g, f));
}

/// Left-nested conjunction; the empty conjunction is ⊤.
inline Formula conj_all(std::span<const Formula> fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}
/// Left-nested disjunction; the empty disjunction is ⊥.
inline Formula disj_all(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disj(acc, fs[i]);
  return acc;
}

inline bool contains_aggregate(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom: return false;
    case FormulaKind::Aggregate: return true;
    default: return contains_aggregate(f.lhs()) || contains_aggregate(f.rhs());
  }
}

}  // namespace stablekernel
