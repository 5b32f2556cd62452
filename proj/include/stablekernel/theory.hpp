#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stablekernel/formula.hpp"
#include "stablekernel/printer.hpp"

namespace stablekernel {

/// Finite set of formulas. Iteration follows the canonical printed form, and
/// formulas with the same printed form (hence the same structure) are merged.
class Theory {
 public:
  Theory() = default;
  Theory(std::initializer_list<Formula> formulas) : Theory(std::vector<Formula>(formulas)) {}
  explicit Theory(std::vector<Formula> formulas) {
    std::vector<std::pair<std::string, Formula>> keyed;
    keyed.reserve(formulas.size());
    for (auto& f : formulas) keyed.emplace_back(print_statement(f), std::move(f));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    formulas_.reserve(keyed.size());
    for (auto& [key, f] : keyed) formulas_.push_back(std::move(f));
  }

  std::span<const Formula> formulas() const noexcept { return formulas_; }
  std::size_t size() const noexcept { return formulas_.size(); }
  bool empty() const noexcept { return formulas_.empty(); }
  auto begin() const noexcept { return formulas_.begin(); }
  auto end() const noexcept { return formulas_.end(); }
  const Formula& operator[](std::size_t i) const { return formulas_.at(i); }

  Theory with(Formula f) const {
    auto v = formulas_;
    v.push_back(std::move(f));
    return Theory(std::move(v));
  }

  friend Theory operator|(const Theory& a, const Theory& b) {
    auto v = a.formulas_;
    v.insert(v.end(), b.formulas_.begin(), b.formulas_.end());
    return Theory(std::move(v));
  }

  friend bool operator==(const Theory& a, const Theory& b) { return a.formulas_ == b.formulas_; }

 private:
  std::vector<Formula> formulas_;
};

/// An HT-interpretation (here, there) with here ⊆ there.
class HTInterpretation {
 public:
  HTInterpretation(Interpretation here, Interpretation there) : here_(std::move(here)), there_(std::move(there)) {
    if (!here_.is_subset_of(there_)) throw std::invalid_argument("HT-interpretation requires here ⊆ there");
  }

  const Interpretation& here() const noexcept { return here_; }
  const Interpretation& there() const noexcept { return there_; }

  friend bool operator==(const HTInterpretation&, const HTInterpretation&) = default;
  friend auto operator<=>(const HTInterpretation& a, const HTInterpretation& b) {
    if (auto c = a.here_ <=> b.here_; c != 0) return c;
    return a.there_ <=> b.there_;
  }

 private:
  Interpretation here_;
  Interpretation there_;
};

/// Canonical printed form: one statement per line in iteration order.
inline std::string print_theory(const Theory& t) { return print_statements(t.formulas()); }

/// `({},{p})`
inline std::string print_ht_interpretation(const HTInterpretation& i) {
  return "(" + print_interpretation(i.here()) + "," + print_interpretation(i.there()) + ")";
}

}  // namespace stablekernel
