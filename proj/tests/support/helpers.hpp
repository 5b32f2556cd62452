#pragma once

#include <string>
#include <vector>

#include "stablekernel/stablekernel.hpp"

namespace helpers {

namespace sk = stablekernel;

inline sk::Theory T(const std::string& text) { return sk::parse_theory(text); }
inline sk::Formula F(const std::string& text) { return sk::parse_formula(text); }
inline sk::Interpretation M(const std::string& text) { return sk::parse_model(text); }

/// Models written as `{p} {q}`, `{}` or `none`.
inline std::vector<sk::Interpretation> Ms(const std::string& text) {
  std::vector<sk::Interpretation> out;
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    const auto end = text.find('}', pos);
    out.push_back(sk::parse_model(text.substr(pos, end - pos + 1)));
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string show(const std::vector<sk::Interpretation>& ms) {
  if (ms.empty()) return "none";
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : " ") + sk::print_interpretation(m);
  return out;
}

inline std::vector<sk::Interpretation> solve(const std::string& text, sk::Semantics s = sk::Semantics::Ferraris) {
  return sk::stable_models(T(text), s);
}

inline bool strongly_equivalent(const sk::Formula& a, const sk::Formula& b) {
  return sk::strong_equiv(sk::Theory{a}, sk::Theory{b}).equivalent;
}

}  // namespace helpers
