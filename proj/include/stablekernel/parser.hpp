#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stablekernel/error.hpp"
#include "stablekernel/formula.hpp"
#include "stablekernel/theory.hpp"

namespace stablekernel {

/// Byte range [start, end) with the 1-based line and column of `start`.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::set<std::string> expected = {})
      : Error(format(message, span, expected)), span_(span), expected_(std::move(expected)) {}

  const SourceSpan& span() const noexcept { return span_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& message, const SourceSpan& span,
                            const std::set<std::string>& expected) {
    std::string out = std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      bool first = true;
      for (const auto& e : expected) {
        out += first ? "" : ", ";
        first = false;
        out += e;
      }
      out += ")";
    }
    return out;
  }

  SourceSpan span_;
  std::set<std::string> expected_;
};

namespace detail {

enum class Tok {
  End, Ident, Number, LParen, RParen, LBrace, RBrace, Semi, Comma, Dot,
  And, Or, Arrow, Iff, If, Le, Lt, Ge, Gt, Eq, Ne,
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::If: return "':-'";
    case Tok::Le: return "'<='";
    case Tok::Lt: return "'<'";
    case Tok::Ge: return "'>='";
    case Tok::Gt: return "'>'";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'!='";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const SourceSpan at = here();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, {}, at});
        return out;
      }
      const char c = src_[pos_];
      Tok kind = Tok::End;
      std::size_t len = 1;
      if (is_lower(c) || is_upper(c)) {
        if (is_upper(c)) fail("atom names must start with a lowercase letter", at);
        kind = Tok::Ident;
        while (pos_ + len < src_.size() && is_word(src_[pos_ + len])) ++len;
      } else if (is_digit(c) || (c == '-' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        kind = Tok::Number;
        len = number_length();
      } else {
        switch (c) {
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case '{': kind = Tok::LBrace; break;
          case '}': kind = Tok::RBrace; break;
          case ';': kind = Tok::Semi; break;
          case ',': kind = Tok::Comma; break;
          case '.': kind = Tok::Dot; break;
          case '&': kind = Tok::And; break;
          case '|': kind = Tok::Or; break;
          case '=': kind = Tok::Eq; break;
          case '-':
            if (!next_is('>')) fail("unexpected '-'", at);
            kind = Tok::Arrow, len = 2;
            break;
          case ':':
            if (!next_is('-')) fail("unexpected ':'", at);
            kind = Tok::If, len = 2;
            break;
          case '!':
            if (!next_is('=')) fail("unexpected '!'", at);
            kind = Tok::Ne, len = 2;
            break;
          case '<':
            if (src_.substr(pos_, 3) == "<->") kind = Tok::Iff, len = 3;
            else if (next_is('=')) kind = Tok::Le, len = 2;
            else kind = Tok::Lt;
            break;
          case '>':
            if (next_is('=')) kind = Tok::Ge, len = 2;
            else kind = Tok::Gt;
            break;
          default: fail(std::string("unexpected character '") + c + "'", at);
        }
      }
      SourceSpan span = at;
      span.end = pos_ + len;
      out.push_back({kind, src_.substr(pos_, len), span});
      advance(len);
    }
  }

 private:
  static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
  static bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_word(char c) { return is_lower(c) || is_upper(c) || is_digit(c) || c == '_'; }

  bool next_is(char c) const { return pos_ + 1 < src_.size() && src_[pos_ + 1] == c; }

  std::size_t number_length() const {
    std::size_t i = pos_;
    if (src_[i] == '-') ++i;
    while (i < src_.size() && is_digit(src_[i])) ++i;
    if (i + 1 < src_.size() && (src_[i] == '/' || src_[i] == '.') && is_digit(src_[i + 1])) {
      ++i;
      while (i < src_.size() && is_digit(src_[i])) ++i;
    }
    return i - pos_;
  }

  SourceSpan here() const { return {pos_, pos_, line_, column_}; }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance(1);
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message, SourceSpan at) const {
    at.end = at.start + 1;
    throw ParseError(message, at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

  std::vector<Formula> statements() {
    std::vector<Formula> out;
    while (peek().kind != Tok::End) out.push_back(statement());
    return out;
  }

  Formula lone_formula() {
    Formula f = formula();
    expect(Tok::End);
    return f;
  }

  Interpretation model() {
    std::vector<Atom> atoms;
    const bool braced = accept(Tok::LBrace);
    const Tok close = braced ? Tok::RBrace : Tok::End;
    if (peek().kind != close) {
      do atoms.push_back(atom_name()); while (accept(Tok::Comma));
    }
    expect(close);
    if (braced) expect(Tok::End);
    return Interpretation(std::move(atoms));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) unexpected({describe(kind)});
    return next();
  }

  [[noreturn]] void unexpected(std::set<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
    throw ParseError("unexpected " + found, t.span, std::move(expected));
  }

  bool at_keyword(std::string_view word) const { return peek().kind == Tok::Ident && peek().text == word; }

  Atom atom_name() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || !is_valid_atom_name(t.text)) unexpected({"atom"});
    next();
    return Atom(t.text);
  }

  Formula statement() {
    if (accept(Tok::If)) {
      Formula body = formula();
      expect(Tok::Dot);
      return Formula::implies(std::move(body), Formula::bottom());
    }
    Formula head = formula();
    if (accept(Tok::If)) {
      Formula body = formula();
      expect(Tok::Dot);
      return Formula::implies(std::move(body), std::move(head));
    }
    if (peek().kind != Tok::Dot) unexpected({"'.'", "':-'", "'&'", "'|'", "'->'", "'<->'"});
    next();
    return head;
  }

  Formula formula() {
    Formula f = implication();
    while (accept(Tok::Iff)) f = iff(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(std::move(f), implication());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disj(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conj(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (at_keyword("not")) {
      next();
      return neg(unary());
    }
    return primary();
  }

  static std::optional<AggOp> aggregate_op(std::string_view word) {
    if (word == "sum") return AggOp::Sum;
    if (word == "count") return AggOp::Count;
    if (word == "min") return AggOp::Min;
    if (word == "max") return AggOp::Max;
    if (word == "times") return AggOp::Product;
    return std::nullopt;
  }

  Formula primary() {
    const Token& t = peek();
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "bot") return next(), Formula::bottom();
      if (t.text == "top") return next(), top();
      if (auto op = aggregate_op(t.text)) {
        next();
        return Formula::aggregate(aggregate(*op));
      }
      return Formula::atom(atom_name());
    }
    unexpected({"atom", "'('", "'not'", "'bot'", "'top'", "aggregate"});
  }

  Weight weight() {
    const Token& t = expect(Tok::Number);
    try {
      return Weight::parse(t.text);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), t.span);
    }
  }

  Rel relation() {
    switch (peek().kind) {
      case Tok::Le: next(); return Rel::Le;
      case Tok::Lt: next(); return Rel::Lt;
      case Tok::Ge: next(); return Rel::Ge;
      case Tok::Gt: next(); return Rel::Gt;
      case Tok::Eq: next(); return Rel::Eq;
      case Tok::Ne: next(); return Rel::Ne;
      default: unexpected({"'<='", "'<'", "'>='", "'>'", "'='", "'!='"});
    }
  }

  Aggregate aggregate(AggOp op) {
    expect(Tok::LBrace);
    std::vector<AggregateElement> elements;
    if (peek().kind != Tok::RBrace) {
      do {
        Formula f = formula();
        Weight w(1);
        if (op != AggOp::Count || peek().kind == Tok::Eq) {
          expect(Tok::Eq);
          w = weight();
        }
        elements.push_back({std::move(f), w});
      } while (accept(Tok::Semi));
    }
    expect(Tok::RBrace);
    const Rel rel = relation();
    return Aggregate(op, std::move(elements), rel, weight());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a sequence of statements `F.`, `H :- B.` or `:- B.`.
inline Theory parse_theory(std::string_view text) { return Theory(detail::Parser(text).statements()); }

/// Statements in source order, without merging duplicates.
inline std::vector<Formula> parse_statements(std::string_view text) { return detail::Parser(text).statements(); }

/// A single formula without the terminating `.`.
inline Formula parse_formula(std::string_view text) { return detail::Parser(text).lone_formula(); }

/// `p,q`, `{p,q}`, `{}` or the empty string.
inline Interpretation parse_model(std::string_view text) { return detail::Parser(text).model(); }

}  // namespace stablekernel
