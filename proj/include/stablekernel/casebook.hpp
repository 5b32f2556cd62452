#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "stablekernel/error.hpp"
#include "stablekernel/parser.hpp"
#include "stablekernel/semantics.hpp"

namespace stablekernel {

/// A combinatorial auction: bids on sets of items, each with a value, and a
/// junk cost for every item left unsold.
struct AuctionInstance {
  std::vector<std::set<std::size_t>> bid_items;
  std::vector<Weight> bid_value;
  std::vector<Weight> junk_cost;

  std::size_t n_bids() const noexcept { return bid_items.size(); }
  std::size_t n_items() const noexcept { return junk_cost.size(); }

  void validate() const {
    if (bid_value.size() != bid_items.size()) throw InvalidInstance("every bid needs exactly one value");
    for (std::size_t j = 0; j < bid_items.size(); ++j)
      for (std::size_t i : bid_items[j])
        if (i >= n_items())
          throw InvalidInstance("bid " + std::to_string(j) + " names unknown item " + std::to_string(i));
    for (std::size_t i = 0; i < junk_cost.size(); ++i)
      if (junk_cost[i] < Weight(0)) throw InvalidInstance("junk cost of item " + std::to_string(i) + " is negative");
  }
};

/// `b<j>`: bid j is accepted.
inline Atom bid_atom(std::size_t j) { return Atom("b" + std::to_string(j)); }
/// `s<i>`: item i is sold.
inline Atom sold_atom(std::size_t i) { return Atom("s" + std::to_string(i)); }

/// bj ∨ ¬bj per bid, ¬(bj ∧ bk) per pair of bids sharing an item, bj → si
/// per item i of bid j, and sum⟨{bj=wj; ¬si=−ci}⟩ ≥ 0.
inline Theory auction_encode(const AuctionInstance& inst) {
  inst.validate();
  std::vector<Formula> out;
  for (std::size_t j = 0; j < inst.n_bids(); ++j) {
    const Formula b = Formula::atom(bid_atom(j));
    out.push_back(Formula::disj(b, neg(b)));
  }
  for (std::size_t j = 0; j < inst.n_bids(); ++j)
    for (std::size_t k = j + 1; k < inst.n_bids(); ++k) {
      const auto& a = inst.bid_items[j];
      const auto& b = inst.bid_items[k];
      const bool overlap = std::any_of(a.begin(), a.end(), [&](std::size_t i) { return b.count(i) > 0; });
      if (overlap) out.push_back(neg(Formula::conj(Formula::atom(bid_atom(j)), Formula::atom(bid_atom(k)))));
    }
  for (std::size_t j = 0; j < inst.n_bids(); ++j)
    for (std::size_t i : inst.bid_items[j])
      out.push_back(Formula::implies(Formula::atom(bid_atom(j)), Formula::atom(sold_atom(i))));
  std::vector<AggregateElement> elems;
  for (std::size_t j = 0; j < inst.n_bids(); ++j) elems.push_back({Formula::atom(bid_atom(j)), inst.bid_value[j]});
  for (std::size_t i = 0; i < inst.n_items(); ++i) elems.push_back({neg(Formula::atom(sold_atom(i))), -inst.junk_cost[i]});
  out.push_back(Formula::aggregate(Aggregate(AggOp::Sum, std::move(elems), Rel::Ge, Weight(0))));
  return Theory(std::move(out));
}

using BidSet = std::vector<std::size_t>;

/// Every set of bids with pairwise disjoint items whose accepted values minus
/// the junk costs of unsold items total at least 0, in lexicographic order.
inline std::vector<BidSet> auction_oracle(const AuctionInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n_bids();
  if (n > 20) throw BudgetExceeded("bids", n, 20);
  std::set<BidSet> found;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::set<std::size_t> sold;
    bool disjoint = true;
    Weight total;
    BidSet bids;
    for (std::size_t j = 0; j < n && disjoint; ++j) {
      if (!((m >> j) & 1U)) continue;
      bids.push_back(j);
      total += inst.bid_value[j];
      for (std::size_t i : inst.bid_items[j]) disjoint = sold.insert(i).second && disjoint;
    }
    if (!disjoint) continue;
    for (std::size_t i = 0; i < inst.n_items(); ++i)
      if (!sold.count(i)) total -= inst.junk_cost[i];
    if (total >= Weight(0)) found.insert(std::move(bids));
  }
  return {found.begin(), found.end()};
}

/// Accepted bids of a stable model of auction_encode().
inline BidSet accepted_bids(const AuctionInstance& inst, const Interpretation& x) {
  BidSet out;
  for (std::size_t j = 0; j < inst.n_bids(); ++j)
    if (x.contains(bid_atom(j))) out.push_back(j);
  return out;
}

namespace detail {

inline Weight json_weight(const nlohmann::json& j) {
  if (j.is_number_integer()) return Weight(j.get<std::int64_t>());
  if (j.is_string()) return Weight::parse(j.get<std::string>());
  throw InvalidInstance("weights must be integers or strings such as \"1/2\"");
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// `{"bids": [{"items": [0, 1], "value": 5}], "junk_costs": [3, 0]}`;
/// weights are integers or rational strings.
inline AuctionInstance auction_from_json(const nlohmann::json& j) {
  try {
    AuctionInstance inst;
    for (const auto& bid : j.at("bids")) {
      std::set<std::size_t> items;
      for (const auto& i : bid.at("items")) items.insert(i.get<std::size_t>());
      inst.bid_items.push_back(std::move(items));
      inst.bid_value.push_back(detail::json_weight(bid.at("value")));
    }
    for (const auto& c : j.at("junk_costs")) inst.junk_cost.push_back(detail::json_weight(c));
    inst.validate();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInstance(std::string("malformed auction instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInstance(e.what());
  }
}

inline AuctionInstance load_auction(const std::filesystem::path& path) {
  try {
    return auction_from_json(nlohmann::json::parse(detail::read_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInstance(path.string() + ": " + e.what());
  }
}

enum class Provenance { PaperQuoted, OracleDerived, Disputed };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::PaperQuoted: return "paper-quoted";
    case Provenance::OracleDerived: return "oracle-derived";
    case Provenance::Disputed: return "disputed";
  }
  return "?";
}

/// One worked example. `expected` is what the definitions yield; a disputed
/// record also keeps the differing published claim in `quoted`.
struct CaseRecord {
  std::string id;
  std::string source;
  Semantics semantics = Semantics::Ferraris;
  std::vector<Interpretation> expected;
  Provenance provenance = Provenance::OracleDerived;
  std::string locator;
  std::optional<std::vector<Interpretation>> quoted;
};

struct AuctionRecord {
  std::string id;
  AuctionInstance instance;
};

struct Casebook {
  std::vector<CaseRecord> cases;
  std::vector<AuctionRecord> auctions;
};

namespace detail {

inline std::vector<Interpretation> json_models(const nlohmann::json& j) {
  std::vector<Interpretation> out;
  for (const auto& m : j) {
    std::vector<Atom> atoms;
    for (const auto& a : m) atoms.emplace_back(a.get<std::string>());
    out.emplace_back(std::move(atoms));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Provenance parse_provenance(const std::string& s) {
  for (auto p : {Provenance::PaperQuoted, Provenance::OracleDerived, Provenance::Disputed})
    if (s == to_string(p)) return p;
  throw Error("unknown provenance '" + s + "'");
}

}  // namespace detail

/// Reads `manifest.json` from `dir`. Each case names an `.lpt` file relative
/// to `dir`; each auction names a JSON instance.
inline Casebook load_casebook(const std::filesystem::path& dir) {
  const auto manifest = nlohmann::json::parse(detail::read_file(dir / "manifest.json"));
  Casebook book;
  for (const auto& c : manifest.at("cases")) {
    CaseRecord r;
    r.id = c.at("id").get<std::string>();
    r.source = detail::read_file(dir / c.at("file").get<std::string>());
    const auto sem = parse_semantics(c.at("semantics").get<std::string>());
    if (!sem) throw Error(r.id + ": unknown semantics");
    r.semantics = *sem;
    r.expected = detail::json_models(c.at("expected"));
    r.provenance = detail::parse_provenance(c.at("provenance").get<std::string>());
    r.locator = c.value("locator", "");
    if (c.contains("quoted")) r.quoted = detail::json_models(c.at("quoted"));
    if (r.provenance == Provenance::Disputed && !r.quoted) throw Error(r.id + ": disputed record without quoted value");
    book.cases.push_back(std::move(r));
  }
  if (manifest.contains("auctions"))
    for (const auto& a : manifest.at("auctions"))
      book.auctions.push_back({a.at("id").get<std::string>(), load_auction(dir / a.at("file").get<std::string>())});
  return book;
}

struct CaseResult {
  std::string id;
  std::string semantics;
  Provenance provenance;
  bool passed;
  std::string detail;
};

struct CasebookReport {
  std::vector<CaseResult> results;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
  }
  bool ok() const { return failures() == 0; }
};

namespace detail {

inline std::string models_inline(const std::vector<Interpretation>& ms) {
  if (ms.empty()) return "none";
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : " ") + print_interpretation(m);
  return out;
}

}  // namespace detail

/// Solves every case and auction. A case passes when the computed models
/// equal `expected`; a disputed case never fails on its quoted value.
inline CasebookReport run_casebook(const Casebook& book, const SolveOptions& options = {}) {
  CasebookReport report;
  for (const auto& c : book.cases) {
    CaseResult r{c.id, to_string(c.semantics), c.provenance, false, {}};
    try {
      const auto got = stable_models(parse_theory(c.source), c.semantics, options);
      r.passed = got == c.expected;
      r.detail = "got " + detail::models_inline(got);
      if (!r.passed) r.detail += ", expected " + detail::models_inline(c.expected);
      if (c.quoted) r.detail += ", quoted " + detail::models_inline(*c.quoted);
    } catch (const Error& e) {
      r.detail = std::string("error: ") + e.what();
    }
    report.results.push_back(std::move(r));
  }
  for (const auto& a : book.auctions) {
    CaseResult r{a.id, "auction", Provenance::OracleDerived, false, {}};
    try {
      const auto oracle = auction_oracle(a.instance);
      std::vector<BidSet> encoded;
      for (const auto& m : stable_models(auction_encode(a.instance), Semantics::Ferraris, options))
        encoded.push_back(accepted_bids(a.instance, m));
      std::sort(encoded.begin(), encoded.end());
      r.passed = encoded == oracle;
      r.detail = std::to_string(encoded.size()) + " stable models, " + std::to_string(oracle.size()) + " solutions";
    } catch (const Error& e) {
      r.detail = std::string("error: ") + e.what();
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

/// One line per result: `PASS|FAIL <id> [<semantics>] <provenance>: <detail>`.
inline std::string print_report(const CasebookReport& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += r.passed ? "PASS " : "FAIL ";
    out += r.id + " [" + r.semantics + "] " + to_string(r.provenance) + ": " + r.detail + "\n";
  }
  out += std::to_string(report.results.size() - report.failures()) + "/" + std::to_string(report.results.size()) +
         " passed\n";
  return out;
}

}  // namespace stablekernel
