// stablekernel: command-line front end.
//
// Exit status: 0 success, 1 no stable model / not stable / not equivalent,
// 2 usage error, 3 input or shape error, 4 budget exceeded.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stablekernel/stablekernel.hpp"

namespace sk = stablekernel;

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kInput = 3, kBudget = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_max_atoms() {
  if (const char* env = std::getenv("STABLEKERNEL_MAX_ATOMS")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed STABLEKERNEL_MAX_ATOMS\n";
    }
  }
  return sk::Budget{}.max_atoms;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return sk::detail::read_file(path);
}

sk::Theory load_theory(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return sk::parse_theory(text);
  } catch (const sk::ParseError& e) {
    throw sk::Error(path + ":" + e.what());
  }
}

sk::Semantics semantics_from(const std::string& name) {
  if (auto s = sk::parse_semantics(name)) return *s;
  throw UsageError("unknown semantics '" + name + "'");
}

std::string inline_models(const std::vector<sk::Interpretation>& ms) {
  if (ms.empty()) return "none";
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : " ") + sk::print_interpretation(m);
  return out;
}

struct Options {
  std::string file;
  std::string file2;
  std::string semantics = "ferraris";
  bool json = false;
  std::size_t max_atoms = 0;
  std::string model;
  std::string method = "ht";
  std::string mode = "full";
  std::string target = "ferraris";
  std::string dir = "casebook";
  bool oracle = false;
};

sk::SolveOptions solve_options(const Options& o) {
  sk::SolveOptions s;
  s.budget.max_atoms = o.max_atoms;
  return s;
}

int cmd_solve(const Options& o) {
  const auto models = sk::stable_models(load_theory(o.file), semantics_from(o.semantics), solve_options(o));
  if (o.json) {
    nlohmann::json j = {{"models", nlohmann::json::array()}};
    for (const auto& m : models) {
      nlohmann::json atoms = nlohmann::json::array();
      for (const auto& a : m) atoms.push_back(a.name());
      j["models"].push_back(std::move(atoms));
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << sk::print_models(models);
  }
  return models.empty() ? kNo : kOk;
}

int cmd_check(const Options& o) {
  const auto theory = load_theory(o.file);
  const auto model = sk::parse_model(o.model);
  const auto report = sk::explain_stability(theory, model, semantics_from(o.semantics), solve_options(o));
  std::cout << sk::to_string(report) << '\n';
  return report.stable() ? kOk : kNo;
}

std::string describe(const sk::StrongEqReport& r) {
  if (r.equivalent) return "equivalent";
  return "not-equivalent witness=" + sk::print_ht_interpretation(*r.witness);
}

int cmd_strong_eq(const Options& o) {
  if (o.method != "ht" && o.method != "reduct" && o.method != "both") throw UsageError("unknown method '" + o.method + "'");
  const auto t1 = load_theory(o.file);
  const auto t2 = load_theory(o.file2);
  sk::Budget budget;
  budget.max_atoms = o.max_atoms;
  const auto run = [&](sk::StrongEqMethod m) { return sk::strong_equiv(t1, t2, m, budget); };
  const auto report = run(o.method == "reduct" ? sk::StrongEqMethod::ReductEq : sk::StrongEqMethod::HT);
  if (o.method == "both") {
    const auto other = run(sk::StrongEqMethod::ReductEq);
    if (describe(other) != describe(report)) {
      std::cerr << "error: methods disagree: ht says " << describe(report) << ", reduct says " << describe(other) << '\n';
      return kInput;
    }
  }
  std::cout << describe(report) << '\n';
  return report.equivalent ? kOk : kNo;
}

int cmd_compile(const Options& o) {
  const auto theory = load_theory(o.file);
  sk::Budget budget;
  sk::Theory out;
  if (o.mode != "full" && o.mode != "mono-simplify") throw UsageError("unknown mode '" + o.mode + "'");
  if (o.target == "ferraris") {
    if (o.mode == "full")
      out = sk::compile_aggregates(theory, budget);
    else
      out = sk::map_aggregates(theory, [&](const sk::Aggregate& a) { return sk::compile_simplified(a, budget); });
  } else if (o.mode != "full") {
    throw UsageError("--mode=mono-simplify requires --target=ferraris");
  } else if (o.target == "pdb") {
    out = sk::map_aggregates(theory, [&](const sk::Aggregate& a) { return sk::pdb_translate(a, budget); });
  } else if (o.target == "wc") {
    out = sk::map_aggregates(theory, [&](const sk::Aggregate& a) {
      const auto wc = sk::aggregate_to_wc(a);
      if (!wc) throw sk::NotWeightConstraintProgram("not a weight constraint: " + sk::print_formula(sk::Formula::aggregate(a)));
      return sk::wc_to_nested(sk::eliminate_negative_weights(*wc), budget);
    });
  } else {
    throw UsageError("unknown target '" + o.target + "'");
  }
  std::cout << sk::print_theory(sk::simplify(out));
  return kOk;
}

int cmd_compare(const Options& o) {
  const auto theory = load_theory(o.file);
  const auto options = solve_options(o);
  const sk::Semantics all[] = {sk::Semantics::Ferraris, sk::Semantics::Lif99, sk::Semantics::FLP,
                               sk::Semantics::SmodelsWC, sk::Semantics::PDB};
  std::vector<std::pair<sk::Semantics, std::vector<sk::Interpretation>>> rows;
  for (auto s : all) {
    std::string name = sk::to_string(s);
    name.resize(10, ' ');
    if (!sk::applicable(theory, s)) {
      std::cout << name << "n/a\n";
      continue;
    }
    try {
      auto models = sk::stable_models(theory, s, options);
      std::cout << name << inline_models(models) << '\n';
      rows.emplace_back(s, std::move(models));
    } catch (const sk::Error& e) {
      std::cout << name << "error: " << e.what() << '\n';
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      std::cout << sk::to_string(rows[i].first) << (rows[i].second == rows[j].second ? " = " : " != ")
                << sk::to_string(rows[j].first) << '\n';
  return kOk;
}

int cmd_casebook(const Options& o) {
  const auto report = sk::run_casebook(sk::load_casebook(o.dir), solve_options(o));
  std::cout << sk::print_report(report);
  return report.ok() ? kOk : kNo;
}

int cmd_auction(const Options& o) {
  const auto inst = sk::load_auction(o.file);
  std::vector<sk::BidSet> sets;
  if (o.oracle) {
    sets = sk::auction_oracle(inst);
  } else {
    for (const auto& m : sk::stable_models(sk::auction_encode(inst), sk::Semantics::Ferraris, solve_options(o)))
      sets.push_back(sk::accepted_bids(inst, m));
    std::sort(sets.begin(), sets.end());
  }
  for (const auto& s : sets) {
    std::vector<sk::Atom> atoms;
    for (std::size_t j : s) atoms.push_back(sk::bid_atom(j));
    std::cout << sk::print_interpretation(sk::Interpretation(std::move(atoms))) << '\n';
  }
  return sets.empty() ? kNo : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable models of propositional theories with aggregates"};
  app.require_subcommand(1);
  Options o;
  o.max_atoms = default_max_atoms();

  const auto semantics_opt = [&](CLI::App* cmd) {
    cmd->add_option("--semantics", o.semantics, "ferraris|lif99|flp|smodels|pdb")->capture_default_str();
  };
  const auto budget_opt = [&](CLI::App* cmd) {
    cmd->add_option("--max-atoms", o.max_atoms, "largest vocabulary to enumerate")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "print the stable models");
  solve->add_option("file", o.file, "theory file, or - for stdin")->required();
  semantics_opt(solve);
  solve->add_flag("--json", o.json, "emit {\"models\": [...]}");
  budget_opt(solve);

  auto* check = app.add_subcommand("check", "decide whether a set of atoms is stable");
  check->add_option("file", o.file)->required();
  check->add_option("--model", o.model, "comma-separated atoms; empty for the empty set")->required()->expected(0, 1);
  semantics_opt(check);
  budget_opt(check);

  auto* seq = app.add_subcommand("strong-eq", "decide strong equivalence of two theories");
  seq->add_option("file1", o.file)->required();
  seq->add_option("file2", o.file2)->required();
  seq->add_option("--method", o.method, "ht|reduct|both")->capture_default_str();
  budget_opt(seq);

  auto* compile = app.add_subcommand("compile", "rewrite aggregates as formulas");
  compile->add_option("file", o.file)->required();
  compile->add_option("--mode", o.mode, "full|mono-simplify")->capture_default_str();
  compile->add_option("--target", o.target, "ferraris|pdb|wc")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "solve under every applicable semantics");
  compare->add_option("file", o.file)->required();
  budget_opt(compare);

  auto* casebook = app.add_subcommand("casebook", "run the casebook");
  casebook->add_option("--dir", o.dir, "directory holding manifest.json")->capture_default_str();
  budget_opt(casebook);

  auto* auction = app.add_subcommand("auction", "solve an auction instance (JSON)");
  auction->add_option("file", o.file)->required();
  auction->add_flag("--oracle", o.oracle, "enumerate solutions directly instead of solving the encoding");
  budget_opt(auction);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*check) return cmd_check(o);
    if (*seq) return cmd_strong_eq(o);
    if (*compile) return cmd_compile(o);
    if (*compare) return cmd_compare(o);
    if (*casebook) return cmd_casebook(o);
    if (*auction) return cmd_auction(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sk::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
