#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsel/oracles.hpp"
#include "ramsel/pipeline.hpp"
#include "ramsel/report.hpp"
#include "ramsel/selftest.hpp"

namespace {

using namespace ramsel;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitBudgetExceeded = 3;

int run_solve(const RunConfig& config) {
  auto start = std::chrono::steady_clock::now();
  PairColouring c = parse_colouring_spec(config.colouring_spec);
  CounterexampleSpec eta = parse_eta_spec(config.eta_spec);
  RamseyWitness witness = ramsey_pipeline(c, eta, Budget(config.budget));
  if (config.format == "json") {
    std::cout << witness_report(config, witness).dump(2) << "\n";
  } else {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cout << "colouring: " << config.colouring_spec << "\n"
              << "eta: " << config.eta_spec << "\n"
              << "x: " << (witness.colour ? 1 : 0) << "\n"
              << "eta_value: " << witness.eta_value << "\n";
    std::cout << "F:";
    for (Nat v : witness.f_table) std::cout << " " << v;
    std::cout << "\n"
              << "verified: " << (witness.report.pass ? "yes" : "no") << "\n";
    if (witness.report.first_violation) {
      const auto& v = *witness.report.first_violation;
      std::cout << "first_violation: k=" << v.k << " i=" << v.i << " j=" << v.j
                << " (" << v.reason << ")\n";
    }
    std::cout << "counters: eps_calls=" << witness.counters.eps_calls
              << " depth_evals=" << witness.counters.depth_evals
              << " prec_memo=" << witness.counters.prec_memo
              << " budget_used=" << witness.counters.budget_used << "\n"
              << "elapsed_ms: " << elapsed.count() << "\n";
  }
  return witness.report.pass ? 0 : kExitVerifyFailed;
}

int run_verify(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open witness file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad witness file: ") + e.what());
  }
  StoredWitness stored = witness_from_json(j);
  PairColouring c = parse_colouring_spec(stored.colouring_spec);
  CounterexampleSpec eta = parse_eta_spec(stored.eta_spec);
  VerificationReport report =
      verify_ramsey_condition(c, stored.colour, stored.f_table, eta);
  Nat recomputed_eta = eta.eval(stored.colour, [&](Nat i) {
    if (i >= stored.f_table.size())
      throw TableTooShort("witness F table too short for eta");
    return stored.f_table[static_cast<std::size_t>(i)];
  });
  bool eta_matches = (recomputed_eta == stored.eta_value);
  bool pass = report.pass && eta_matches;
  if (format == "json") {
    nlohmann::ordered_json out;
    out["witness"] = path;
    out["verified"] = pass;
    out["eta_value_matches"] = eta_matches;
    out["checks_performed"] = report.checks_performed;
    if (report.first_violation) {
      const auto& v = *report.first_violation;
      out["first_violation"] = {
          {"k", v.k}, {"i", v.i}, {"j", v.j}, {"reason", v.reason}};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "witness: " << path << "\n"
              << "verified: " << (pass ? "yes" : "no") << "\n"
              << "checks_performed: " << report.checks_performed << "\n";
    if (!eta_matches)
      std::cout << "eta_value mismatch: stored " << stored.eta_value
                << ", recomputed " << recomputed_eta << "\n";
    if (report.first_violation) {
      const auto& v = *report.first_violation;
      std::cout << "first_violation: k=" << v.k << " i=" << v.i << " j=" << v.j
                << " (" << v.reason << ")\n";
    }
  }
  return pass ? 0 : kExitVerifyFailed;
}

std::vector<SelKind> parse_selection(const std::string& name, Nat rounds) {
  SelKind kind;
  if (name == "argmax") kind = SelKind::kArgMax;
  else if (name == "argmin") kind = SelKind::kArgMin;
  else if (name == "const0") kind = SelKind::kConst0;
  else if (name == "const1") kind = SelKind::kConst1;
  else throw Error("unknown selection: '" + name + "'");
  return std::vector<SelKind>(static_cast<std::size_t>(rounds), kind);
}

std::vector<Nat> parse_game_outcome(const std::string& spec, Nat rounds) {
  std::vector<Nat> table;
  Nat size = Nat{1} << rounds;
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "formula" && tail == "binary") {
    for (Nat i = 0; i < size; ++i) table.push_back(i);
    return table;
  }
  if (head == "seed") {
    Nat seed = std::stoull(tail);
    for (Nat i = 0; i < size; ++i)
      table.push_back(splitmix64(splitmix64(seed) ^ i) % 8);
    return table;
  }
  if (head == "table") {
    std::ifstream in(tail);
    if (!in) throw Error("cannot open outcome table: " + tail);
    Nat v;
    while (in >> v) table.push_back(v);
    if (table.size() != size)
      throw Error("outcome table has " + std::to_string(table.size()) +
                  " entries, expected " + std::to_string(size));
    return table;
  }
  throw Error("bad outcome spec: '" + spec +
              "' (expected formula:binary, seed:<u64> or table:<path>)");
}

int run_game(Nat rounds, const std::string& selection,
             const std::string& outcome_spec, const std::string& format) {
  if (rounds < 1 || rounds > 20)
    throw Error("rounds must be in [1, 20], got " + std::to_string(rounds));
  Game<bool, Nat> g = table_game(rounds, parse_selection(selection, rounds),
                                 parse_game_outcome(outcome_spec, rounds));
  Budget budget;
  BoolPrefix play = optimal_play(g, budget);
  PlayReport report = verify_optimal_play(g, play, budget);
  BoolPrefix reference = brute_force_play(g, rounds);
  bool pass = report.pass() && play == reference;
  if (format == "json") {
    nlohmann::ordered_json out;
    out["rounds"] = rounds;
    out["selection"] = selection;
    out["outcome"] = outcome_spec;
    out["play"] = std::vector<int>(play.begin(), play.end());
    out["outcome_value"] = g.outcome(play);
    out["verified"] = pass;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "play:";
    for (bool b : play) std::cout << " " << (b ? 1 : 0);
    std::cout << "\noutcome: " << g.outcome(play) << "\n"
              << "verified: " << (pass ? "yes" : "no") << "\n";
  }
  return pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selection-function products and the finitary Ramsey realizer"};
  app.require_subcommand(1);

  RunConfig config;
  auto* solve = app.add_subcommand(
      "solve", "Run the full pipeline and verify the witness");
  solve->add_option("--colouring", config.colouring_spec,
                    "formula:zero | formula:parity | seed:<u64> | matrix:<path>")
      ->required();
  solve->add_option("--eta", config.eta_spec,
                    "const:<k> | xswitch:<k0>:<k1> | fmax:<m>:<cap>")
      ->required();
  solve->add_option("--budget", config.budget, "work budget in steps")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", config.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string witness_path;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Re-check a stored witness file");
  verify->add_option("--witness", witness_path, "witness JSON file")->required();
  verify->add_option("--out", verify_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  Nat rounds = 2;
  std::string selection = "argmax";
  std::string outcome_spec = "formula:binary";
  std::string game_format = "text";
  auto* game = app.add_subcommand(
      "game", "Solve a finite Boolean game and verify optimality");
  game->add_option("--rounds", rounds, "number of rounds (1..20)");
  game->add_option("--selection", selection,
                   "argmax | argmin | const0 | const1");
  game->add_option("--outcome", outcome_spec,
                   "formula:binary | seed:<u64> | table:<path>");
  game->add_option("--out", game_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* selftest = app.add_subcommand(
      "selftest", "Run the oracle-equivalence and invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (solve->parsed()) return run_solve(config);
    if (verify->parsed()) return run_verify(witness_path, verify_format);
    if (game->parsed())
      return run_game(rounds, selection, outcome_spec, game_format);
    if (selftest->parsed())
      return run_selftest(std::cout) == 0 ? 0 : kExitVerifyFailed;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
