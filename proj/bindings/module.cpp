#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramsel/oracles.hpp"
#include "ramsel/pipeline.hpp"
#include "ramsel/report.hpp"
#include "ramsel/selftest.hpp"

namespace py = pybind11;
using namespace ramsel;

namespace {

PairColouring colouring_from_spec(const std::string& spec) {
  return parse_colouring_spec(spec);
}

py::dict solve(const std::string& colouring_spec, const std::string& eta_spec,
               Nat budget) {
  PairColouring c = colouring_from_spec(colouring_spec);
  CounterexampleSpec eta = parse_eta_spec(eta_spec);
  RamseyWitness w = ramsey_pipeline(c, eta, Budget(budget));
  py::dict out;
  out["colouring"] = colouring_spec;
  out["eta"] = eta_spec;
  out["x"] = w.colour ? 1 : 0;
  out["F"] = w.f_table;
  out["eta_value"] = w.eta_value;
  out["verified"] = w.report.pass;
  out["any_fallback"] = w.any_fallback;
  if (w.report.first_violation) {
    const auto& v = *w.report.first_violation;
    py::dict fv;
    fv["k"] = v.k;
    fv["i"] = v.i;
    fv["j"] = v.j;
    fv["reason"] = v.reason;
    out["first_violation"] = fv;
  }
  return out;
}

bool prec_py(const std::string& colouring_spec, Nat j, Nat i) {
  RamseyContext ctx(colouring_from_spec(colouring_spec), Budget{});
  return ctx.prec(j, i);
}

bool t_prime_py(const std::string& colouring_spec, const std::vector<bool>& s,
                Nat k) {
  RamseyContext ctx(colouring_from_spec(colouring_spec), Budget{});
  return ctx.t_prime(BoolPrefix(s.begin(), s.end()), k);
}

std::vector<bool> canonical_branch_py(const std::string& colouring_spec,
                                      Nat n) {
  RamseyContext ctx(colouring_from_spec(colouring_spec), Budget{});
  BoolPrefix b = canonical_branch(ctx, n);
  return std::vector<bool>(b.begin(), b.end());
}

std::vector<Nat> exact_beta_py(const std::string& colouring_spec, Nat up_to,
                               Nat cap) {
  RamseyContext ctx(colouring_from_spec(colouring_spec), Budget{});
  return exact_beta_oracle(ctx, up_to, cap);
}

Game<bool, Nat> game_from_args(Nat rounds, const std::string& selection,
                               const std::vector<Nat>& outcome_table) {
  SelKind kind;
  if (selection == "argmax") kind = SelKind::kArgMax;
  else if (selection == "argmin") kind = SelKind::kArgMin;
  else if (selection == "const0") kind = SelKind::kConst0;
  else if (selection == "const1") kind = SelKind::kConst1;
  else throw Error("unknown selection: '" + selection + "'");
  if (outcome_table.size() != (std::size_t{1} << rounds))
    throw Error("outcome table must have 2^rounds entries");
  return table_game(rounds,
                    std::vector<SelKind>(static_cast<std::size_t>(rounds), kind),
                    outcome_table);
}

std::vector<int> optimal_play_py(Nat rounds, const std::string& selection,
                                 const std::vector<Nat>& outcome_table) {
  Budget budget;
  BoolPrefix play =
      optimal_play(game_from_args(rounds, selection, outcome_table), budget);
  return std::vector<int>(play.begin(), play.end());
}

std::vector<int> brute_force_play_py(Nat rounds, const std::string& selection,
                                     const std::vector<Nat>& outcome_table) {
  BoolPrefix play =
      brute_force_play(game_from_args(rounds, selection, outcome_table), rounds);
  return std::vector<int>(play.begin(), play.end());
}

py::dict verify_py(const std::string& colouring_spec, int x,
                   const std::vector<Nat>& f_table,
                   const std::string& eta_spec) {
  PairColouring c = colouring_from_spec(colouring_spec);
  CounterexampleSpec eta = parse_eta_spec(eta_spec);
  VerificationReport r = verify_ramsey_condition(c, x != 0, f_table, eta);
  py::dict out;
  out["verified"] = r.pass;
  out["checks_performed"] = r.checks_performed;
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    py::dict fv;
    fv["k"] = v.k;
    fv["i"] = v.i;
    fv["j"] = v.j;
    fv["reason"] = v.reason;
    out["first_violation"] = fv;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Selection-function products and the finitary Ramsey realizer";

  // Translators run in reverse registration order: the base class must be
  // registered first so the derived translator gets the first match.
  py::register_exception<Error>(m, "RamselError");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  m.def("solve", &solve, py::arg("colouring"), py::arg("eta"),
        py::arg("budget") = Budget::kDefaultLimit,
        "Run the pipeline on a pair colouring and verify the witness.");
  m.def("verify", &verify_py, py::arg("colouring"), py::arg("x"),
        py::arg("f_table"), py::arg("eta"),
        "Re-check a witness (colour, F table) against a colouring.");
  m.def("prec", &prec_py, py::arg("colouring"), py::arg("j"), py::arg("i"),
        "Precedence relation induced by the colouring.");
  m.def("t_prime", &t_prime_py, py::arg("colouring"), py::arg("s"),
        py::arg("k"), "Bounded tree membership for a 0/1 prefix.");
  m.def("canonical_branch", &canonical_branch_py, py::arg("colouring"),
        py::arg("n"), "The length-n branch determined by precedence.");
  m.def("exact_beta", &exact_beta_py, py::arg("colouring"), py::arg("up_to"),
        py::arg("cap"), "Exhaustive monotone witness bounds beta(0..up_to).");
  m.def("optimal_play", &optimal_play_py, py::arg("rounds"),
        py::arg("selection"), py::arg("outcome_table"),
        "Optimal play of a finite Boolean game via the product of selections.");
  m.def("brute_force_play", &brute_force_play_py, py::arg("rounds"),
        py::arg("selection"), py::arg("outcome_table"),
        "Reference optimal play by exhaustive backward induction.");
}
