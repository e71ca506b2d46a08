#include "ramsel/report.hpp"

#include <sstream>
#include <vector>

namespace ramsel {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

Nat parse_nat(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("bad " + what + ": '" + s + "'");
  }
}

}  // namespace

PairColouring parse_colouring_spec(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "formula") {
    if (parts[1] == "zero") return PairColouring::zero();
    if (parts[1] == "parity") return PairColouring::parity();
    throw Error("unknown colouring formula: '" + parts[1] + "'");
  }
  if (parts.size() == 2 && parts[0] == "seed")
    return PairColouring::seeded(parse_nat(parts[1], "colouring seed"));
  if (parts.size() == 2 && parts[0] == "matrix")
    return PairColouring::from_matrix_file(parts[1]);
  throw Error("bad colouring spec: '" + spec +
              "' (expected formula:zero, formula:parity, seed:<u64> or "
              "matrix:<path>)");
}

CounterexampleSpec parse_eta_spec(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "const")
    return CounterexampleSpec::constant(parse_nat(parts[1], "eta const"));
  if (parts.size() == 3 && parts[0] == "xswitch")
    return CounterexampleSpec::xswitch(parse_nat(parts[1], "eta k0"),
                                       parse_nat(parts[2], "eta k1"));
  if (parts.size() == 3 && parts[0] == "fmax")
    return CounterexampleSpec::fmax(parse_nat(parts[1], "eta m"),
                                    parse_nat(parts[2], "eta cap"));
  throw Error("bad eta spec: '" + spec +
              "' (expected const:<k>, xswitch:<k0>:<k1> or fmax:<m>:<cap>)");
}

nlohmann::ordered_json witness_report(const RunConfig& config,
                                      const RamseyWitness& witness) {
  nlohmann::ordered_json j;
  j["colouring"] = config.colouring_spec;
  j["eta"] = config.eta_spec;
  j["budget"] = config.budget;
  j["x"] = witness.colour ? 1 : 0;
  j["F"] = witness.f_table;
  j["eta_value"] = witness.eta_value;
  j["verified"] = witness.report.pass;
  if (witness.report.first_violation) {
    const auto& v = *witness.report.first_violation;
    j["first_violation"] = {
        {"k", v.k}, {"i", v.i}, {"j", v.j}, {"reason", v.reason}};
  }
  j["any_fallback"] = witness.any_fallback;
  j["counters"] = {{"eps_calls", witness.counters.eps_calls},
                   {"depth_evals", witness.counters.depth_evals},
                   {"prec_memo", witness.counters.prec_memo},
                   {"budget_used", witness.counters.budget_used}};
  return j;
}

StoredWitness witness_from_json(const nlohmann::json& j) {
  StoredWitness w;
  try {
    w.colouring_spec = j.at("colouring").get<std::string>();
    w.eta_spec = j.at("eta").get<std::string>();
    w.colour = j.at("x").get<int>() != 0;
    w.f_table = j.at("F").get<std::vector<Nat>>();
    w.eta_value = j.at("eta_value").get<Nat>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad witness file: ") + e.what());
  }
  return w;
}

}  // namespace ramsel
