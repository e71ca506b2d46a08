#pragma once

#include <string>

#include <json.hpp>

#include "ramsel/pipeline.hpp"

namespace ramsel {

struct RunConfig {
  std::string colouring_spec = "formula:zero";
  std::string eta_spec = "const:0";
  Nat budget = Budget::kDefaultLimit;
  std::string format = "text";  // text | json
};

// Colouring specs: formula:zero, formula:parity, seed:<u64>, matrix:<path>.
PairColouring parse_colouring_spec(const std::string& spec);

// Eta specs: const:<k>, xswitch:<k0>:<k1>, fmax:<m>:<cap>.
CounterexampleSpec parse_eta_spec(const std::string& spec);

// The structured report doubles as the witness file format. It is fully
// deterministic: no timing or host data, all randomness flows from the
// colouring seed.
nlohmann::ordered_json witness_report(const RunConfig& config,
                                      const RamseyWitness& witness);

struct StoredWitness {
  std::string colouring_spec;
  std::string eta_spec;
  bool colour = false;
  std::vector<Nat> f_table;
  Nat eta_value = 0;
};

StoredWitness witness_from_json(const nlohmann::json& j);

}  // namespace ramsel
