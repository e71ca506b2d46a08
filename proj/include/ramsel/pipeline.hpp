#pragma once

#include <vector>

#include "ramsel/oracles.hpp"
#include "ramsel/ramsey.hpp"

namespace ramsel {

struct RamseyWitness {
  bool colour = false;        // x
  std::vector<Nat> f_table;   // F(0) .. F(max(eta_value, demand))
  Nat eta_value = 0;          // eta_x(F)
  VerificationReport report;
  Counters counters;
  bool any_fallback = false;  // some a(n) search found no zero of alpha
};

// The full realizer: build beta against the eta-derived control, then alpha,
// then the min-monochromatic sequence a, then x and F via the pigeonhole
// realizer, and finally verify the finitary Ramsey condition.
RamseyWitness ramsey_pipeline(const PairColouring& c,
                              const CounterexampleSpec& eta,
                              Budget budget = Budget());

}  // namespace ramsel
