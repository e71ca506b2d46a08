#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsel/games.hpp"
#include "ramsel/ramsey.hpp"

namespace ramsel {

struct Violation {
  Nat k = 0;
  Nat i = 0;
  Nat j = 0;
  std::string reason;
};

struct VerificationReport {
  bool pass = true;
  std::optional<Violation> first_violation;
  Nat checks_performed = 0;
};

// Direct check of the finitary Ramsey condition: for all k <= eta_x(F),
// F(k) >= k and all pairs i, j <= k with F(i) < F(j) have colour x.
VerificationReport verify_ramsey_condition(const PairColouring& c, bool x,
                                           const std::vector<Nat>& f_table,
                                           const CounterexampleSpec& eta);

// The length-n branch s with s_i = 0 iff i `prec` n; always in T'(., n).
BoolPrefix canonical_branch(RamseyContext& ctx, Nat n);

// beta(n) = max over length-n branches of the minimal T' witness, searching
// witnesses up to cap. A candidate that looks like a branch (its zero set is
// a downward-closed precedence chain) but has no witness <= cap is a hard
// error; the oracle never silently truncates.
std::vector<Nat> exact_beta_oracle(RamseyContext& ctx, Nat n_max,
                                   Nat cap = 1000);

// Full backward induction over the 2^depth play tree of a Boolean game with
// constant control depth-1: each selection sees the exact continuation-value
// table.
BoolPrefix brute_force_play(const Game<bool, Nat>& g, Nat depth);

}  // namespace ramsel
