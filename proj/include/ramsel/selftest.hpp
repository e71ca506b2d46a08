#pragma once

#include <iosfwd>
#include <random>
#include <vector>

#include "ramsel/games.hpp"

namespace ramsel {

enum class SelKind { kArgMax, kArgMin, kConst0, kConst1 };

SelectionFn<bool, Nat> make_selection(SelKind kind);

// Boolean game with constant control rounds-1 and an outcome read from a
// table indexed by the first `rounds` moves (first move is the high bit).
// kinds[d] picks the selection used at positions of length d.
Game<bool, Nat> table_game(Nat rounds, std::vector<SelKind> kinds,
                           std::vector<Nat> table);

Game<bool, Nat> random_game(Nat rounds, Nat value_cap, std::mt19937_64& rng);

// Condensed oracle-equivalence and invariant suites with fixed seeds.
// Returns the number of failed checks.
int run_selftest(std::ostream& out);

}  // namespace ramsel
