#include "ramsel/oracles.hpp"

#include <algorithm>
#include <map>

namespace ramsel {

VerificationReport verify_ramsey_condition(const PairColouring& c, bool x,
                                           const std::vector<Nat>& f_table,
                                           const CounterexampleSpec& eta) {
  auto f = [&f_table](Nat i) -> Nat {
    if (i >= f_table.size())
      throw TableTooShort("F table read at index " + std::to_string(i) +
                          ", size " + std::to_string(f_table.size()));
    return f_table[static_cast<std::size_t>(i)];
  };
  VerificationReport report;
  Nat e = eta.eval(x, f);
  if (f_table.size() < e + 1)
    throw TableTooShort("F table covers " + std::to_string(f_table.size()) +
                        " indices, eta demands " + std::to_string(e + 1));
  for (Nat k = 0; k <= e; ++k) {
    ++report.checks_performed;
    if (f(k) < k) {
      report.pass = false;
      report.first_violation = {k, k, k, "F(k) < k"};
      return report;
    }
    for (Nat i = 0; i <= k; ++i) {
      for (Nat j = 0; j <= k; ++j) {
        if (i == j) continue;
        ++report.checks_performed;
        if (f(i) < f(j) && c(f(i), f(j)) != x) {
          report.pass = false;
          report.first_violation = {k, i, j, "pair colour differs from x"};
          return report;
        }
      }
    }
  }
  return report;
}

BoolPrefix canonical_branch(RamseyContext& ctx, Nat n) {
  BoolPrefix s;
  for (Nat i = 0; i < n; ++i) s.push_back(!ctx.prec(i, n));
  return s;
}

std::vector<Nat> exact_beta_oracle(RamseyContext& ctx, Nat n_max, Nat cap) {
  std::vector<Nat> beta;
  beta.push_back(0);
  for (Nat n = 1; n <= n_max; ++n) {
    if (cap < 2 * n)
      throw CapInsufficient("cap " + std::to_string(cap) +
                            " too small for branch length " +
                            std::to_string(n));
    std::map<BoolPrefix, Nat> found;  // branch restriction -> minimal witness
    for (Nat node = n; node <= cap; ++node) {
      ctx.budget().charge();
      BoolPrefix s;
      for (Nat i = 0; i < n; ++i) s.push_back(!ctx.prec(i, node));
      found.emplace(std::move(s), node);
    }
    Nat worst = 0;
    for (const auto& [s, witness] : found) worst = std::max(worst, witness);
    // Branches are exactly the predecessor restrictions of nodes, so the
    // enumeration above is complete for witnesses <= cap. A minimal witness
    // in the upper half of the range means the restriction set was still
    // growing and a branch may be hiding beyond the cap: inconclusive.
    if (2 * worst > cap)
      throw CapInsufficient("a length-" + std::to_string(n) +
                            " branch first appears at " +
                            std::to_string(worst) + "; cap " +
                            std::to_string(cap) + " leaves no margin");
    beta.push_back(worst);
  }
  return beta;
}

BoolPrefix brute_force_play(const Game<bool, Nat>& g, Nat depth) {
  if (depth > 20)
    throw DepthTooLarge("brute force limited to depth 20, got " +
                        std::to_string(depth));
  std::map<BoolPrefix, Nat> table;
  std::function<Nat(const BoolPrefix&)> value =
      [&](const BoolPrefix& s) -> Nat {
    if (s.size() == depth) return g.outcome(s);
    auto it = table.find(s);
    if (it != table.end()) return it->second;
    bool move = g.family(s)([&](const bool& x) { return value(append(s, x)); });
    Nat v = value(append(s, move));
    table.emplace(s, v);
    return v;
  };
  BoolPrefix play;
  while (play.size() < depth) {
    bool move =
        g.family(play)([&](const bool& x) { return value(append(play, x)); });
    play.push_back(move);
  }
  return play;
}

}  // namespace ramsel
