#include "ramsel/selftest.hpp"

#include <ostream>

#include "ramsel/oracles.hpp"
#include "ramsel/pipeline.hpp"

namespace ramsel {

SelectionFn<bool, Nat> make_selection(SelKind kind) {
  switch (kind) {
    case SelKind::kArgMax:
      return [](const Evaluator<bool, Nat>& p) { return p(true) > p(false); };
    case SelKind::kArgMin:
      return [](const Evaluator<bool, Nat>& p) { return p(true) < p(false); };
    case SelKind::kConst0:
      return [](const Evaluator<bool, Nat>&) { return false; };
    case SelKind::kConst1:
      return [](const Evaluator<bool, Nat>&) { return true; };
  }
  return [](const Evaluator<bool, Nat>&) { return false; };
}

Game<bool, Nat> table_game(Nat rounds, std::vector<SelKind> kinds,
                           std::vector<Nat> table) {
  Game<bool, Nat> g;
  g.family = [kinds](const BoolPrefix& s) -> SelectionFn<bool, Nat> {
    std::size_t d = std::min(s.size(), kinds.size() - 1);
    return make_selection(kinds[d]);
  };
  g.outcome = [table = std::move(table), rounds](const BoolPrefix& alpha) {
    Nat index = 0;
    for (Nat r = 0; r < rounds; ++r)
      index = (index << 1) | (at(alpha, r) ? 1 : 0);
    return table[static_cast<std::size_t>(index)];
  };
  g.control = [rounds](const BoolPrefix&) { return rounds - 1; };
  return g;
}

Game<bool, Nat> random_game(Nat rounds, Nat value_cap, std::mt19937_64& rng) {
  std::vector<SelKind> kinds;
  for (Nat d = 0; d < rounds; ++d)
    kinds.push_back(static_cast<SelKind>(rng() % 4));
  std::vector<Nat> table;
  for (Nat i = 0; i < (Nat{1} << rounds); ++i)
    table.push_back(rng() % (value_cap + 1));
  return table_game(rounds, std::move(kinds), std::move(table));
}

namespace {

bool check_main_lemma(const Game<bool, Nat>& g) {
  BoolPrefix alpha = optimal_play(g);
  for (Nat n = 0; n <= alpha.size(); ++n) {
    BoolPrefix head = take(alpha, n);
    OutcomeFn<bool, Nat> shifted = [&g, head](const BoolPrefix& tail) {
      return g.outcome(concat(head, tail));
    };
    BoolPrefix rest = eps<bool, Nat>(head, g.family, g.control, shifted);
    if (concat(head, rest) != alpha) return false;
  }
  return true;
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto record = [&](const char* name, bool ok) {
    out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  {
    std::mt19937_64 rng(1);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      Nat rounds = 1 + rng() % 3;
      Game<bool, Nat> g = random_game(rounds, 7, rng);
      ok = (optimal_play(g) == brute_force_play(g, rounds));
    }
    record("optimal_play matches backward induction (100 games)", ok);
  }

  {
    std::mt19937_64 rng(2);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      Game<bool, Nat> g = random_game(1 + rng() % 4, 7, rng);
      ok = verify_optimal_play(g, optimal_play(g)).pass();
    }
    record("optimality equations on random games (50 games)", ok);
  }

  {
    std::mt19937_64 rng(3);
    bool ok = true;
    for (int trial = 0; trial < 30 && ok; ++trial)
      ok = check_main_lemma(random_game(1 + rng() % 3, 7, rng));
    record("suffix identity of eps extensions (30 games)", ok);
  }

  {
    bool ok = true;
    for (Nat seed = 1; seed <= 5 && ok; ++seed) {
      RamseyContext ctx(PairColouring::seeded(seed));
      std::mt19937_64 rng(seed);
      for (int trial = 0; trial < 200 && ok; ++trial) {
        Nat ls = rng() % 5;
        Nat lt = rng() % 4;
        BoolPrefix s, t;
        for (Nat i = 0; i < ls; ++i) s.push_back(rng() % 2 == 0);
        for (Nat i = 0; i < lt; ++i) t.push_back(rng() % 2 == 0);
        Nat k = rng() % 21;
        Nat l = rng() % 10;
        if (ctx.t_prime(concat(s, t), k) && !ctx.t_prime(s, k)) ok = false;
        if (ctx.t_prime(s, k) && !ctx.t_prime(s, k + l)) ok = false;
      }
    }
    record("tree laws M1/M2 on seeded colourings", ok);
  }

  {
    bool ok = true;
    for (Nat seed = 1; seed <= 5 && ok; ++seed) {
      RamseyContext ctx(PairColouring::seeded(seed));
      for (Nat n = 0; n <= 8 && ok; ++n) {
        BoolPrefix s = canonical_branch(ctx, n);
        ok = ctx.t_prime(s, n);
      }
    }
    record("canonical branches lie in the tree", ok);
  }

  {
    std::mt19937_64 rng(4);
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      RamseyContext ctx(PairColouring::seeded(rng() % 1000));
      Nat n = rng() % 4;
      Nat add = rng() % 5;
      Evaluator<Nat, Nat> p = [add](const Nat& v) { return v + add; };
      Nat d = delta_sel(ctx, n, p);
      for (Nat bits = 0; bits < (Nat{1} << n) && ok; ++bits) {
        BoolPrefix s;
        for (Nat i = 0; i < n; ++i) s.push_back(((bits >> i) & 1) != 0);
        if (ctx.t_prime(s, p(d)) && !ctx.t_prime(s, d)) ok = false;
      }
    }
    record("delta selections add no new branches", ok);
  }

  {
    std::mt19937_64 rng(5);
    bool ok = true;
    for (int trial = 0; trial < 30 && ok; ++trial) {
      Nat rounds = 1 + rng() % 3;
      Game<bool, Nat> g = random_game(rounds, 7, rng);
      std::vector<SelectionFn<bool, Nat>> sels;
      for (Nat d = 0; d < rounds; ++d) {
        BoolPrefix probe;  // kinds depend only on length here
        for (Nat i = 0; i < d; ++i) probe.push_back(false);
        sels.push_back(g.family(probe));
      }
      ok = (finite_product(sels, g.outcome) == optimal_play(g));
    }
    record("finite product agrees with controlled product", ok);
  }

  return failures;
}

}  // namespace ramsel
