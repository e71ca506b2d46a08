#include <doctest.h>

#include <random>

#include "ramsel/games.hpp"
#include "ramsel/oracles.hpp"
#include "ramsel/selftest.hpp"

using namespace ramsel;

namespace {

Game<bool, Nat> two_round_argmax() {
  return table_game(2, {SelKind::kArgMax, SelKind::kArgMax}, {0, 1, 2, 3});
}

}  // namespace

TEST_CASE("optimal_play examples") {
  // Exhaustive maximum of q = 2 s0 + s1 over the 4 plays is <1,1>.
  CHECK(optimal_play(two_round_argmax()) == BoolPrefix{true, true});

  Game<bool, Nat> zeros;
  zeros.family = [](const BoolPrefix&) { return make_selection(SelKind::kConst0); };
  zeros.outcome = [](const BoolPrefix&) { return Nat{0}; };
  zeros.control = [](const BoolPrefix&) { return Nat{2}; };
  CHECK(optimal_play(zeros) == BoolPrefix{false, false, false});

  Game<bool, Nat> one;
  one.family = [](const BoolPrefix&) { return make_selection(SelKind::kConst1); };
  one.outcome = [](const BoolPrefix&) { return Nat{0}; };
  one.control = [](const BoolPrefix&) { return Nat{0}; };
  CHECK(optimal_play(one) == BoolPrefix{true});
}

TEST_CASE("is_relevant") {
  ControlFn<bool> omega0 = [](const BoolPrefix&) { return Nat{0}; };
  ControlFn<bool> omega5 = [](const BoolPrefix&) { return Nat{5}; };
  CHECK(is_relevant<bool>({}, omega0));
  CHECK_FALSE(is_relevant<bool>({false}, omega0));
  CHECK(is_relevant<bool>({false, true}, omega5));
}

TEST_CASE("verify_optimal_play") {
  Game<bool, Nat> g = two_round_argmax();
  CHECK(verify_optimal_play(g, optimal_play(g)).pass());

  // <0,1> is not optimal: the continuation value of 1 at the root is 3,
  // of 0 is 1, so the first move fails the move equation.
  PlayReport bad = verify_optimal_play(g, BoolPrefix{false, true});
  CHECK_FALSE(bad.pass());
  REQUIRE(!bad.checks.empty());
  CHECK(bad.checks[0].index == 0);
  CHECK_FALSE(bad.checks[0].move_ok);

  Game<bool, Nat> ones;
  ones.family = [](const BoolPrefix&) { return make_selection(SelKind::kConst1); };
  ones.outcome = [](const BoolPrefix& s) { return Nat(at(s, 0)); };
  ones.control = [](const BoolPrefix&) { return Nat{1}; };
  PlayReport consts = verify_optimal_play(ones, BoolPrefix{true, true});
  for (const auto& c : consts.checks) CHECK(c.move_ok);
}

TEST_CASE("optimal play always verifies on random games") {
  std::mt19937_64 rng(41);
  Budget budget;
  for (int trial = 0; trial < 60; ++trial) {
    Game<bool, Nat> g = random_game(1 + rng() % 4, 8, rng);
    BoolPrefix alpha = optimal_play(g, budget);
    CHECK(verify_optimal_play(g, alpha, budget).pass());
  }
}

TEST_CASE("optimal play equals backward induction") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    Nat rounds = 1 + rng() % 3;
    Game<bool, Nat> g = random_game(rounds, 4, rng);
    CHECK(optimal_play(g) == brute_force_play(g, rounds));
  }
}

TEST_CASE("brute force oracle examples and depth cap") {
  Game<bool, Nat> one;
  one.family = [](const BoolPrefix&) { return make_selection(SelKind::kConst1); };
  one.outcome = [](const BoolPrefix&) { return Nat{0}; };
  one.control = [](const BoolPrefix&) { return Nat{0}; };
  CHECK(brute_force_play(one, 1) == BoolPrefix{true});

  Game<bool, Nat> g = two_round_argmax();
  CHECK(brute_force_play(g, 2) == BoolPrefix{true, true});
  CHECK_THROWS_AS(brute_force_play(g, 21), DepthTooLarge);
}
