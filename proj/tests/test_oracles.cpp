#include <doctest.h>

#include "ramsel/oracles.hpp"
#include "ramsel/pipeline.hpp"

using namespace ramsel;

TEST_CASE("verify_ramsey_condition") {
  PairColouring zero = PairColouring::zero();
  PairColouring parity = PairColouring::parity();

  CHECK(verify_ramsey_condition(zero, false, {0},
                                CounterexampleSpec::constant(0))
            .pass);

  std::vector<Nat> ident{0, 1, 2, 3, 4, 5};
  CHECK(verify_ramsey_condition(zero, false, ident,
                                CounterexampleSpec::constant(5))
            .pass);

  VerificationReport bad = verify_ramsey_condition(
      parity, false, ident, CounterexampleSpec::constant(2));
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.first_violation.has_value());
  CHECK(bad.first_violation->k == 1);
  CHECK(bad.first_violation->i == 0);
  CHECK(bad.first_violation->j == 1);

  CHECK_THROWS_AS(verify_ramsey_condition(zero, false, {0},
                                          CounterexampleSpec::constant(3)),
                  TableTooShort);
}

TEST_CASE("canonical_branch") {
  RamseyContext zero(PairColouring::zero());
  CHECK(canonical_branch(zero, 0).empty());
  CHECK(canonical_branch(zero, 3) == BoolPrefix{false, false, false});
  for (Nat n = 0; n <= 20; ++n)
    CHECK(canonical_branch(zero, n) == BoolPrefix(n, false));

  RamseyContext parity(PairColouring::parity());
  CHECK(canonical_branch(parity, 3) == BoolPrefix{false, false, true});

  // The defining Lemma: the canonical branch always has witness n itself.
  for (Nat seed : {Nat{2}, Nat{8}, Nat{13}}) {
    RamseyContext ctx(PairColouring::seeded(seed));
    for (Nat n = 0; n <= 12; ++n)
      CHECK(ctx.t_prime(canonical_branch(ctx, n), n));
  }
}

TEST_CASE("exact_beta_oracle") {
  RamseyContext zero(PairColouring::zero());
  auto beta0 = exact_beta_oracle(zero, 12);
  CHECK(beta0[0] == 0);
  for (Nat n = 1; n <= 12; ++n) CHECK(beta0[n] == n);

  RamseyContext parity(PairColouring::parity());
  auto betap = exact_beta_oracle(parity, 4);
  // Length-2 branches are <0,1> (witness 2) and <0,0> (witness 3).
  CHECK(betap[2] == 3);

  // The output bounds every witnessed branch: T'(s, k) for any k implies
  // T'(s, beta(|s|)).
  for (Nat seed : {Nat{3}, Nat{11}}) {
    RamseyContext ctx(PairColouring::seeded(seed));
    auto beta = exact_beta_oracle(ctx, 6);
    for (Nat n = 0; n <= 6; ++n) {
      for (Nat bits = 0; bits < (Nat{1} << n); ++bits) {
        BoolPrefix s;
        for (Nat i = 0; i < n; ++i) s.push_back((bits >> i) & 1);
        if (ctx.t_prime(s, 40)) CHECK(ctx.t_prime(s, beta[n]));
      }
    }
  }
}

TEST_CASE("pipeline witnesses re-verify against tampered data") {
  RamseyWitness w =
      ramsey_pipeline(PairColouring::parity(), CounterexampleSpec::constant(2));
  REQUIRE(w.report.pass);
  CHECK(verify_ramsey_condition(PairColouring::parity(), w.colour, w.f_table,
                                CounterexampleSpec::constant(2))
            .pass);
  // Flipping the colour breaks verification whenever the table has at
  // least one strictly increasing pair (two colours cannot both fit it).
  bool has_pair = false;
  for (Nat i = 0; i <= 2; ++i)
    for (Nat j = 0; j <= 2; ++j)
      if (w.f_table[i] < w.f_table[j]) has_pair = true;
  if (has_pair)
    CHECK_FALSE(verify_ramsey_condition(PairColouring::parity(), !w.colour,
                                        w.f_table,
                                        CounterexampleSpec::constant(2))
                    .pass);
}
