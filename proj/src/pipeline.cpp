#include "ramsel/pipeline.hpp"

#include <algorithm>
#include <memory>

namespace ramsel {

RamseyWitness ramsey_pipeline(const PairColouring& c,
                              const CounterexampleSpec& eta, Budget budget) {
  RamseyContext ctx(c, budget);

  OmegaFn omega = omega_control(ctx, eta);
  BetaResult beta_result = build_beta(ctx, omega);
  BetaFn beta = beta_from_prefix(beta_result.beta);
  auto omega_memo = std::make_shared<std::map<BoolPrefix, Nat>>();
  ControlFn<bool> omega_alpha = [&omega, &beta,
                                 omega_memo](const BoolPrefix& alpha) {
    auto hit = omega_memo->find(alpha);
    if (hit != omega_memo->end()) return hit->second;
    Nat v = omega(alpha, beta);
    omega_memo->emplace(alpha, v);
    return v;
  };
  BoolPrefix alpha = build_alpha(ctx, beta, omega_alpha);

  // a extends on demand; every index the witness touches is recorded.
  auto values = std::make_shared<std::vector<Nat>>();
  auto flags = std::make_shared<std::vector<bool>>();
  ATable seed = build_a(ctx, alpha, beta, 0);
  *values = seed.values;
  *flags = seed.fallback;
  std::function<Nat(Nat)> a = [&ctx, alpha, beta, values, flags](Nat n) {
    while (values->size() <= n) {
      ATable more = build_a(ctx, alpha, beta, values->size());
      values->push_back(more.values.back());
      flags->push_back(more.fallback.back());
    }
    return (*values)[static_cast<std::size_t>(n)];
  };

  UnaryColouring ca = [&c, a](Nat i) { return c(a(i), a(i + 1)); };
  auto eps_for = [&a, &eta](bool x) -> NatSelection {
    return [&a, &eta, x](const Evaluator<Nat, Nat>& p) {
      return eta.eval(x, [&](Nat i) { return a(p(i)); });
    };
  };
  IphpResult iphp = iphp_realizer(ca, eps_for(false), eps_for(true));

  RamseyWitness witness;
  witness.colour = iphp.colour;
  witness.eta_value = eta.eval(iphp.colour, [&](Nat i) { return a(iphp.p(i)); });
  Nat table_len = std::max<Nat>(witness.eta_value + 1, eta.table_demand());
  for (Nat k = 0; k < table_len; ++k) witness.f_table.push_back(a(iphp.p(k)));

  witness.report = verify_ramsey_condition(c, witness.colour, witness.f_table, eta);
  witness.any_fallback =
      std::find(flags->begin(), flags->end(), true) != flags->end();

  witness.counters = ctx.counters();
  witness.counters.prec_memo = ctx.prec_memo_size();
  witness.counters.budget_used = ctx.budget().used();
  return witness;
}

}  // namespace ramsel
