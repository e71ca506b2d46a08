#include "ramsel/ramsey.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "ramsel/games.hpp"

namespace ramsel {

BetaFn beta_from_prefix(NatPrefix beta) {
  return [beta = std::move(beta)](Nat n) { return at(beta, n); };
}

BetaFn beta_from_table(std::vector<Nat> table) {
  return [table = std::move(table)](Nat n) {
    if (n >= table.size())
      throw TableTooShort("beta table read at index " + std::to_string(n) +
                          ", size " + std::to_string(table.size()));
    return table[static_cast<std::size_t>(n)];
  };
}

RamseyContext::RamseyContext(PairColouring colouring, Budget budget)
    : colouring_(std::move(colouring)), budget_(budget) {}

bool RamseyContext::prec(Nat j, Nat i) {
  if (j == 0) return true;
  auto key = std::make_pair(j, i);
  auto it = prec_memo_.find(key);
  if (it != prec_memo_.end()) return it->second;
  budget_.charge();
  bool result = true;
  for (Nat k = 0; k < j; ++k) {
    if (prec(k, j) && colouring_(k, i) != colouring_(k, j)) {
      result = false;
      break;
    }
  }
  prec_memo_.emplace(key, result);
  counters_.prec_memo = prec_memo_.size();
  return result;
}

bool RamseyContext::branch_matches(const BoolPrefix& s, Nat node) {
  for (Nat i = 0; i < s.size(); ++i) {
    bool in_branch = !at(s, i);
    if (in_branch != prec(i, node)) return false;
  }
  return true;
}

bool RamseyContext::t_prime(const BoolPrefix& s, Nat k) {
  auto key = std::make_pair(s, k);
  auto it = tprime_memo_.find(key);
  if (it != tprime_memo_.end()) return it->second;
  bool result = false;
  for (Nat node = s.size(); node <= k; ++node) {
    budget_.charge();
    if (branch_matches(s, node)) {
      result = true;
      break;
    }
  }
  tprime_memo_.emplace(key, result);
  return result;
}

bool RamseyContext::t_beta(const BoolPrefix& s, const BetaFn& beta) {
  return t_prime(s, beta(s.size()));
}

bool RamseyContext::depth_dfs(BoolPrefix& stem, Nat remaining, Nat bound) {
  budget_.charge();
  if (!t_prime(stem, bound)) return false;  // sound by prefix closure
  if (remaining == 0) return true;
  for (bool move : {false, true}) {
    stem.push_back(move);
    bool found = depth_dfs(stem, remaining - 1, bound);
    stem.pop_back();
    if (found) return true;
  }
  return false;
}

bool RamseyContext::depth(const BetaFn& beta, const BoolPrefix& s, Nat n) {
  ++counters_.depth_evals;
  if (n > kMaxDepth)
    throw BudgetExceeded("depth search at n = " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(kMaxDepth));
  Nat bound = beta(s.size() + n);
  auto key = std::make_tuple(bound, n, s);
  auto it = depth_memo_.find(key);
  if (it != depth_memo_.end()) return it->second;
  BoolPrefix stem = s;
  bool result = depth_dfs(stem, n, bound);
  depth_memo_.emplace(std::move(key), result);
  return result;
}

bool RamseyContext::gained_dfs(BoolPrefix& stem, Nat remaining, Nat lo,
                               Nat hi) {
  budget_.charge();
  if (!t_prime(stem, hi)) return false;
  if (remaining == 0) return !t_prime(stem, lo);
  for (bool move : {false, true}) {
    stem.push_back(move);
    bool found = gained_dfs(stem, remaining - 1, lo, hi);
    stem.pop_back();
    if (found) return true;
  }
  return false;
}

bool RamseyContext::gained_branch(Nat n, Nat lo, Nat hi) {
  auto key = std::make_tuple(n, lo, hi);
  auto it = gain_memo_.find(key);
  if (it != gain_memo_.end()) return it->second;
  BoolPrefix stem;
  bool result = gained_dfs(stem, n, lo, hi);
  gain_memo_.emplace(key, result);
  return result;
}

bool epsilon_wkl(RamseyContext& ctx, const BetaFn& beta, const BoolPrefix& s,
                 const Evaluator<bool, Nat>& p) {
  Nat d = p(false);
  if (!ctx.depth(beta, s, d + 1)) return false;
  return !ctx.depth(beta, append(s, false), d);
}

Nat q_control(RamseyContext& ctx, const BetaFn& beta,
              const ControlFn<bool>& omega, const BoolPrefix& alpha) {
  Nat limit = omega(alpha);
  for (Nat k = 0; k < limit; ++k) {
    bool have = ctx.depth(beta, take(alpha, k), limit - k);
    if (!have) continue;
    bool keep = ctx.depth(beta, take(alpha, k + 1), limit - k - 1);
    if (!keep) return limit - k - 1;
  }
  return 0;
}

Game<bool, Nat> wkl_game(RamseyContext& ctx, const BetaFn& beta,
                         const ControlFn<bool>& omega) {
  Game<bool, Nat> g;
  g.family = [&ctx, beta](const BoolPrefix& s) -> SelectionFn<bool, Nat> {
    return [&ctx, beta, s](const Evaluator<bool, Nat>& p) {
      return epsilon_wkl(ctx, beta, s, p);
    };
  };
  g.outcome = [&ctx, beta, omega](const BoolPrefix& alpha) {
    return q_control(ctx, beta, omega, alpha);
  };
  g.control = omega;
  return g;
}

BoolPrefix build_alpha(RamseyContext& ctx, const BetaFn& beta,
                       const ControlFn<bool>& omega) {
  Game<bool, Nat> g = wkl_game(ctx, beta, omega);
  return eps<bool, Nat>({}, g.family, g.control, g.outcome, ctx.budget(),
                        &ctx.counters());
}

std::pair<Nat, Nat> skolem_bounds(const BetaFn& beta, Nat omega_val, Nat q_val,
                                  Nat p0, Nat p1) {
  Nat gap = static_cast<Nat>(
      std::llabs(static_cast<long long>(omega_val) -
                 static_cast<long long>(q_val) - 1));
  Nat n = std::max(omega_val, gap + std::max(p0, p1) + 1);
  Nat k = omega_val;
  for (Nat i = 0; i <= n; ++i) k = std::max(k, beta(i));
  return {n, k};
}

Nat delta_sel(RamseyContext& ctx, Nat n, const Evaluator<Nat, Nat>& p) {
  if (n > RamseyContext::kMaxDepth)
    throw BudgetExceeded("delta_sel at n = " + std::to_string(n) +
                         " exceeds the cap of " +
                         std::to_string(RamseyContext::kMaxDepth));
  Nat limit = Nat{1} << n;
  Nat current = 0;  // p^i(0)
  for (Nat i = 0; i <= limit; ++i) {
    Nat next = p(current);
    if (!ctx.gained_branch(n, current, next)) return current;
    current = next;
  }
  throw InternalInvariantViolation(
      "delta_sel: no qualifying iterate within 2^n; T' monotonicity broken");
}

Nat RamseyContext::min_equivalent(Nat n, Nat w) {
  if (w < n) return 0;  // T'(s, w) is false for every s of length n
  auto key = std::make_pair(n, w);
  auto it = min_equiv_memo_.find(key);
  if (it != min_equiv_memo_.end()) return it->second;
  Nat v = 0;
  for (Nat node = n; node <= w; ++node) {
    budget_.charge();
    Nat first = node;
    for (Nat prior = n; prior < node; ++prior) {
      bool same = true;
      for (Nat i = 0; i < n && same; ++i) same = prec(i, prior) == prec(i, node);
      if (same) {
        first = prior;
        break;
      }
    }
    v = std::max(v, first);
  }
  min_equiv_memo_.emplace(key, v);
  return v;
}

Nat delta_sel_minimal(RamseyContext& ctx, Nat n,
                      const Evaluator<Nat, Nat>& p) {
  if (n > RamseyContext::kMaxDepth)
    throw BudgetExceeded("delta_sel at n = " + std::to_string(n) +
                         " exceeds the cap of " +
                         std::to_string(RamseyContext::kMaxDepth));
  Nat limit = Nat{1} << n;
  Nat current = 0;
  for (Nat i = 0; i <= limit; ++i) {
    Nat next = p(current);
    if (!ctx.gained_branch(n, current, next)) return current;
    current = ctx.min_equivalent(n, next);
  }
  throw InternalInvariantViolation(
      "delta_sel_minimal: no qualifying iterate within 2^n; T' monotonicity "
      "broken");
}

BetaResult build_beta(RamseyContext& ctx, const OmegaFn& omega) {
  auto cache = std::make_shared<std::map<NatPrefix, std::pair<Nat, Nat>>>();
  auto bounds = [&ctx, omega, cache](const NatPrefix& b) {
    auto it = cache->find(b);
    if (it != cache->end()) return it->second;
    BetaFn beta = beta_from_prefix(b);
    auto omega_memo = std::make_shared<std::map<BoolPrefix, Nat>>();
    ControlFn<bool> omega_alpha = [omega, beta,
                                   omega_memo](const BoolPrefix& alpha) {
      auto hit = omega_memo->find(alpha);
      if (hit != omega_memo->end()) return hit->second;
      Nat v = omega(alpha, beta);
      omega_memo->emplace(alpha, v);
      return v;
    };
    Game<bool, Nat> g = wkl_game(ctx, beta, omega_alpha);
    // One solver serves the play and both continuation values, sharing its
    // extension table across all three.
    EpsSolver<bool, Nat> solver(g.family, g.control, g.outcome, ctx.budget(),
                                &ctx.counters());
    BoolPrefix alpha = solver.solve({});
    Nat limit = omega_alpha(alpha);
    Nat q_val = q_control(ctx, beta, omega_alpha, alpha);
    // |omega - q - 1| is a bound when negative, but a prefix length only
    // when nonnegative.
    Nat s_len = limit >= q_val + 1 ? limit - q_val - 1 : 0;
    BoolPrefix s = take(alpha, s_len);
    Nat p0 = solver.value_from_root(append(s, false));
    Nat p1 = solver.value_from_root(append(s, true));
    auto result = skolem_bounds(beta, limit, q_val, p0, p1);
    cache->emplace(b, result);
    return result;
  };

  SelectionFamily<Nat, Nat> family =
      [&ctx](const NatPrefix& b) -> SelectionFn<Nat, Nat> {
    Nat n = b.size();
    return [&ctx, n](const Evaluator<Nat, Nat>& p) {
      return delta_sel_minimal(ctx, n, p);
    };
  };
  ControlFn<Nat> control = [bounds](const NatPrefix& b) {
    return bounds(b).first;
  };
  OutcomeFn<Nat, Nat> outcome = [bounds](const NatPrefix& b) {
    return bounds(b).second;
  };

  BetaResult result;
  result.beta = eps<Nat, Nat>({}, family, control, outcome, ctx.budget(),
                              &ctx.counters());
  auto final_bounds = bounds(result.beta);
  result.omega_tilde = final_bounds.first;
  result.q_tilde = final_bounds.second;
  return result;
}

namespace {

Nat a_value(RamseyContext& ctx, const BoolPrefix& alpha, const BetaFn& beta,
            Nat n, bool* fell_back) {
  if (fell_back) *fell_back = false;
  if (n == 0) return 0;
  Nat hi = beta(beta(n) + 1);
  for (Nat k = n; k <= hi; ++k) {
    ctx.budget().charge();
    if (!at(alpha, k)) return k;
  }
  if (fell_back) *fell_back = true;
  return hi;
}

}  // namespace

bool ATable::any_fallback() const {
  for (bool f : fallback)
    if (f) return true;
  return false;
}

ATable build_a(RamseyContext& ctx, const BoolPrefix& alpha, const BetaFn& beta,
               Nat n_max) {
  ATable table;
  for (Nat n = 0; n <= n_max; ++n) {
    bool fell_back = false;
    table.values.push_back(a_value(ctx, alpha, beta, n, &fell_back));
    table.fallback.push_back(fell_back);
  }
  return table;
}

IphpResult iphp_realizer(const UnaryColouring& c1, const NatSelection& eps0,
                         const NatSelection& eps1) {
  // mu-refinement: the least i <= eps_x(p) whose outcome is a counterexample
  // to the pigeonhole condition at colour x; eps_x(p) itself when none is.
  auto refine = [c1](bool x, const NatSelection& e) -> NatSelection {
    return [c1, x, e](const Evaluator<Nat, Nat>& p) {
      Nat bound = e(p);
      for (Nat i = 0; i <= bound; ++i) {
        if (!(p(i) >= i && c1(p(i)) == x)) return i;
      }
      return bound;
    };
  };
  NatSelection tilde0 = refine(false, eps0);
  NatSelection tilde1 = refine(true, eps1);

  auto [k0, k1] = binary_product<Nat, Nat, Nat>(
      tilde0, [tilde1](const Nat&) { return tilde1; },
      [](const Nat& a, const Nat& b) { return std::max(a, b); });

  IphpResult result;
  Nat top = std::max(k0, k1);
  result.colour = c1(top);
  if (!result.colour) {
    result.p = [tilde1](Nat k) {
      Nat second = tilde1([k](const Nat& k2) { return std::max(k, k2); });
      return std::max(k, second);
    };
  } else {
    result.p = [k0](Nat k) { return std::max(k0, k); };
  }
  result.eps_value = (result.colour ? eps1 : eps0)(result.p);
  return result;
}

Nat psi(const PairColouring& c, const std::function<Nat(Nat)>& a,
        const CounterexampleSpec& eta) {
  UnaryColouring ca = [&c, a](Nat i) { return c(a(i), a(i + 1)); };
  auto eps_for = [a, eta](bool x) -> NatSelection {
    return [a, eta, x](const Evaluator<Nat, Nat>& p) {
      return eta.eval(x, [&](Nat i) { return a(p(i)); });
    };
  };
  IphpResult r = iphp_realizer(ca, eps_for(false), eps_for(true));
  Nat e = eta.eval(r.colour, [&](Nat i) { return a(r.p(i)); });
  Nat bound = r.p(e);
  Nat best = 0;
  for (Nat i = 0; i <= bound; ++i) best = std::max(best, r.p(i));
  return best;
}

OmegaFn omega_control(RamseyContext& ctx, const CounterexampleSpec& eta) {
  RamseyContext* ctx_ptr = &ctx;
  return [ctx_ptr, eta](const BoolPrefix& alpha, const BetaFn& beta) -> Nat {
    auto memo = std::make_shared<std::vector<Nat>>();
    std::function<Nat(Nat)> a = [ctx_ptr, alpha, beta, memo](Nat n) {
      while (memo->size() <= n)
        memo->push_back(
            a_value(*ctx_ptr, alpha, beta, memo->size(), nullptr));
      return (*memo)[static_cast<std::size_t>(n)];
    };
    Nat psi_val = psi(ctx_ptr->colouring(), a, eta);
    Nat best = 0;
    for (Nat i = 0; i <= psi_val; ++i) {
      Nat reach = std::max({i, beta(i) + 1, beta(beta(i) + 1) + 1});
      best = std::max(best, reach);
    }
    return best;
  };
}

}  // namespace ramsel
