#pragma once

#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ramsel/budget.hpp"
#include "ramsel/colouring.hpp"
#include "ramsel/eta.hpp"
#include "ramsel/games.hpp"
#include "ramsel/selection.hpp"

namespace ramsel {

using BetaFn = std::function<Nat(Nat)>;

// Default-extends a finite prefix with zeros.
BetaFn beta_from_prefix(NatPrefix beta);
// Reading past the table is an error (oracle tables must not be guessed).
BetaFn beta_from_table(std::vector<Nat> table);

// Two-argument control functional omega(alpha, beta).
using OmegaFn = std::function<Nat(const BoolPrefix&, const BetaFn&)>;

// Per-run state for the Ramsey realizer: the colouring, the work budget,
// counters, and the memo tables for the precedence order and the branch
// predicate. Each run owns its own context; contexts are never shared.
class RamseyContext {
 public:
  explicit RamseyContext(PairColouring colouring, Budget budget = Budget());

  // Depth searches enumerate 2^n extensions; beyond this they error out.
  static constexpr Nat kMaxDepth = 24;

  const PairColouring& colouring() const { return colouring_; }
  Budget& budget() { return budget_; }
  Counters& counters() { return counters_; }

  // The Erdos/Rado precedence: j `prec` i (for j < i) iff every predecessor
  // k of j satisfies c(k, i) = c(k, j).
  bool prec(Nat j, Nat i);

  // T'(s, k): some k' in [|s|, k] has s as the characteristic function of
  // its set of predecessors below |s|.
  bool t_prime(const BoolPrefix& s, Nat k);

  // T^beta(s) = T'(s, beta(|s|)).
  bool t_beta(const BoolPrefix& s, const BetaFn& beta);

  // Depth_n(T^beta_s): some Boolean extension t of length n satisfies
  // T'(s*t, beta(|s|+n)). DFS pruned by T' prefix closure; memoized by
  // (bound, n, s), so the Skolem function only enters through its value.
  bool depth(const BetaFn& beta, const BoolPrefix& s, Nat n);

  // Some s of length n has T'(s, hi) but not T'(s, lo); memoized.
  bool gained_branch(Nat n, Nat lo, Nat hi);

  // Least v <= w such that T'(s, w) -> T'(s, v) for every s of length n,
  // i.e. the smallest bound covering the same length-n witnesses as w.
  Nat min_equivalent(Nat n, Nat w);

  std::size_t prec_memo_size() const { return prec_memo_.size(); }

 private:
  bool branch_matches(const BoolPrefix& s, Nat node);
  bool depth_dfs(BoolPrefix& stem, Nat remaining, Nat bound);
  bool gained_dfs(BoolPrefix& stem, Nat remaining, Nat lo, Nat hi);

  PairColouring colouring_;
  Budget budget_;
  Counters counters_;

  struct PairHash {
    std::size_t operator()(const std::pair<Nat, Nat>& p) const {
      return std::hash<Nat>()(splitmix64(p.first) ^ p.second);
    }
  };
  std::unordered_map<std::pair<Nat, Nat>, bool, PairHash> prec_memo_;
  std::map<std::pair<BoolPrefix, Nat>, bool> tprime_memo_;
  std::map<std::tuple<Nat, Nat, BoolPrefix>, bool> depth_memo_;
  std::map<std::tuple<Nat, Nat, Nat>, bool> gain_memo_;
  std::map<std::pair<Nat, Nat>, Nat> min_equiv_memo_;
};

// Selection function for the WKL game over T^beta: play 0 unless extending
// by 0 provably loses depth.
bool epsilon_wkl(RamseyContext& ctx, const BetaFn& beta, const BoolPrefix& s,
                 const Evaluator<bool, Nat>& p);

// Outcome of the WKL game: omega(alpha) - k - 1 for the least k refuting the
// depth chain condition along alpha, 0 if none does.
Nat q_control(RamseyContext& ctx, const BetaFn& beta,
              const ControlFn<bool>& omega, const BoolPrefix& alpha);

// The WKL game for a fixed beta, with its outcome q_control.
Game<bool, Nat> wkl_game(RamseyContext& ctx, const BetaFn& beta,
                         const ControlFn<bool>& omega);

// Approximate branch of T^beta: eps over the WKL game from the empty prefix.
BoolPrefix build_alpha(RamseyContext& ctx, const BetaFn& beta,
                       const ControlFn<bool>& omega);

// (N, K): how far the Skolem function must be correct for the alpha run
// described by (omega value, q_control value, the two continuation values).
std::pair<Nat, Nat> skolem_bounds(const BetaFn& beta, Nat omega_val, Nat q_val,
                                  Nat p0, Nat p1);

// 'No new branches' selection: p^i(0) for the least i <= 2^n such that no
// s of length n gains a witness in moving from p^i(0) to p^{i+1}(0).
Nat delta_sel(RamseyContext& ctx, Nat n, const Evaluator<Nat, Nat>& p);

// Same 'no new branches' contract, but every iterate is reduced to the least
// value covering the same length-n witnesses. Outcomes of continuation plays
// are bounds (maxima over whole plays), so raw iterates overshoot the
// witnesses they certify; feeding the overshoot back into a control that
// reads the produced values makes the interplay between the two games grow
// without bound. The reduced iterate satisfies the identical defining
// property ('for all s of length n, T'(s, p(d)) -> T'(s, d)') with the
// smallest usable value, which keeps the control self-consistent.
Nat delta_sel_minimal(RamseyContext& ctx, Nat n, const Evaluator<Nat, Nat>& p);

struct BetaResult {
  NatPrefix beta;
  Nat omega_tilde = 0;  // control of the final play
  Nat q_tilde = 0;      // outcome of the final play
};

// Approximate Skolem function: eps over the delta_n selections, with control
// and outcome recomputed from a fresh alpha run per candidate prefix.
BetaResult build_beta(RamseyContext& ctx, const OmegaFn& omega);

struct ATable {
  std::vector<Nat> values;
  std::vector<bool> fallback;  // search interval had no zero of alpha

  bool any_fallback() const;
};

// a(0) = 0, a(n) = least k in [n, beta(beta(n)+1)] with alpha(k) = 0. A
// search that finds no zero records the interval's upper endpoint, flagged.
ATable build_a(RamseyContext& ctx, const BoolPrefix& alpha, const BetaFn& beta,
               Nat n_max);

using NatSelection = SelectionFn<Nat, Nat>;

struct IphpResult {
  bool colour = false;          // x
  std::function<Nat(Nat)> p;    // p_x
  Nat eps_value = 0;            // eps_x(p), the verified range bound
};

// Realizer for the two-colour pigeonhole principle: a two-round product of
// the mu-refined selections against the max outcome.
IphpResult iphp_realizer(const UnaryColouring& c1, const NatSelection& eps0,
                         const NatSelection& eps1);

// psi(a): how much of the min-monochromatic sequence the final argument
// needs, computed by running the pigeonhole realizer on the induced unary
// colouring.
Nat psi(const PairColouring& c, const std::function<Nat(Nat)>& a,
        const CounterexampleSpec& eta);

// The two-argument control functional demanded of the alpha/beta runs.
OmegaFn omega_control(RamseyContext& ctx, const CounterexampleSpec& eta);

}  // namespace ramsel
