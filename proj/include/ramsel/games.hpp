#pragma once

#include <vector>

#include "ramsel/selection.hpp"

namespace ramsel {

// An unbounded sequential game: per-position strategies, an outcome
// functional and a control functional deciding how much of a play matters.
template <class X, class R>
struct Game {
  SelectionFamily<X, R> family;
  OutcomeFn<X, R> outcome;
  ControlFn<X> control;
};

template <class X, class R>
Prefix<X> optimal_play(const Game<X, R>& g, Budget& budget,
                       Counters* counters = nullptr) {
  return eps<X, R>({}, g.family, g.control, g.outcome, budget, counters);
}

template <class X, class R>
Prefix<X> optimal_play(const Game<X, R>& g) {
  Budget budget;
  return optimal_play(g, budget);
}

// A position is relevant when the control of its canonical extension is at
// least its length.
template <class X>
bool is_relevant(const Prefix<X>& s, const ControlFn<X>& control) {
  return control(s) >= s.size();
}

struct PlayCheck {
  Nat index = 0;
  bool move_ok = false;     // alpha(n) = eps_[alpha](n)(p)
  bool outcome_ok = false;  // q(alpha) = attainment of eps_[alpha](n) at p
};

struct PlayReport {
  std::vector<PlayCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.move_ok || !c.outcome_ok) return false;
    return true;
  }
};

// Checks the two optimality equations at every index n <= control(alpha),
// recomputing each continuation evaluator from scratch.
template <class X, class R>
PlayReport verify_optimal_play(const Game<X, R>& g, const Prefix<X>& alpha,
                               Budget& budget) {
  PlayReport report;
  const R final_outcome = g.outcome(alpha);
  const Nat limit = g.control(alpha);
  for (Nat n = 0; n <= limit; ++n) {
    Prefix<X> sn = take(alpha, n);
    Evaluator<X, R> p = [&](const X& x) {
      return continuation_value(sn, x, g.family, g.control, g.outcome, budget);
    };
    SelectionFn<X, R> sel = g.family(sn);
    PlayCheck check;
    check.index = n;
    check.move_ok = (sel(p) == at(alpha, n));
    check.outcome_ok = (final_outcome == attain(sel, p));
    report.checks.push_back(check);
  }
  return report;
}

template <class X, class R>
PlayReport verify_optimal_play(const Game<X, R>& g, const Prefix<X>& alpha) {
  Budget budget;
  return verify_optimal_play(g, alpha, budget);
}

}  // namespace ramsel
