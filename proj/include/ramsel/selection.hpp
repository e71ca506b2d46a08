#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ramsel/budget.hpp"
#include "ramsel/prefix.hpp"

namespace ramsel {

template <class X, class R>
using Evaluator = std::function<R(const X&)>;

// A selection function of type (X -> R) -> X: given an evaluator of moves,
// pick a move. Must be pure and may call its evaluator finitely often.
template <class X, class R>
using SelectionFn = std::function<X(const Evaluator<X, R>&)>;

// Outcome of the canonical extension of a prefix.
template <class X, class R>
using OutcomeFn = std::function<R(const Prefix<X>&)>;

// Relevant length of the canonical extension of a prefix.
template <class X>
using ControlFn = std::function<Nat(const Prefix<X>&)>;

// Position-indexed selection functions.
template <class X, class R>
using SelectionFamily = std::function<SelectionFn<X, R>(const Prefix<X>&)>;

// Attainment: the outcome p(eps p) of playing the selected move.
template <class X, class R>
R attain(const SelectionFn<X, R>& sel, const Evaluator<X, R>& p) {
  return p(sel(p));
}

// Binary product: returns <a, B[a]> with B[x] = delta(x)(y -> q(x,y)) and
// a = eps(x -> q(x, B[x])).
template <class X, class Y, class R>
std::pair<X, Y> binary_product(
    const SelectionFn<X, R>& eps_fn,
    const std::function<SelectionFn<Y, R>(const X&)>& delta,
    const std::function<R(const X&, const Y&)>& q) {
  auto second = [&](const X& x) -> Y {
    return delta(x)([&](const Y& y) { return q(x, y); });
  };
  X a = eps_fn([&](const X& x) { return q(x, second(x)); });
  Y b = second(a);
  return {a, b};
}

// Right-nested iteration of the binary product over a finite list.
template <class X, class R>
Prefix<X> finite_product(const std::vector<SelectionFn<X, R>>& sels,
                         const OutcomeFn<X, R>& q) {
  std::function<Prefix<X>(const Prefix<X>&, std::size_t)> rest =
      [&](const Prefix<X>& played, std::size_t i) -> Prefix<X> {
    if (i == sels.size()) return {};
    Evaluator<X, R> p = [&](const X& x) {
      Prefix<X> px = append(played, x);
      return q(concat(px, rest(px, i + 1)));
    };
    X a = sels[i](p);
    Prefix<X> pa = append(played, a);
    return concat(Prefix<X>{a}, rest(pa, i + 1));
  };
  return rest({}, 0);
}

// The explicitly controlled unbounded product. One solver owns one memo
// table of computed extensions, keyed by absolute prefix; the table dies
// with the solver, so distinct calls never share state.
//
// The outcome functional passed in is relative to the base prefix of the
// call (shifting is realised by concatenation, never by index arithmetic
// inside the functional); the family and the control always see absolute
// positions.
template <class X, class R>
class EpsSolver {
 public:
  EpsSolver(SelectionFamily<X, R> family, ControlFn<X> control,
            OutcomeFn<X, R> outcome, Budget& budget,
            Counters* counters = nullptr)
      : family_(std::move(family)),
        control_(std::move(control)),
        outcome_(std::move(outcome)),
        budget_(budget),
        counters_(counters) {}

  // Finite extension t of s with s*t default-extended equal to EPS_s(q).
  Prefix<X> solve(const Prefix<X>& base) {
    base_len_ = base.size();
    memo_.clear();
    return run(base);
  }

  // p_s(x) evaluated at an absolute prefix u = s*x, with the outcome
  // functional taken relative to the root.
  R value_from_root(const Prefix<X>& u) {
    base_len_ = 0;
    return value_beyond(u);
  }

 private:
  Prefix<X> run(const Prefix<X>& s) {
    budget_.charge();
    if (counters_) ++counters_->eps_calls;
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    Prefix<X> result;
    if (control_(s) < s.size()) {
      result = {};
    } else {
      Evaluator<X, R> p = [&](const X& x) { return value_beyond(append(s, x)); };
      X a = family_(s)(p);
      result = concat(Prefix<X>{a}, run(append(s, a)));
    }
    memo_.emplace(s, result);
    return result;
  }

  // Outcome of continuing optimally from u: q applied to the part of u
  // beyond the base, concatenated with u's computed extension.
  R value_beyond(const Prefix<X>& u) {
    Prefix<X> rel(u.begin() + static_cast<std::ptrdiff_t>(base_len_), u.end());
    return outcome_(concat(rel, run(u)));
  }

  SelectionFamily<X, R> family_;
  ControlFn<X> control_;
  OutcomeFn<X, R> outcome_;
  Budget& budget_;
  Counters* counters_;
  std::size_t base_len_ = 0;
  std::map<Prefix<X>, Prefix<X>> memo_;
};

template <class X, class R>
Prefix<X> eps(const Prefix<X>& s, const SelectionFamily<X, R>& family,
              const ControlFn<X>& control, const OutcomeFn<X, R>& outcome,
              Budget& budget, Counters* counters = nullptr) {
  EpsSolver<X, R> solver(family, control, outcome, budget, counters);
  return solver.solve(s);
}

template <class X, class R>
Prefix<X> eps(const Prefix<X>& s, const SelectionFamily<X, R>& family,
              const ControlFn<X>& control, const OutcomeFn<X, R>& outcome) {
  Budget budget;
  return eps(s, family, control, outcome, budget);
}

// p_s(x): the outcome of playing x at position s and continuing optimally.
// Here `outcome` is the whole-game q (the base is the empty prefix).
template <class X, class R>
R continuation_value(const Prefix<X>& s, const X& x,
                     const SelectionFamily<X, R>& family,
                     const ControlFn<X>& control,
                     const OutcomeFn<X, R>& outcome, Budget& budget,
                     Counters* counters = nullptr) {
  EpsSolver<X, R> solver(family, control, outcome, budget, counters);
  return solver.value_from_root(append(s, x));
}

template <class X, class R>
R continuation_value(const Prefix<X>& s, const X& x,
                     const SelectionFamily<X, R>& family,
                     const ControlFn<X>& control,
                     const OutcomeFn<X, R>& outcome) {
  Budget budget;
  return continuation_value(s, x, family, control, outcome, budget);
}

}  // namespace ramsel
