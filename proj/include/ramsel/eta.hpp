#pragma once

#include <functional>

#include "ramsel/prefix.hpp"

namespace ramsel {

// The counterexample functional eta: B x N^N -> N, restricted to a closed
// family of parameterized shapes so every instance is total and reads only
// finitely many values of its argument.
struct CounterexampleSpec {
  enum class Kind { kConst, kXSwitch, kFMax };

  Kind kind = Kind::kConst;
  Nat k0 = 0;   // const: the value; xswitch: value at colour 0
  Nat k1 = 0;   // xswitch: value at colour 1
  Nat m = 0;    // fmax: number of F values inspected
  Nat cap = 0;  // fmax: result cap

  static CounterexampleSpec constant(Nat k) {
    CounterexampleSpec e;
    e.kind = Kind::kConst;
    e.k0 = k;
    return e;
  }

  static CounterexampleSpec xswitch(Nat k0, Nat k1) {
    CounterexampleSpec e;
    e.kind = Kind::kXSwitch;
    e.k0 = k0;
    e.k1 = k1;
    return e;
  }

  static CounterexampleSpec fmax(Nat m, Nat cap) {
    CounterexampleSpec e;
    e.kind = Kind::kFMax;
    e.m = m;
    e.cap = cap;
    return e;
  }

  Nat eval(bool x, const std::function<Nat(Nat)>& f) const {
    switch (kind) {
      case Kind::kConst:
        return k0;
      case Kind::kXSwitch:
        return x ? k1 : k0;
      case Kind::kFMax: {
        Nat best = 0;
        for (Nat i = 0; i < m; ++i) best = std::max(best, f(i));
        return std::min(cap, best);
      }
    }
    return 0;
  }

  // Largest F index read directly by eval (one past), independent of the
  // returned value.
  Nat table_demand() const { return kind == Kind::kFMax ? m : 0; }
};

}  // namespace ramsel
