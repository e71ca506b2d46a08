#pragma once

#include <functional>
#include <string>

#include "ramsel/prefix.hpp"

namespace ramsel {

Nat splitmix64(Nat z);

// A symmetric 2-colouring of pairs of naturals, queried as c(i, j) with
// i != j.
class PairColouring {
 public:
  using Fn = std::function<bool(Nat, Nat)>;

  static PairColouring zero();
  static PairColouring parity();
  // Low bit of a splittable hash of (seed, min(i,j), max(i,j)); symmetric by
  // construction.
  static PairColouring seeded(Nat seed);
  // Text format: line 1 holds n, then n-1 lines of 0/1 digits, line i giving
  // c(i, j) for j < i. Pairs touching indices >= n default to colour 0.
  static PairColouring from_matrix_file(const std::string& path);
  static PairColouring from_function(Fn fn);

  bool operator()(Nat i, Nat j) const { return fn_(i, j); }

 private:
  explicit PairColouring(Fn fn) : fn_(std::move(fn)) {}
  Fn fn_;
};

using UnaryColouring = std::function<bool(Nat)>;

}  // namespace ramsel
