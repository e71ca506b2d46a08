#include "ramsel/colouring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "ramsel/budget.hpp"

namespace ramsel {

Nat splitmix64(Nat z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PairColouring PairColouring::zero() {
  return PairColouring([](Nat, Nat) { return false; });
}

PairColouring PairColouring::parity() {
  return PairColouring([](Nat i, Nat j) { return ((i + j) & 1) != 0; });
}

PairColouring PairColouring::seeded(Nat seed) {
  return PairColouring([seed](Nat i, Nat j) {
    Nat lo = std::min(i, j);
    Nat hi = std::max(i, j);
    return (splitmix64(splitmix64(splitmix64(seed) ^ lo) ^ hi) & 1) != 0;
  });
}

PairColouring PairColouring::from_function(Fn fn) {
  return PairColouring(std::move(fn));
}

PairColouring PairColouring::from_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  Nat n = 0;
  if (!(in >> n)) throw Error("matrix file: missing size line: " + path);
  std::string rest;
  std::getline(in, rest);
  // lower[i] holds c(i, j) for j < i, rows i = 1 .. n-1
  auto lower = std::make_shared<std::vector<std::vector<bool>>>();
  for (Nat i = 1; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line))
      throw Error("matrix file: expected " + std::to_string(n - 1) +
                  " rows: " + path);
    std::vector<bool> row;
    for (char ch : line) {
      if (ch == '0' || ch == '1') row.push_back(ch == '1');
      else if (!std::isspace(static_cast<unsigned char>(ch)))
        throw Error(std::string("matrix file: bad character '") + ch +
                    "': " + path);
    }
    if (row.size() != i)
      throw Error("matrix file: row " + std::to_string(i) + " has " +
                  std::to_string(row.size()) + " entries, expected " +
                  std::to_string(i) + ": " + path);
    lower->push_back(std::move(row));
  }
  return PairColouring([lower, n](Nat i, Nat j) {
    Nat lo = std::min(i, j);
    Nat hi = std::max(i, j);
    if (hi >= n) return false;
    return static_cast<bool>((*lower)[static_cast<std::size_t>(hi - 1)]
                                     [static_cast<std::size_t>(lo)]);
  });
}

}  // namespace ramsel
