#pragma once

#include <cstdint>
#include <vector>

namespace ramsel {

using Nat = std::uint64_t;

// A finite play prefix stands for its canonical infinite extension: reading
// past the end yields the move type's zero element (0 for naturals, 0 for
// Booleans). Every functional that conceptually takes an infinite play
// receives a Prefix and applies this rule.
template <class X>
using Prefix = std::vector<X>;

using BoolPrefix = Prefix<bool>;
using NatPrefix = Prefix<Nat>;

template <class X>
inline X at(const Prefix<X>& s, Nat i) {
  return i < s.size() ? s[static_cast<std::size_t>(i)] : X{};
}

// Initial segment of length n, default-extended if n exceeds |s|.
template <class X>
inline Prefix<X> take(const Prefix<X>& s, Nat n) {
  Prefix<X> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Nat i = 0; i < n; ++i) out.push_back(at(s, i));
  return out;
}

template <class X>
inline Prefix<X> append(Prefix<X> s, X x) {
  s.push_back(x);
  return s;
}

template <class X>
inline Prefix<X> concat(Prefix<X> s, const Prefix<X>& t) {
  s.insert(s.end(), t.begin(), t.end());
  return s;
}

}  // namespace ramsel
