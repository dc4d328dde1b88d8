#pragma once

#include <vector>

#include "gsr/core.hpp"

namespace fixtures {

using gsr::AdditionTable;
using gsr::AssocMode;
using gsr::Element;
using gsr::GammaSemiring;

inline AdditionTable table(int m, std::vector<int> cells) {
  AdditionTable a;
  a.m = m;
  for (int v : cells) a.cells.push_back(static_cast<Element>(v));
  return a;
}

inline AdditionTable or_add() { return table(2, {0, 1, 1, 1}); }
inline AdditionTable z2_add() { return table(2, {0, 1, 1, 0}); }
inline AdditionTable max_add() { return table(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}); }

// One-element structure; every table is forced.
inline GammaSemiring trivial1() {
  GammaSemiring s;
  s.m = 1;
  s.n = 3;
  s.r = 1;
  s.add = table(1, {0});
  s.mu = {std::vector<Element>(1, 0)};
  return s;
}

// Boolean OR addition with the three-way AND product.
inline GammaSemiring bool_and() {
  GammaSemiring s;
  s.m = 2;
  s.n = 3;
  s.r = 1;
  s.add = or_add();
  s.mu = {std::vector<Element>(8, 0)};
  s.mu[0][7] = 1;  // AND(1,1,1)
  return s;
}

// Max addition with the zero-guarded first projection: 0 when any argument
// is 0, else x.
inline GammaSemiring max_proj() {
  GammaSemiring s;
  s.m = 3;
  s.n = 3;
  s.r = 1;
  s.add = max_add();
  s.mu = {std::vector<Element>(27, 0)};
  for (int x = 1; x < 3; ++x)
    for (int y = 1; y < 3; ++y)
      for (int z = 1; z < 3; ++z) s.mu[0][x * 9 + y * 3 + z] = static_cast<Element>(x);
  return s;
}

// Three elements, 1+1=2 with 2 saturating; product is 0 on a zero argument,
// 2 at (1,1,1), else 1. Distributivity fails at slot 1 on (1,1,1,1).
inline GammaSemiring peak3() {
  GammaSemiring s;
  s.m = 3;
  s.n = 3;
  s.r = 1;
  s.add = table(3, {0, 1, 2, 1, 2, 2, 2, 2, 2});
  s.mu = {std::vector<Element>(27, 0)};
  for (int x = 1; x < 3; ++x)
    for (int y = 1; y < 3; ++y)
      for (int z = 1; z < 3; ++z) s.mu[0][x * 9 + y * 3 + z] = 1;
  s.mu[0][1 * 9 + 1 * 3 + 1] = 2;
  return s;
}

// Arity four, boolean OR addition, four-way AND product. Pinning its
// central idempotent 1 must reproduce bool_and exactly.
inline GammaSemiring pin4() {
  GammaSemiring s;
  s.m = 2;
  s.n = 4;
  s.r = 1;
  s.add = or_add();
  s.mu = {std::vector<Element>(16, 0)};
  s.mu[0][15] = 1;  // AND(1,1,1,1)
  return s;
}

// Componentwise product of bool_and with itself; element (a,b) has index
// 2a+b. Carries the comaximal two-sided ideals {0,1} and {0,2}.
inline GammaSemiring prod4() {
  GammaSemiring s;
  s.m = 4;
  s.n = 3;
  s.r = 1;
  s.add.m = 4;
  s.add.cells.assign(16, 0);
  auto lo = [](int v) { return v & 1; };
  auto hi = [](int v) { return v >> 1; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s.add.cells[i * 4 + j] =
          static_cast<Element>(((hi(i) | hi(j)) << 1) | (lo(i) | lo(j)));
  s.mu = {std::vector<Element>(64, 0)};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        s.mu[0][x * 16 + y * 4 + z] = static_cast<Element>(
            ((hi(x) & hi(y) & hi(z)) << 1) | (lo(x) & lo(y) & lo(z)));
  return s;
}

// Two gamma letters; the product is three-way AND under the gamma tuple
// (0,1) and constant zero elsewhere. gamma_swapped moves the AND row to
// (1,0): equal up to a gamma permutation, distinct without one.
inline GammaSemiring gamma_pair(bool swapped) {
  GammaSemiring s;
  s.m = 2;
  s.n = 3;
  s.r = 2;
  s.add = or_add();
  s.mu.assign(4, std::vector<Element>(8, 0));
  s.mu[swapped ? 2 : 1][7] = 1;
  return s;
}

}  // namespace fixtures
