#pragma once

// Brute-force oracles kept independent of the library's own algorithms:
// Weyl groups by breadth-first matrix generation, longest elements by
// exhaustive search, random words for property tests.

#include <deque>
#include <random>
#include <set>

#include "paracone/rootsys.hpp"

namespace oracle {

using namespace paracone;

/// Every Weyl group element as a matrix, by BFS over the generators.
inline std::vector<IntMat> enumerate_weyl(const RootSystem& sys, size_t cap = 100000) {
  std::set<IntMat> seen;
  std::deque<IntMat> queue;
  seen.insert(identity_mat(sys.rank()));
  queue.push_back(identity_mat(sys.rank()));
  std::vector<IntMat> gens;
  for (int i = 1; i <= sys.rank(); ++i) gens.push_back(sys.simple_reflection(i).mat);
  while (!queue.empty()) {
    IntMat m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      IntMat n = mat_mul(g, m);
      if (seen.insert(n).second) {
        if (seen.size() > cap) throw std::runtime_error("oracle BFS cap exceeded");
        queue.push_back(n);
      }
    }
  }
  return std::vector<IntMat>(seen.begin(), seen.end());
}

/// The longest element: the unique one sending every positive root negative.
inline IntMat longest_element(const RootSystem& sys) {
  for (const auto& m : enumerate_weyl(sys)) {
    bool all_neg = true;
    for (const auto& r : sys.positive_roots()) {
      IntVec v(r.coords.begin(), r.coords.end());
      IntVec im = mat_vec(m, v);
      bool neg = false;
      for (long long x : im)
        if (x != 0) {
          neg = x < 0;
          break;
        }
      if (!neg) all_neg = false;
    }
    if (all_neg) return m;
  }
  throw std::runtime_error("no longest element found");
}

/// Random Weyl element as a product of at most `len` simple reflections.
inline WeylElement random_element(const RootSystem& sys, std::mt19937_64& rng, int len = 12) {
  std::uniform_int_distribution<int> pick(1, sys.rank());
  std::uniform_int_distribution<int> count(0, len);
  WeylElement w = sys.identity_element();
  int n = count(rng);
  for (int i = 0; i < n; ++i) w = sys.compose(sys.simple_reflection(pick(rng)), w);
  return w;
}

}  // namespace oracle
