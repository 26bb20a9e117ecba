#pragma once

// Independent reference implementations used only by the tests.

#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "qorep/generators.hpp"
#include "qorep/relation.hpp"

namespace qorep::testing {

inline Relation random_relation(Rng& rng, std::size_t n, double density) {
  Relation r(element_labels(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.chance(density)) r.set(i, j);
  return r;
}

/// Transitive envelope by repeated composition until nothing changes.
inline Relation envelope_by_iteration(Relation r) {
  for (bool changed = true; changed;) {
    changed = false;
    const Relation before = r;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j)
        for (std::size_t k = 0; k < r.size(); ++k)
          if (before.holds(i, j) && before.holds(j, k) && !r.holds(i, k)) {
            r.set(i, k);
            changed = true;
          }
  }
  return r;
}

/// reach[i][j]: j reachable from i by a path of length >= 0.
inline std::vector<std::vector<bool>> reachability(const Relation& r) {
  const auto n = r.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> queue;
    queue.push(s);
    reach[s][s] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (std::size_t w = 0; w < n; ++w)
        if (r.holds(v, w) && !reach[s][w]) {
          reach[s][w] = true;
          queue.push(w);
        }
    }
  }
  return reach;
}

/// Strongly connected components as "same block" matrix.
inline std::vector<std::vector<bool>> scc_matrix(const Relation& r) {
  auto reach = reachability(r);
  const auto n = r.size();
  std::vector<std::vector<bool>> same(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) same[i][j] = reach[i][j] && reach[j][i];
  return same;
}

/// Connected components of the undirected graph underlying r.
inline std::vector<std::vector<bool>> weak_components_matrix(const Relation& r) {
  Relation sym = r;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r.holds(i, j)) sym.set(j, i);
  auto reach = reachability(sym);
  return reach;
}

inline std::vector<std::vector<bool>> same_block_matrix(const Partition& p) {
  const auto n = p.universe().size();
  std::vector<std::vector<bool>> same(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) same[i][j] = p.same_block(i, j);
  return same;
}

/// Every reflexive and transitive relation, found by filtering all relations
/// rather than by closing them.
inline std::size_t count_quasiorders_by_filter(std::size_t n) {
  std::size_t count = 0;
  const auto labels = element_labels(n);
  const std::size_t bits = n * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Relation r(labels);
    for (std::size_t b = 0; b < bits; ++b)
      if (mask >> b & 1) r.set(b / n, b % n);
    if (r.is_reflexive() && r.is_transitive()) ++count;
  }
  return count;
}

}  // namespace qorep::testing
