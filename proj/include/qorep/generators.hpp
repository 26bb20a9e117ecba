#pragma once

// Instance generators for tests and the batch harness. All randomness in the
// project lives here and is driven by explicit seeds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qorep/order_core.hpp"
#include "qorep/relation.hpp"
#include "qorep/space.hpp"

namespace qorep {

/// mt19937_64 is fully specified by the standard; the distributions in
/// <random> are not, so values are derived from raw draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform01() < p; }
  /// Uniform-ish integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// "q0", "q1", ... zero-padded so that label order equals numeric order.
inline std::vector<std::string> element_labels(std::size_t size) {
  std::size_t width = 1;
  for (std::size_t n = size; n >= 10; n /= 10) ++width;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size; ++i) {
    auto digits = std::to_string(i);
    out.push_back("q" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

/// leq1 is the reflexive-transitive closure of pairs drawn with probability
/// `density1`; leq2 closes leq1 plus pairs drawn with probability `density2`.
inline QuasiorderPair random_pair(std::size_t size, std::uint64_t seed, double density1, double density2) {
  Rng rng(seed);
  const auto labels = element_labels(size);
  Relation leq1 = Relation::identity(labels);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (i != j && rng.chance(density1)) leq1.set(i, j);
  leq1 = transitive_envelope(leq1);

  Relation leq2 = leq1;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (i != j && rng.chance(density2)) leq2.set(i, j);
  leq2 = transitive_envelope(leq2);
  return QuasiorderPair{std::move(leq1), std::move(leq2)};
}

/// All quasiorders on `universe`, obtained as the reflexive-transitive
/// closures of every set of off-diagonal pairs, deduplicated and sorted.
inline std::vector<Relation> enumerate_quasiorders(const std::vector<std::string>& universe) {
  const std::size_t n = universe.size();
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);

  std::set<std::vector<LabelPair>> seen;
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    Relation rel = Relation::identity(universe);
    for (std::size_t b = 0; b < off.size(); ++b)
      if (mask >> b & 1) rel.set(off[b].first, off[b].second);
    rel = transitive_envelope(rel);
    if (seen.insert(rel.pairs()).second) out.push_back(std::move(rel));
  }
  std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) { return a.pairs() < b.pairs(); });
  return out;
}

/// Every (leq1, leq2) with leq1 contained in leq2.
inline std::vector<QuasiorderPair> enumerate_pairs(const std::vector<std::string>& universe) {
  const auto orders = enumerate_quasiorders(universe);
  std::vector<QuasiorderPair> out;
  for (const auto& a : orders)
    for (const auto& b : orders)
      if (a.subset_of(b)) out.push_back(QuasiorderPair{a, b});
  return out;
}

struct SpaceShape {
  std::size_t max_types = 6;      // distinct atoms over both spaces together
  std::uint64_t max_count = 3;    // largest finite multiplicity
  double omega_chance = 0.25;
  std::size_t max_source_copies = 18;  // finite copies plus one per omega atom in X
  std::vector<std::string> indices{"x", "y"};
};

inline Atom random_atom(Rng& rng, const std::vector<std::string>& indices) {
  const auto family = kAllFamilies[rng.between(0, kAllFamilies.size() - 1)];
  return Atom{family, indices[rng.between(0, indices.size() - 1)]};
}

inline SymbolicSpace random_space(Rng& rng, std::size_t types, const SpaceShape& shape) {
  SymbolicSpace out;
  for (std::size_t attempts = 0; out.type_count() < types && attempts < 64; ++attempts) {
    auto atom = random_atom(rng, shape.indices);
    if (out.contains(atom)) continue;
    out.add(atom, rng.chance(shape.omega_chance) ? Count::omega() : Count(rng.between(1, shape.max_count)));
  }
  return out;
}

inline std::size_t source_copies(const SymbolicSpace& x) {
  std::size_t n = 0;
  for (const auto& [atom, count] : x.entries()) n += count.is_omega() ? 1 : count.value();
  return n;
}

/// Two random spaces with at most `shape.max_types` atom types between them;
/// X is trimmed to at most `shape.max_source_copies` source copies.
inline std::pair<SymbolicSpace, SymbolicSpace> random_space_pair(Rng& rng, const SpaceShape& shape) {
  const auto total = rng.between(1, shape.max_types);
  const auto in_x = rng.between(0, total);
  auto x = random_space(rng, in_x, shape);
  auto y = random_space(rng, total - in_x, shape);
  while (source_copies(x) > shape.max_source_copies) {
    auto it = std::find_if(x.entries().begin(), x.entries().end(),
                           [](const auto& e) { return !e.second.is_omega() && e.second.value() > 1; });
    if (it == x.entries().end()) {
      x.erase(x.entries().rbegin()->first);
      continue;
    }
    const Atom atom = it->first;
    const auto reduced = it->second.value() - 1;
    x.erase(atom);
    x.add(atom, reduced);
  }
  return {std::move(x), std::move(y)};
}

}  // namespace qorep
