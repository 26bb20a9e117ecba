#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "qorep/error.hpp"
#include "qorep/relation.hpp"

namespace qorep {

/// Smallest transitive superset (Warshall).
inline Relation transitive_envelope(const Relation& rel) {
  Relation out = rel;
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.holds(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (out.holds(k, j)) out.set(i, j);
    }
  return out;
}

/// Builds a quasiorder pair from raw pair lists. Reflexive pairs are always
/// added; transitive closure only when `autoclose` is set.
inline QuasiorderPair validate_pair(const std::vector<std::string>& universe,
                                    const std::vector<LabelPair>& leq1_pairs,
                                    const std::vector<LabelPair>& leq2_pairs, bool autoclose) {
  Relation leq1 = Relation::from_pairs(universe, leq1_pairs).with_diagonal();
  Relation leq2 = Relation::from_pairs(universe, leq2_pairs).with_diagonal();

  auto close_or_reject = [autoclose](Relation& rel, const char* which) {
    if (autoclose) {
      rel = transitive_envelope(rel);
      return;
    }
    if (auto w = rel.transitivity_witness()) {
      auto [i, j, k] = *w;
      throw Error(Errc::NotTransitive, std::string(which) + " contains (" + rel.label(i) + "," + rel.label(j) +
                                           ") and (" + rel.label(j) + "," + rel.label(k) + ") but not (" +
                                           rel.label(i) + "," + rel.label(k) + ")");
    }
  };
  close_or_reject(leq1, "leq1");
  close_or_reject(leq2, "leq2");

  for (const auto& [a, b] : leq1.pairs(false))
    if (!leq2.holds(a, b))
      throw Error(Errc::InclusionViolated, "leq1 pair (" + a + "," + b + ") is missing from leq2");
  return QuasiorderPair{std::move(leq1), std::move(leq2)};
}

/// Partition of a quasiorder's universe into mutual classes (q ~ q' iff both
/// q <= q' and q' <= q), i.e. the strongly connected components of its digraph.
inline Partition mutual_classes(const Relation& leq1) {
  const std::size_t n = leq1.size();
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (leq1.holds(i, j) && leq1.holds(j, i)) {
        key[i] = key[j];
        break;
      }
  }
  return Partition(leq1.universe(), key);
}

/// Pair induced on the blocks of `classes`; block labels are block names.
inline QuasiorderPair quotient_pair(const QuasiorderPair& pair, const Partition& classes) {
  if (classes.universe() != pair.universe())
    throw Error(Errc::PartitionMismatch, "partition is over a different universe");
  const std::size_t n = pair.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool mutual = pair.leq1.holds(i, j) && pair.leq1.holds(j, i);
      if (mutual != classes.same_block(i, j))
        throw Error(Errc::PartitionMismatch, "blocks are not the mutual classes of leq1 (at " +
                                                 pair.universe()[i] + ", " + pair.universe()[j] + ")");
    }

  Relation leq1(classes.names());
  Relation leq2(classes.names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto bi = classes.block_index_of(i);
      const auto bj = classes.block_index_of(j);
      if (pair.leq1.holds(i, j)) leq1.set(bi, bj);
      if (pair.leq2.holds(i, j)) leq2.set(bi, bj);
    }
  return QuasiorderPair{std::move(leq1), std::move(leq2)};
}

/// q < q' iff q <=1 q', not q' <=1 q, and q' <=2 q. Requires antisymmetric leq1.
inline Relation strict_order(const QuasiorderPair& pair) {
  if (!pair.leq1.is_antisymmetric())
    throw Error(Errc::NotAntisymmetric, "strict order needs an antisymmetric leq1; quotient first");
  Relation out(pair.universe());
  const std::size_t n = pair.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pair.leq1.holds(i, j) && !pair.leq1.holds(j, i) && pair.leq2.holds(j, i)) out.set(i, j);
  return out;
}

/// Connected components of the symmetrized comparability graph of `rel`.
inline Partition components(const Relation& rel) {
  const std::size_t n = rel.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel.holds(i, j)) {
        auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = find(i);
  return Partition(rel.universe(), key);
}

/// q R q' iff q < q', or q, q' are mutually <=2-related and <=1-incomparable.
inline Relation relation_R(const QuasiorderPair& pair, const Relation& strict) {
  Relation out(pair.universe());
  const std::size_t n = pair.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool twin2 = pair.leq2.holds(i, j) && pair.leq2.holds(j, i);
      const bool apart1 = !pair.leq1.holds(i, j) && !pair.leq1.holds(j, i);
      if (strict.holds(i, j) || (twin2 && apart1)) out.set(i, j);
    }
  return out;
}

/// q Rdot q' iff q prec q', or q != q' and q <=1 q', or q != q' and q <=2 q'.
inline Relation relation_Rdot(const QuasiorderPair& pair, const Relation& prec) {
  Relation out(pair.universe());
  const std::size_t n = pair.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool distinct = i != j;
      if (prec.holds(i, j) || (distinct && pair.leq1.holds(i, j)) || (distinct && pair.leq2.holds(i, j)))
        out.set(i, j);
    }
  return out;
}

/// Order induced on the blocks of `blocks` by `precdot`: B below B' iff B == B'
/// or some q in B, q' in B' have q precdot q'. Throws AntisymmetryViolated when
/// two distinct blocks end up mutually below each other, which signals a bug
/// upstream rather than bad input.
inline ComponentOrder order_on_components(const Relation& precdot, const Partition& blocks) {
  if (blocks.universe() != precdot.universe())
    throw Error(Errc::PartitionMismatch, "blocks are over a different universe");
  ComponentOrder order(blocks.names());
  for (std::size_t b = 0; b < blocks.block_count(); ++b) order.set(b, b);
  const std::size_t n = precdot.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (precdot.holds(i, j)) order.set(blocks.block_index_of(i), blocks.block_index_of(j));
  order = transitive_envelope(order);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (order.holds(a, b) && order.holds(b, a))
        throw Error(Errc::AntisymmetryViolated,
                    "blocks " + order.label(a) + " and " + order.label(b) + " are mutually ordered");
  return order;
}

}  // namespace qorep
