#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qorep/error.hpp"

namespace qorep {

using ElementId = std::string;
using BlockId = std::string;
using LabelPair = std::pair<std::string, std::string>;

// A finite binary relation stored as a dense boolean matrix over a universe of
// labels. The universe is kept sorted, so index order is label order and every
// iteration below is deterministic.
class Relation {
 public:
  Relation() = default;

  explicit Relation(std::vector<std::string> universe) : universe_(std::move(universe)) {
    std::sort(universe_.begin(), universe_.end());
    auto dup = std::adjacent_find(universe_.begin(), universe_.end());
    if (dup != universe_.end()) throw Error(Errc::DuplicateElement, "label '" + *dup + "' appears twice");
    bits_.assign(universe_.size() * universe_.size(), 0);
  }

  static Relation from_pairs(std::vector<std::string> universe, const std::vector<LabelPair>& pairs) {
    Relation rel(std::move(universe));
    for (const auto& [a, b] : pairs) rel.set(a, b);
    return rel;
  }

  static Relation identity(std::vector<std::string> universe) {
    Relation rel(std::move(universe));
    for (std::size_t i = 0; i < rel.size(); ++i) rel.set(i, i);
    return rel;
  }

  std::size_t size() const noexcept { return universe_.size(); }
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::string& label(std::size_t i) const { return universe_.at(i); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), label);
    if (it == universe_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - universe_.begin());
  }

  std::size_t require(std::string_view label) const {
    if (auto i = index_of(label)) return *i;
    throw Error(Errc::UnknownElement, "'" + std::string(label) + "' is not in the universe");
  }

  bool holds(std::size_t i, std::size_t j) const { return bits_[i * size() + j] != 0; }
  bool holds(std::string_view a, std::string_view b) const { return holds(require(a), require(b)); }

  void set(std::size_t i, std::size_t j, bool value = true) { bits_[i * size() + j] = value ? 1 : 0; }
  void set(std::string_view a, std::string_view b, bool value = true) { set(require(a), require(b), value); }

  std::size_t pair_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

  bool empty() const { return pair_count() == 0; }

  /// Pairs in lexicographic order of (source, target).
  std::vector<LabelPair> pairs(bool include_reflexive = true) const {
    std::vector<LabelPair> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (holds(i, j) && (include_reflexive || i != j)) out.emplace_back(universe_[i], universe_[j]);
    return out;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!holds(i, i)) return false;
    return true;
  }

  bool is_transitive() const { return !transitivity_witness().has_value(); }

  /// First (i, j, k) with i~j, j~k and not i~k.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> transitivity_witness() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        if (!holds(i, j)) continue;
        for (std::size_t k = 0; k < size(); ++k)
          if (holds(j, k) && !holds(i, k)) return std::tuple{i, j, k};
      }
    return std::nullopt;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (holds(i, j) && holds(j, i)) return false;
    return true;
  }

  bool is_quasiorder() const { return is_reflexive() && is_transitive(); }

  bool same_universe(const Relation& other) const { return universe_ == other.universe_; }

  bool subset_of(const Relation& other) const {
    if (!same_universe(other)) return false;
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] && !other.bits_[k]) return false;
    return true;
  }

  Relation with_diagonal() const {
    Relation out = *this;
    for (std::size_t i = 0; i < size(); ++i) out.set(i, i);
    return out;
  }

  Relation without_diagonal() const {
    Relation out = *this;
    for (std::size_t i = 0; i < size(); ++i) out.set(i, i, false);
    return out;
  }

  Relation united(const Relation& other) const {
    Relation out = *this;
    for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= other.bits_[k];
    return out;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<std::uint8_t> bits_;
};

// A partition of a universe into nonempty disjoint blocks. Each block is named
// by its least member; blocks are stored in name order.
class Partition {
 public:
  Partition() = default;

  /// `block_of[i]` assigns element i of `universe` to an arbitrary block key.
  Partition(std::vector<std::string> universe, const std::vector<std::size_t>& block_of)
      : universe_(std::move(universe)) {
    if (block_of.size() != universe_.size())
      throw Error(Errc::PartitionMismatch, "one block key per element expected");
    if (!std::is_sorted(universe_.begin(), universe_.end()))
      throw Error(Errc::PartitionMismatch, "partition universe must be sorted");

    // Universe is sorted, so the first element seen with a given key is the least.
    std::vector<std::pair<std::size_t, std::size_t>> key_to_block;
    block_index_.assign(universe_.size(), 0);
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      auto it = std::find_if(key_to_block.begin(), key_to_block.end(),
                             [&](const auto& kb) { return kb.first == block_of[i]; });
      if (it == key_to_block.end()) {
        key_to_block.emplace_back(block_of[i], blocks_.size());
        blocks_.push_back({i});
        names_.push_back(universe_[i]);
        block_index_[i] = blocks_.size() - 1;
      } else {
        blocks_[it->second].push_back(i);
        block_index_[i] = it->second;
      }
    }
  }

  static Partition singletons(std::vector<std::string> universe) {
    std::vector<std::size_t> keys(universe.size());
    for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = i;
    return Partition(std::move(universe), keys);
  }

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<BlockId>& names() const noexcept { return names_; }
  const BlockId& name(std::size_t block) const { return names_.at(block); }

  std::size_t block_index_of(std::size_t element) const { return block_index_.at(element); }

  std::size_t block_index_of(std::string_view label) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), label);
    if (it == universe_.end() || *it != label)
      throw Error(Errc::UnknownElement, "'" + std::string(label) + "' is not partitioned");
    return block_index_of(static_cast<std::size_t>(it - universe_.begin()));
  }

  const BlockId& block_of(std::string_view label) const { return names_[block_index_of(label)]; }

  /// Member element indices of a block, ascending.
  const std::vector<std::size_t>& members(std::size_t block) const { return blocks_.at(block); }

  std::vector<std::string> member_labels(std::size_t block) const {
    std::vector<std::string> out;
    for (auto i : members(block)) out.push_back(universe_[i]);
    return out;
  }

  bool same_block(std::size_t a, std::size_t b) const { return block_index_[a] == block_index_[b]; }

  /// True iff every block of *this lies inside a single block of `coarser`.
  bool refines(const Partition& coarser) const {
    if (universe_ != coarser.universe_) return false;
    for (const auto& block : blocks_)
      for (auto i : block)
        if (!coarser.same_block(i, block.front())) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<std::size_t> block_index_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<BlockId> names_;
};

/// Two quasiorders on one universe with leq1 contained in leq2.
struct QuasiorderPair {
  Relation leq1;
  Relation leq2;

  const std::vector<std::string>& universe() const noexcept { return leq1.universe(); }
  std::size_t size() const noexcept { return leq1.size(); }

  friend bool operator==(const QuasiorderPair&, const QuasiorderPair&) = default;
};

/// Partial order on the blocks of a partition; the universe holds block names.
using ComponentOrder = Relation;

}  // namespace qorep
