#pragma once

// Embeddability between coproducts of atoms.
//
// X embeds into Y at level L when every copy of every X-atom can be assigned
// to a Y-atom b with rel(a, b) >= L. At CLOPEN and CLOSED each copy of a
// Y-atom takes at most one source copy (atoms are connected, so distinct
// summands land in distinct summands); at INJ a target copy takes any number.
// An omega summand of Y therefore has room for countably many sources.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qorep/atom_system.hpp"
#include "qorep/error.hpp"
#include "qorep/matching.hpp"
#include "qorep/space.hpp"

namespace qorep {

struct MatchingTransfer {
  Atom source;
  Atom target;
  Count amount;

  friend bool operator==(const MatchingTransfer&, const MatchingTransfer&) = default;
};

struct MatchingWitness {
  RelationLevel level = RelationLevel::Clopen;
  std::vector<MatchingTransfer> transfers;
};

struct EmbedResult {
  bool embeds = false;
  std::optional<MatchingWitness> witness;

  explicit operator bool() const noexcept { return embeds; }
};

/// Finite demand/supply tables equivalent to an omega instance.
struct FiniteTables {
  std::vector<Atom> sources;
  std::vector<Atom> targets;
  std::vector<std::uint64_t> demand;
  std::vector<std::uint64_t> supply;
  std::vector<bool> source_omega;
  std::vector<bool> target_omega;
  /// Value substituted for an omega demand: exceeds all finite supply combined.
  std::uint64_t sentinel = 0;
};

/// Omega demands become `sentinel` = 1 + (all finite counts) + (atom types),
/// which no finite supply can absorb; omega supplies become sentinel times the
/// number of source types, enough to absorb the whole demand.
inline FiniteTables finitize(const SymbolicSpace& x, const SymbolicSpace& y) {
  FiniteTables t;
  std::uint64_t finite_sum = 0;
  for (const auto* space : {&x, &y})
    for (const auto& [atom, count] : space->entries())
      if (!count.is_omega()) finite_sum += count.value();
  t.sentinel = 1 + finite_sum + x.type_count() + y.type_count();
  const std::uint64_t omega_supply = t.sentinel * std::max<std::uint64_t>(1, x.type_count());

  for (const auto& [atom, count] : x.entries()) {
    t.sources.push_back(atom);
    t.demand.push_back(count.is_omega() ? t.sentinel : count.value());
    t.source_omega.push_back(count.is_omega());
  }
  for (const auto& [atom, count] : y.entries()) {
    t.targets.push_back(atom);
    t.supply.push_back(count.is_omega() ? omega_supply : count.value());
    t.target_omega.push_back(count.is_omega());
  }
  return t;
}

namespace detail {

inline void require_embedding_level(RelationLevel level) {
  if (level != RelationLevel::Clopen && level != RelationLevel::Closed && level != RelationLevel::Inj)
    throw Error(Errc::InvalidLevel, "embeddability is decided at CLOPEN, CLOSED or INJ, not " +
                                        std::string(level_name(level)));
}

inline TransportProblem transport(const FiniteTables& t, RelationLevel level, const AtomSystem& sys) {
  TransportProblem p;
  p.demand = t.demand;
  p.supply = t.supply;
  p.unbounded_supply = level == RelationLevel::Inj;
  p.edges.resize(t.sources.size());
  for (std::size_t i = 0; i < t.sources.size(); ++i)
    for (std::size_t j = 0; j < t.targets.size(); ++j)
      if (sys.rel(t.sources[i], t.targets[j]) >= level) p.edges[i].push_back(j);
  return p;
}

}  // namespace detail

/// Decision only; no witness is built.
inline bool embeddable(const SymbolicSpace& x, const SymbolicSpace& y, RelationLevel level,
                       const AtomSystem& sys = AtomSystem::standard()) {
  detail::require_embedding_level(level);
  return is_feasible(detail::transport(finitize(x, y), level, sys));
}

/// Decision plus the canonical matching when it exists.
inline EmbedResult embeds(const SymbolicSpace& x, const SymbolicSpace& y, RelationLevel level,
                          const AtomSystem& sys = AtomSystem::standard()) {
  detail::require_embedding_level(level);
  const auto tables = finitize(x, y);
  auto routing = feasible_matching(detail::transport(tables, level, sys));
  if (!routing) return {};

  MatchingWitness witness{level, {}};
  // An omega source's sentinel demand exceeds all finite supply, so some share
  // lands where room is unlimited: an omega target, or any target at INJ.
  for (const auto& tr : *routing) {
    const bool unlimited = tables.target_omega[tr.target] || level == RelationLevel::Inj;
    const bool omega = tables.source_omega[tr.source] && unlimited;
    witness.transfers.push_back(
        {tables.sources[tr.source], tables.targets[tr.target], omega ? Count::omega() : Count(tr.amount)});
  }
  return {true, std::move(witness)};
}

/// Human-readable reason why x does not embed into y at `level`: the first
/// source atom without any admissible target, else the first atom whose
/// demand exceeds the capacity of all its admissible targets, else a generic
/// capacity conflict.
inline std::string explain_failure(const SymbolicSpace& x, const SymbolicSpace& y, RelationLevel level,
                                   const AtomSystem& sys = AtomSystem::standard()) {
  detail::require_embedding_level(level);
  const auto tables = finitize(x, y);
  const auto p = detail::transport(tables, level, sys);
  for (std::size_t i = 0; i < tables.sources.size(); ++i)
    if (p.edges[i].empty())
      return tables.sources[i].to_string() + " has no " + std::string(level_name(level)) + " target";
  if (!p.unbounded_supply)
    for (std::size_t i = 0; i < tables.sources.size(); ++i) {
      std::uint64_t room = 0;
      for (auto j : p.edges[i]) room += p.supply[j];
      if (room < p.demand[i])
        return tables.sources[i].to_string() + " needs " + x.count_of(tables.sources[i]).to_string() +
               " targets but only finitely many are available";
    }
  return "admissible targets are shared and cannot host every source copy";
}

/// Brute-force cross-check of `embeds`, deliberately not sharing its reduction.
///
/// Source copies become tokens: one per finite copy, and a single token for
/// an omega summand that must land in a slot of unlimited room. Target
/// copies become slots: capacity one at CLOPEN/CLOSED (unlimited at INJ), and
/// one unlimited slot per omega summand. Assignments are enumerated
/// exhaustively up to permuting interchangeable copies. Throws TooLarge when
/// there are more than `bound` tokens.
inline bool oracle_embeds(const SymbolicSpace& x, const SymbolicSpace& y, RelationLevel level,
                          std::size_t bound = 12, const AtomSystem& sys = AtomSystem::standard()) {
  detail::require_embedding_level(level);

  struct Token {
    std::size_t atom;
    bool omega;
  };
  struct Slot {
    std::size_t atom;
    bool unlimited;
    bool used = false;
  };

  std::vector<Atom> src_atoms, dst_atoms;
  std::vector<Token> tokens;
  for (const auto& [atom, count] : x.entries()) {
    src_atoms.push_back(atom);
    const auto copies = count.is_omega() ? 1 : count.value();
    for (std::uint64_t c = 0; c < copies; ++c) {
      tokens.push_back({src_atoms.size() - 1, count.is_omega()});
      if (tokens.size() > bound)
        throw Error(Errc::TooLarge, "oracle limited to " + std::to_string(bound) + " source copies");
    }
  }
  std::vector<Slot> slots;
  for (const auto& [atom, count] : y.entries()) {
    dst_atoms.push_back(atom);
    if (count.is_omega()) {
      slots.push_back({dst_atoms.size() - 1, true});
    } else {
      for (std::uint64_t c = 0; c < count.value(); ++c)
        slots.push_back({dst_atoms.size() - 1, level == RelationLevel::Inj});
    }
  }

  // Copies of one source atom are interchangeable, so they take slots in
  // nondecreasing order; this prunes permutations without losing assignments.
  std::vector<std::size_t> chosen(tokens.size(), 0);
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == tokens.size()) return true;
    const auto& tok = tokens[k];
    std::size_t first = 0;
    if (k > 0 && tokens[k - 1].atom == tok.atom) first = chosen[k - 1];
    for (std::size_t s = first; s < slots.size(); ++s) {
      auto& slot = slots[s];
      if (sys.rel(src_atoms[tok.atom], dst_atoms[slot.atom]) < level) continue;
      if (tok.omega && !slot.unlimited) continue;
      if (!slot.unlimited && slot.used) continue;
      chosen[k] = s;
      const bool was_used = slot.used;
      slot.used = true;
      if (self(self, k + 1)) return true;
      slot.used = was_used;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace qorep
