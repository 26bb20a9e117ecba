#pragma once

// Rigid building-block atoms and the relation matrix between them.
//
// Atoms come in four two-member systems: {A, B}, {D, E}, {M, N}, {G, H}, one
// copy of each system per index. The matrix below is the whole semantics of
// the calculus; nothing is derived from point-set topology. It stands in for
// a concrete construction over a rigid family of connected metrizable spaces
// (every continuous map between two members is constant, or the identity of a
// single member):
//
//   A_i -> B_i  clopen        B_i -> A_i  closed, never clopen
//   D_i <-> E_i closed both ways, clopen neither way
//   M_i -> N_i  clopen        N_i -> M_i  closed, never clopen
//   G_i <-> H_i clopen both ways, yet G_i and H_i are not homeomorphic
//
// G and H are products of a rigid space with K and with K + K, where K is a
// closed subset of the Cantor set homeomorphic to K + K + K but not to K + K.
// Atoms with different indices, or from different systems, admit no
// one-to-one continuous map at all.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qorep/error.hpp"

namespace qorep {

enum class AtomFamily : std::uint8_t { A, B, D, E, M, N, G, H };

inline constexpr std::array<AtomFamily, 8> kAllFamilies = {AtomFamily::A, AtomFamily::B, AtomFamily::D,
                                                           AtomFamily::E, AtomFamily::M, AtomFamily::N,
                                                           AtomFamily::G, AtomFamily::H};

inline char family_letter(AtomFamily f) { return "ABDEMNGH"[static_cast<int>(f)]; }

inline AtomFamily family_from_letter(char c) {
  for (auto f : kAllFamilies)
    if (family_letter(f) == c) return f;
  throw Error(Errc::Schema, std::string("unknown atom family '") + c + "'");
}

/// 1..4 for {A,B}, {D,E}, {M,N}, {G,H}.
inline int family_system(AtomFamily f) { return static_cast<int>(f) / 2 + 1; }

inline AtomFamily partner(AtomFamily f) { return static_cast<AtomFamily>(static_cast<int>(f) ^ 1); }

/// A, B, D, E, M, N are indexed by quotient classes; G and H by elements.
inline bool indexed_by_element(AtomFamily f) { return family_system(f) == 4; }

struct Atom {
  AtomFamily family{AtomFamily::A};
  std::string index;

  std::string to_string() const { return std::string(1, family_letter(family)) + "_" + index; }

  friend auto operator<=>(const Atom& a, const Atom& b) {
    return std::tie(a.family, a.index) <=> std::tie(b.family, b.index);
  }
  friend bool operator==(const Atom&, const Atom&) = default;
};

inline Atom parse_atom(std::string_view text) {
  if (text.size() < 3 || text[1] != '_') throw Error(Errc::Schema, "malformed atom '" + std::string(text) + "'");
  return Atom{family_from_letter(text[0]), std::string(text.substr(2))};
}

// Strongest map type from one atom into another. Totally ordered: a
// homeomorphism is a clopen embedding, which is a closed embedding, which is
// one-to-one and continuous.
enum class RelationLevel : std::uint8_t { None, Inj, Closed, Clopen, Homeo };

inline std::string_view level_name(RelationLevel level) {
  switch (level) {
    case RelationLevel::None: return "NONE";
    case RelationLevel::Inj: return "INJ";
    case RelationLevel::Closed: return "CLOSED";
    case RelationLevel::Clopen: return "CLOPEN";
    case RelationLevel::Homeo: return "HOMEO";
  }
  return "?";
}

inline RelationLevel weaker(RelationLevel level) {
  return level == RelationLevel::None ? level : static_cast<RelationLevel>(static_cast<int>(level) - 1);
}

/// Fixed relation matrix, optionally with per-pair overrides (used to inject
/// faults in tests).
class AtomSystem {
 public:
  static const AtomSystem& standard() {
    static const AtomSystem instance;
    return instance;
  }

  static RelationLevel standard_level(const Atom& from, const Atom& to) {
    if (from == to) return RelationLevel::Homeo;
    if (from.index != to.index || family_system(from.family) != family_system(to.family))
      return RelationLevel::None;
    switch (from.family) {
      case AtomFamily::A: return RelationLevel::Clopen;  // into B
      case AtomFamily::B: return RelationLevel::Closed;  // into A
      case AtomFamily::D:
      case AtomFamily::E: return RelationLevel::Closed;
      case AtomFamily::M: return RelationLevel::Clopen;  // into N
      case AtomFamily::N: return RelationLevel::Closed;  // into M
      case AtomFamily::G:
      case AtomFamily::H: return RelationLevel::Clopen;
    }
    return RelationLevel::None;
  }

  RelationLevel rel(const Atom& from, const Atom& to) const {
    if (!overrides_.empty()) {
      auto it = overrides_.find({from, to});
      if (it != overrides_.end()) return it->second;
    }
    return standard_level(from, to);
  }

  AtomSystem with_override(const Atom& from, const Atom& to, RelationLevel level) const {
    AtomSystem copy = *this;
    copy.overrides_[{from, to}] = level;
    return copy;
  }

  bool is_standard() const { return overrides_.empty(); }

 private:
  std::map<std::pair<Atom, Atom>, RelationLevel> overrides_;
};

/// Every atom of every family over the given indices.
inline std::vector<Atom> atom_registry(const std::vector<std::string>& indices) {
  std::vector<Atom> out;
  for (auto f : kAllFamilies)
    for (const auto& i : indices) out.push_back(Atom{f, i});
  std::sort(out.begin(), out.end());
  return out;
}

/// rel(a, c) >= min(rel(a, b), rel(b, c)) whenever both exceed NONE.
inline bool matrix_is_composition_closed(const AtomSystem& sys, const std::vector<Atom>& registry) {
  for (const auto& a : registry)
    for (const auto& b : registry) {
      const auto ab = sys.rel(a, b);
      if (ab == RelationLevel::None) continue;
      for (const auto& c : registry) {
        const auto bc = sys.rel(b, c);
        if (bc == RelationLevel::None) continue;
        if (sys.rel(a, c) < std::min(ab, bc)) return false;
      }
    }
  return true;
}

/// Checks the matrix against the defining properties of the four systems and
/// returns a description of every violation (empty when sound).
inline std::vector<std::string> audit_axioms(const AtomSystem& sys, const std::vector<Atom>& registry) {
  using L = RelationLevel;
  std::vector<std::string> out;
  auto fail = [&](const Atom& a, const Atom& b, const char* what) {
    out.push_back(a.to_string() + " -> " + b.to_string() + ": " + what + " (got " +
                  std::string(level_name(sys.rel(a, b))) + ")");
  };

  for (const auto& a : registry)
    for (const auto& b : registry) {
      const auto level = sys.rel(a, b);
      if (a == b) {
        if (level != L::Homeo) fail(a, b, "identity must be a homeomorphism");
        continue;
      }
      if (level == L::Homeo) fail(a, b, "distinct atoms are never homeomorphic");
      if (a.index != b.index || family_system(a.family) != family_system(b.family)) {
        if (level != L::None) fail(a, b, "no one-to-one map across indices or systems");
        continue;
      }
      switch (a.family) {
        case AtomFamily::A:
        case AtomFamily::M:
          if (level < L::Clopen) fail(a, b, "must embed as a clopen subspace");
          break;
        case AtomFamily::B:
        case AtomFamily::N:
          if (level != L::Closed) fail(a, b, "must embed as closed but not clopen");
          break;
        case AtomFamily::D:
        case AtomFamily::E:
          if (level != L::Closed) fail(a, b, "must embed as closed but not clopen");
          break;
        case AtomFamily::G:
        case AtomFamily::H:
          if (level != L::Clopen) fail(a, b, "must embed as clopen without being homeomorphic");
          break;
      }
    }
  if (!matrix_is_composition_closed(sys, registry)) out.emplace_back("matrix is not closed under composition");
  return out;
}

}  // namespace qorep
