#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qorep/atom_system.hpp"
#include "qorep/error.hpp"

namespace qorep {

/// Multiplicity of an atom in a coproduct: a natural number or omega
/// (countably many copies). Omega absorbs any addition.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  static constexpr Count omega() {
    Count c;
    c.omega_ = true;
    return c;
  }

  constexpr bool is_omega() const noexcept { return omega_; }
  constexpr bool is_zero() const noexcept { return !omega_ && value_ == 0; }
  /// Finite value; meaningless for omega.
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr Count operator+(Count a, Count b) {
    if (a.omega_ || b.omega_) return omega();
    return Count(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Count a, Count b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(Count a, Count b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return omega_ ? "omega" : std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
  bool omega_ = false;
};

/// Coproduct of atoms as a normalized multiset: no zero entries, ordered by atom.
class SymbolicSpace {
 public:
  using Entries = std::map<Atom, Count>;

  SymbolicSpace() = default;

  SymbolicSpace(std::initializer_list<std::pair<Atom, Count>> raw) {
    for (const auto& [atom, count] : raw) add(atom, count);
  }

  /// Accumulates repeated atoms and drops zero counts.
  static SymbolicSpace normalize(const std::vector<std::pair<Atom, Count>>& raw) {
    SymbolicSpace out;
    for (const auto& [atom, count] : raw) out.add(atom, count);
    return out;
  }

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t type_count() const noexcept { return entries_.size(); }

  Count count_of(const Atom& atom) const {
    auto it = entries_.find(atom);
    return it == entries_.end() ? Count(0) : it->second;
  }

  bool contains(const Atom& atom) const { return entries_.count(atom) != 0; }

  void add(const Atom& atom, Count count) {
    if (count.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(atom, count);
    if (!inserted) it->second = it->second + count;
  }

  /// Set-style insertion: keeps the larger multiplicity.
  void include(const Atom& atom, Count count) {
    if (count.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(atom, count);
    if (!inserted) it->second = std::max(it->second, count);
  }

  void erase(const Atom& atom) { entries_.erase(atom); }

  /// Coproduct: entrywise addition.
  friend SymbolicSpace operator+(SymbolicSpace a, const SymbolicSpace& b) {
    for (const auto& [atom, count] : b.entries_) a.add(atom, count);
    return a;
  }

  /// Union of the underlying sets of summands.
  SymbolicSpace united(const SymbolicSpace& other) const {
    SymbolicSpace out = *this;
    for (const auto& [atom, count] : other.entries_) out.include(atom, count);
    return out;
  }

  /// Sub-multiset test.
  bool includes(const SymbolicSpace& other) const {
    return std::all_of(other.entries_.begin(), other.entries_.end(),
                       [&](const auto& e) { return count_of(e.first) >= e.second; });
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [atom, count] : entries_) {
      if (!first) out += ", ";
      first = false;
      out += atom.to_string();
      if (count != Count(1)) out += ":" + count.to_string();
    }
    return out + "}";
  }

  friend bool operator==(const SymbolicSpace&, const SymbolicSpace&) = default;

 private:
  Entries entries_;
};

/// Two coproducts of pairwise non-homeomorphic connected rigid atoms are
/// homeomorphic exactly when their atom multisets coincide.
inline bool is_homeomorphic(const SymbolicSpace& x, const SymbolicSpace& y) { return x == y; }

}  // namespace qorep
