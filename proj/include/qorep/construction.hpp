#pragma once

// Staged assembly of the spaces X(q).
//
// The input pair is first condensed by mutual <=1-comparability, so that
// every stage before the final lift runs over a partial order <=1. Stages:
//
//   stage1        B/A summands along the strict order < inside a <-component
//   stage2        adds B, D x omega, E x omega of sibling <-components sharing
//                 the same prec-component, and E x omega of the own one
//   stage2_tilde  adds the stage-2 summands of every prec-component strictly
//                 below in the induced component order
//   stage3        adds N/M summands over the precdot-component
//   lift          per original element: G of every other element, H of itself

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qorep/atom_system.hpp"
#include "qorep/order_core.hpp"
#include "qorep/relation.hpp"
#include "qorep/space.hpp"

namespace qorep {

struct Construction {
  std::map<ElementId, SymbolicSpace> spaces;
  SymbolicSpace ambient;
};

struct PipelineState {
  QuasiorderPair original;
  Partition classes;  // mutual <=1-classes of the original universe
  QuasiorderPair quotient;

  Relation strict;               // <
  Partition strict_components;   // components of <= (reflexive <)
  Relation prec;                 // transitive envelope of R
  Partition prec_components;     // components of prec-or-equal
  Relation precdot;              // transitive envelope of Rdot
  Partition precdot_components;  // components of precdot-or-equal
  ComponentOrder component_order;  // on prec_components

  std::map<BlockId, SymbolicSpace> stage1;
  std::map<BlockId, SymbolicSpace> stage2;
  std::map<BlockId, SymbolicSpace> stage2_tilde;
  std::map<BlockId, SymbolicSpace> stage3;

  Construction construction;
};

namespace detail {

inline void include_block(SymbolicSpace& space, const PipelineState& s, const Partition& parts, std::size_t block,
                          bool with_b, bool with_d, bool with_e) {
  for (auto i : parts.members(block)) {
    const auto& q = s.quotient.universe()[i];
    if (with_b) space.include(Atom{AtomFamily::B, q}, 1);
    if (with_d) space.include(Atom{AtomFamily::D, q}, Count::omega());
    if (with_e) space.include(Atom{AtomFamily::E, q}, Count::omega());
  }
}

/// D and E summands come in omega copies; everything else exactly once.
inline void check_multiplicities(const SymbolicSpace& space, const std::string& where) {
  for (const auto& [atom, count] : space.entries()) {
    const bool omega_family = atom.family == AtomFamily::D || atom.family == AtomFamily::E;
    if (omega_family ? !count.is_omega() : count != Count(1))
      throw std::logic_error("bad multiplicity of " + atom.to_string() + " in " + where);
  }
}

}  // namespace detail

inline SymbolicSpace build_S1(const PipelineState& s, const BlockId& q) {
  const auto& u = s.quotient.universe();
  const auto qi = s.strict.require(q);
  const auto own = s.strict_components.block_index_of(qi);
  SymbolicSpace out;
  for (std::size_t p = 0; p < u.size(); ++p) {
    const bool below = p == qi || s.strict.holds(p, qi);
    if (below)
      out.include(Atom{AtomFamily::B, u[p]}, 1);
    else if (s.strict_components.block_index_of(p) == own)
      out.include(Atom{AtomFamily::A, u[p]}, 1);
  }
  return out;
}

inline SymbolicSpace build_S2(const PipelineState& s, const BlockId& q) {
  const auto qi = s.strict.require(q);
  const auto own = s.strict_components.block_index_of(qi);
  const auto home = s.prec_components.block_index_of(qi);
  SymbolicSpace out = s.stage1.count(q) ? s.stage1.at(q) : build_S1(s, q);
  for (std::size_t c = 0; c < s.strict_components.block_count(); ++c) {
    const auto rep = s.strict_components.members(c).front();
    if (s.prec_components.block_index_of(rep) != home) continue;
    if (c == own)
      detail::include_block(out, s, s.strict_components, c, false, false, true);
    else
      detail::include_block(out, s, s.strict_components, c, true, true, true);
  }
  return out;
}

/// B, D x omega and E x omega over every member of one prec-component.
inline SymbolicSpace component_summands(const PipelineState& s, std::size_t prec_block) {
  SymbolicSpace out;
  detail::include_block(out, s, s.prec_components, prec_block, true, true, true);
  return out;
}

inline SymbolicSpace build_S2_tilde(const PipelineState& s, const BlockId& q) {
  const auto home = s.prec_components.block_index_of(s.strict.require(q));
  SymbolicSpace out = s.stage2.count(q) ? s.stage2.at(q) : build_S2(s, q);
  for (std::size_t lower = 0; lower < s.prec_components.block_count(); ++lower)
    if (lower != home && s.component_order.holds(lower, home)) out = out.united(component_summands(s, lower));
  return out;
}

inline SymbolicSpace build_S3(const PipelineState& s, const BlockId& q) {
  const auto& u = s.quotient.universe();
  const auto qi = s.strict.require(q);
  const auto tie = s.precdot_components.block_index_of(qi);
  SymbolicSpace out = s.stage2_tilde.count(q) ? s.stage2_tilde.at(q) : build_S2_tilde(s, q);
  for (auto p : s.precdot_components.members(tie)) {
    const auto family = s.quotient.leq1.holds(p, qi) ? AtomFamily::N : AtomFamily::M;
    out.include(Atom{family, u[p]}, 1);
  }
  return out;
}

/// Final spaces over the original elements.
inline std::map<ElementId, SymbolicSpace> lift_to_elements(const PipelineState& s) {
  std::map<ElementId, SymbolicSpace> out;
  const auto& elements = s.original.universe();
  for (const auto& q : elements) {
    SymbolicSpace space = s.stage3.at(s.classes.block_of(q));
    for (const auto& other : elements)
      if (other != q) space.include(Atom{AtomFamily::G, other}, 1);
    space.include(Atom{AtomFamily::H, q}, 1);
    out.emplace(q, std::move(space));
  }
  return out;
}

/// A, B, M, N once and D, E omega times per class, plus G once per element.
inline SymbolicSpace build_ambient(const QuasiorderPair& pair, const Partition& classes) {
  SymbolicSpace out;
  for (const auto& c : classes.names()) {
    for (auto f : {AtomFamily::A, AtomFamily::B, AtomFamily::M, AtomFamily::N}) out.include(Atom{f, c}, 1);
    for (auto f : {AtomFamily::D, AtomFamily::E}) out.include(Atom{f, c}, Count::omega());
  }
  for (const auto& q : pair.universe()) out.include(Atom{AtomFamily::G, q}, 1);
  return out;
}

/// Runs every stage and keeps all intermediate results.
inline PipelineState build_pipeline(const QuasiorderPair& pair) {
  PipelineState s;
  s.original = pair;
  s.classes = mutual_classes(pair.leq1);
  s.quotient = quotient_pair(pair, s.classes);

  s.strict = strict_order(s.quotient);
  s.strict_components = components(s.strict.with_diagonal());
  s.prec = transitive_envelope(relation_R(s.quotient, s.strict));
  s.prec_components = components(s.prec.with_diagonal());
  s.precdot = transitive_envelope(relation_Rdot(s.quotient, s.prec));
  s.precdot_components = components(s.precdot.with_diagonal());
  s.component_order = order_on_components(s.precdot, s.prec_components);

  const auto& blocks = s.quotient.universe();
  for (const auto& q : blocks) s.stage1[q] = build_S1(s, q);
  for (const auto& q : blocks) s.stage2[q] = build_S2(s, q);
  for (const auto& q : blocks) s.stage2_tilde[q] = build_S2_tilde(s, q);
  for (const auto& q : blocks) {
    s.stage3[q] = build_S3(s, q);
    detail::check_multiplicities(s.stage3[q], "stage 3 of " + q);
  }

  s.construction.spaces = lift_to_elements(s);
  s.construction.ambient = build_ambient(pair, s.classes);
  for (const auto& [q, space] : s.construction.spaces) detail::check_multiplicities(space, "X(" + q + ")");
  return s;
}

inline Construction construct(const QuasiorderPair& pair) { return build_pipeline(pair).construction; }

/// Structural invariants of a construction relative to its pipeline: stages
/// only add summands, each X(q) extends its class's stage-3 space by exactly
/// one H and |Q| - 1 G summands, and multiplicities follow the omega rule.
/// Returns one line per violation.
inline std::vector<std::string> check_construction_invariants(const PipelineState& s, const Construction& c) {
  std::vector<std::string> out;
  for (const auto& q : s.quotient.universe()) {
    if (!s.stage2.at(q).includes(s.stage1.at(q))) out.push_back("stage2(" + q + ") drops stage1 summands");
    if (!s.stage2_tilde.at(q).includes(s.stage2.at(q))) out.push_back("stage2~(" + q + ") drops stage2 summands");
    if (!s.stage3.at(q).includes(s.stage2_tilde.at(q))) out.push_back("stage3(" + q + ") drops stage2~ summands");
  }
  if (!s.strict_components.refines(s.prec_components)) out.push_back("a <-component straddles prec-components");
  if (!s.prec_components.refines(s.precdot_components))
    out.push_back("a prec-component straddles precdot-components");

  const auto n = s.original.size();
  if (c.spaces.size() != n) out.push_back("expected one space per element");
  for (const auto& [q, space] : c.spaces) {
    if (!s.original.leq1.index_of(q)) {
      out.push_back("space for unknown element " + q);
      continue;
    }
    std::size_t h_count = 0, g_count = 0;
    bool own_h = false, own_g = false;
    for (const auto& [atom, count] : space.entries()) {
      if (atom.family == AtomFamily::H) {
        ++h_count;
        own_h = own_h || atom.index == q;
      } else if (atom.family == AtomFamily::G) {
        ++g_count;
        own_g = own_g || atom.index == q;
      }
    }
    if (h_count != 1 || !own_h) out.push_back("X(" + q + ") must hold H_" + q + " and no other H");
    if (g_count != n - 1 || own_g) out.push_back("X(" + q + ") must hold G of every other element");
    if (!space.includes(s.stage3.at(s.classes.block_of(q))))
      out.push_back("X(" + q + ") drops summands of its class space");
    try {
      detail::check_multiplicities(space, "X(" + q + ")");
    } catch (const std::logic_error& e) {
      out.emplace_back(e.what());
    }
  }
  return out;
}

}  // namespace qorep
