#include <gtest/gtest.h>

#include "qorep/atom_system.hpp"

namespace qorep {
namespace {

using L = RelationLevel;

Atom at(std::string_view s) { return parse_atom(s); }

L rel(std::string_view a, std::string_view b) { return AtomSystem::standard().rel(at(a), at(b)); }

TEST(Atom, ParseAndPrint) {
  EXPECT_EQ(at("B_a").family, AtomFamily::B);
  EXPECT_EQ(at("B_a").index, "a");
  EXPECT_EQ(at("H_q01").to_string(), "H_q01");
  EXPECT_THROW(at("Z_a"), Error);
  EXPECT_THROW(at("A"), Error);
  EXPECT_THROW(at("A_"), Error);
}

TEST(Atom, FamilyStructure) {
  EXPECT_EQ(family_system(AtomFamily::A), 1);
  EXPECT_EQ(family_system(AtomFamily::E), 2);
  EXPECT_EQ(family_system(AtomFamily::N), 3);
  EXPECT_EQ(family_system(AtomFamily::H), 4);
  for (auto f : kAllFamilies) EXPECT_EQ(partner(partner(f)), f);
  EXPECT_TRUE(indexed_by_element(AtomFamily::G));
  EXPECT_FALSE(indexed_by_element(AtomFamily::D));
}

TEST(AtomRel, Examples) {
  EXPECT_EQ(rel("A_x", "B_x"), L::Clopen);
  EXPECT_EQ(rel("D_x", "M_x"), L::None);
  EXPECT_EQ(rel("G_x", "G_x"), L::Homeo);
}

TEST(AtomRel, FullTableForOneIndex) {
  // Rows are sources, columns targets, in family order A B D E M N G H.
  const char* fam = "ABDEMNGH";
  const L N = L::None, I = L::Homeo, C = L::Closed, O = L::Clopen;
  const L table[8][8] = {
      {I, O, N, N, N, N, N, N},  // A
      {C, I, N, N, N, N, N, N},  // B
      {N, N, I, C, N, N, N, N},  // D
      {N, N, C, I, N, N, N, N},  // E
      {N, N, N, N, I, O, N, N},  // M
      {N, N, N, N, C, I, N, N},  // N
      {N, N, N, N, N, N, I, O},  // G
      {N, N, N, N, N, N, O, I},  // H
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const auto a = std::string(1, fam[i]) + "_x";
      const auto b = std::string(1, fam[j]) + "_x";
      EXPECT_EQ(rel(a, b), table[i][j]) << a << " -> " << b;
    }
}

TEST(AtomRel, HomeoOnlyOnIdentityAndNoneAcrossIndices) {
  const auto reg = atom_registry({"x", "y", "z"});
  for (const auto& a : reg)
    for (const auto& b : reg) {
      const auto level = AtomSystem::standard().rel(a, b);
      EXPECT_EQ(level == L::Homeo, a == b);
      if (a.index != b.index || family_system(a.family) != family_system(b.family)) {
        EXPECT_EQ(level, L::None);
      }
    }
}

TEST(AtomRel, SymmetricPairs) {
  EXPECT_EQ(rel("D_i", "E_i"), rel("E_i", "D_i"));
  EXPECT_EQ(rel("G_i", "H_i"), rel("H_i", "G_i"));
}

TEST(CompositionClosure, StandardMatrixUpToFiveIndices) {
  std::vector<std::string> indices;
  for (auto name : {"a", "b", "c", "d", "e"}) {
    indices.push_back(name);
    EXPECT_TRUE(matrix_is_composition_closed(AtomSystem::standard(), atom_registry(indices)));
  }
}

TEST(CompositionClosure, DetectsBrokenChain) {
  // D -> E -> D closed, but D -> D demoted below closed.
  auto broken = AtomSystem::standard().with_override(at("D_x"), at("D_x"), L::Inj);
  EXPECT_FALSE(matrix_is_composition_closed(broken, atom_registry({"x"})));
}

TEST(AuditAxioms, StandardIsClean) {
  EXPECT_TRUE(audit_axioms(AtomSystem::standard(), atom_registry({"a", "b", "c"})).empty());
}

TEST(AuditAxioms, EveryDowngradeIsFlagged) {
  const auto reg = atom_registry({"x", "y"});
  for (const auto& a : reg)
    for (const auto& b : reg) {
      const auto level = AtomSystem::standard().rel(a, b);
      if (level == L::None) continue;
      auto mutated = AtomSystem::standard().with_override(a, b, weaker(level));
      EXPECT_FALSE(audit_axioms(mutated, reg).empty()) << a.to_string() << " -> " << b.to_string();
    }
}

TEST(AuditAxioms, UpgradeAcrossSystemsIsFlagged) {
  auto mutated = AtomSystem::standard().with_override(at("B_x"), at("M_x"), L::Inj);
  EXPECT_FALSE(audit_axioms(mutated, atom_registry({"x"})).empty());
}

TEST(Levels, OrderAndNames) {
  EXPECT_LT(L::None, L::Inj);
  EXPECT_LT(L::Inj, L::Closed);
  EXPECT_LT(L::Closed, L::Clopen);
  EXPECT_LT(L::Clopen, L::Homeo);
  EXPECT_EQ(weaker(L::Clopen), L::Closed);
  EXPECT_EQ(weaker(L::None), L::None);
  EXPECT_EQ(level_name(L::Closed), "CLOSED");
}

}  // namespace
}  // namespace qorep
