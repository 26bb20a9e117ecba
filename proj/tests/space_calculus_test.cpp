#include <gtest/gtest.h>

#include <map>

#include "qorep/calculus.hpp"
#include "qorep/generators.hpp"
#include "qorep/matching.hpp"
#include "qorep/space.hpp"

namespace qorep {
namespace {

using L = RelationLevel;
constexpr L kLevels[] = {L::Clopen, L::Closed, L::Inj};

Atom at(std::string_view s) { return parse_atom(s); }
const Count w = Count::omega();

TEST(Count, Arithmetic) {
  EXPECT_EQ(Count(2) + Count(3), Count(5));
  EXPECT_EQ(Count(2) + w, w);
  EXPECT_EQ(w + w, w);
  EXPECT_LT(Count(1000000), w);
  EXPECT_EQ(w.to_string(), "omega");
}

TEST(SymbolicSpace, Normalize) {
  EXPECT_EQ(SymbolicSpace::normalize({{at("A_x"), 2}, {at("A_x"), 3}}), (SymbolicSpace{{at("A_x"), 5}}));
  EXPECT_EQ(SymbolicSpace::normalize({{at("D_x"), w}, {at("D_x"), w}}), (SymbolicSpace{{at("D_x"), w}}));
  auto s = SymbolicSpace::normalize({{at("B_x"), 0}, {at("A_x"), 1}});
  EXPECT_EQ(s, (SymbolicSpace{{at("A_x"), 1}}));
  EXPECT_FALSE(s.contains(at("B_x")));
}

TEST(SymbolicSpace, CoproductUnionAndInclusion) {
  SymbolicSpace a{{at("A_x"), 1}, {at("D_x"), w}};
  SymbolicSpace b{{at("A_x"), 2}, {at("E_x"), 1}};
  EXPECT_EQ(a + b, (SymbolicSpace{{at("A_x"), 3}, {at("D_x"), w}, {at("E_x"), 1}}));
  EXPECT_EQ(a.united(b), (SymbolicSpace{{at("A_x"), 2}, {at("D_x"), w}, {at("E_x"), 1}}));
  EXPECT_TRUE((a + b).includes(a));
  EXPECT_FALSE(a.includes(b));
  EXPECT_EQ(a.to_string(), "{A_x, D_x:omega}");
}

TEST(Homeomorphism, Examples) {
  SymbolicSpace x{{at("D_x"), w}, {at("E_x"), w}};
  EXPECT_TRUE(is_homeomorphic(x, x));
  EXPECT_FALSE(is_homeomorphic(SymbolicSpace{{at("G_a"), 1}}, SymbolicSpace{{at("H_a"), 1}}));
  EXPECT_TRUE(is_homeomorphic(x, SymbolicSpace{{at("E_x"), w}, {at("D_x"), w}}));
}

TEST(Embeds, Examples) {
  EXPECT_TRUE(embeddable({{at("A_x"), 1}}, {{at("B_x"), 1}}, L::Clopen));

  SymbolicSpace x{{at("E_x"), w}, {at("D_x"), w}, {at("E_y"), w}};
  SymbolicSpace y{{at("E_y"), w}, {at("D_y"), w}, {at("E_x"), w}};
  EXPECT_TRUE(embeddable(x, y, L::Closed));
  EXPECT_FALSE(embeddable(x, y, L::Clopen));

  EXPECT_FALSE(embeddable({{at("B_x"), 1}}, {{at("M_x"), 1}}, L::Inj));
}

TEST(Embeds, CapacityRule) {
  SymbolicSpace two_a{{at("A_x"), 2}};
  SymbolicSpace one_b{{at("B_x"), 1}};
  EXPECT_FALSE(embeddable(two_a, one_b, L::Clopen));
  EXPECT_FALSE(embeddable(two_a, one_b, L::Closed));
  EXPECT_TRUE(embeddable(two_a, one_b, L::Inj));
  EXPECT_TRUE(embeddable(two_a, {{at("B_x"), w}}, L::Clopen));
  EXPECT_FALSE(embeddable({{at("D_x"), w}}, {{at("E_x"), 3}}, L::Closed));
  EXPECT_TRUE(embeddable({{at("D_x"), w}}, {{at("E_x"), 3}}, L::Inj));
}

TEST(Embeds, RejectsNonEmbeddingLevels) {
  for (auto level : {L::None, L::Homeo}) {
    try {
      embeddable({}, {}, level);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidLevel);
    }
  }
}

TEST(Embeds, WitnessContents) {
  auto r = embeds({{at("A_x"), 1}}, {{at("B_x"), 1}}, L::Clopen);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->transfers, (std::vector<MatchingTransfer>{{at("A_x"), at("B_x"), 1}}));

  // Earliest admissible target first: A_x reaches itself before B_x.
  auto s = embeds({{at("A_x"), 2}}, {{at("A_x"), 1}, {at("B_x"), 1}}, L::Clopen);
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(s.witness->transfers,
            (std::vector<MatchingTransfer>{{at("A_x"), at("A_x"), 1}, {at("A_x"), at("B_x"), 1}}));

  auto o = embeds({{at("D_x"), w}}, {{at("E_x"), w}}, L::Closed);
  ASSERT_TRUE(o.witness);
  EXPECT_EQ(o.witness->transfers, (std::vector<MatchingTransfer>{{at("D_x"), at("E_x"), w}}));

  EXPECT_FALSE(embeds({{at("B_x"), 1}}, {{at("M_x"), 1}}, L::Inj).witness);
}

// Independent check of a witness against the capacity rule.
void expect_valid_witness(const SymbolicSpace& x, const SymbolicSpace& y, const MatchingWitness& wit) {
  std::map<Atom, Count> sent, received;
  std::map<Atom, std::uint64_t> finite_received;
  for (const auto& t : wit.transfers) {
    ASSERT_GE(AtomSystem::standard().rel(t.source, t.target), wit.level);
    ASSERT_FALSE(t.amount.is_zero());
    sent[t.source] = sent[t.source] + t.amount;
    if (!t.amount.is_omega()) finite_received[t.target] += t.amount.value();
  }
  for (const auto& [atom, count] : x.entries())
    if (count.is_omega())
      ASSERT_TRUE(sent[atom].is_omega()) << atom.to_string();
    else
      ASSERT_EQ(sent[atom], count) << atom.to_string();
  if (wit.level == L::Inj) return;
  for (const auto& [atom, got] : finite_received) {
    const auto cap = y.count_of(atom);
    if (!cap.is_omega()) {
      ASSERT_LE(got, cap.value()) << atom.to_string();
    }
  }
}

TEST(Embeds, WitnessesRespectCapacity) {
  Rng rng(3);
  SpaceShape shape;
  for (int trial = 0; trial < 600; ++trial) {
    auto [x, y] = random_space_pair(rng, shape);
    for (auto level : kLevels) {
      auto r = embeds(x, y, level);
      ASSERT_EQ(r.embeds, embeddable(x, y, level));
      if (r.embeds) expect_valid_witness(x, y, *r.witness);
    }
  }
}

TEST(ExplainFailure, NamesFirstUnroutableAtom) {
  EXPECT_EQ(explain_failure({{at("B_x"), 1}}, {{at("M_x"), 1}}, L::Inj), "B_x has no INJ target");
  EXPECT_NE(explain_failure({{at("A_x"), 2}}, {{at("B_x"), 1}}, L::Clopen).find("A_x needs 2"), std::string::npos);
}

TEST(Finitize, Examples) {
  auto t = finitize({{at("A_x"), 1}}, {{at("B_x"), 1}});
  EXPECT_EQ(t.sentinel, 5u);  // 1 + two finite copies + two atom types
  EXPECT_EQ(t.demand, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(t.supply, (std::vector<std::uint64_t>{1}));

  auto u = finitize({{at("D_x"), w}}, {{at("E_x"), w}});
  EXPECT_EQ(u.demand, (std::vector<std::uint64_t>{u.sentinel}));
  EXPECT_EQ(u.supply, (std::vector<std::uint64_t>{u.sentinel}));

  auto v = finitize({{at("D_x"), w}}, {{at("E_x"), 3}});
  EXPECT_GT(v.demand[0], v.supply[0]);
}

TEST(Matching, Examples) {
  TransportProblem p{{1}, {1}, {{0}}, false};
  EXPECT_TRUE(is_feasible(p));
  EXPECT_EQ(*feasible_matching(p), (std::vector<Transfer>{{0, 0, 1}}));

  TransportProblem q{{2}, {1}, {{0}}, false};
  EXPECT_FALSE(is_feasible(q));
  EXPECT_FALSE(feasible_matching(q));

  q.unbounded_supply = true;
  EXPECT_TRUE(is_feasible(q));
}

TEST(Matching, HallViolationOnSharedTargets) {
  // Two sources both confined to one unit target.
  TransportProblem p{{1, 1}, {1, 5}, {{0}, {0}}, false};
  EXPECT_FALSE(is_feasible(p));
  p.edges[1].push_back(1);
  auto m = feasible_matching(p);
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (std::vector<Transfer>{{0, 0, 1}, {1, 1, 1}}));
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_embeds({{at("A_x"), 1}}, {{at("B_x"), 1}}, L::Clopen));
  SymbolicSpace x{{at("E_x"), w}, {at("D_x"), w}, {at("E_y"), w}};
  SymbolicSpace y{{at("E_y"), w}, {at("D_y"), w}, {at("E_x"), w}};
  EXPECT_TRUE(oracle_embeds(x, y, L::Closed));
  EXPECT_FALSE(oracle_embeds(x, y, L::Clopen));
  EXPECT_FALSE(oracle_embeds({{at("B_x"), 1}}, {{at("M_x"), 1}}, L::Inj));
  for (auto level : kLevels) {
    EXPECT_TRUE(oracle_embeds({}, y, level));
    EXPECT_TRUE(oracle_embeds({}, {}, level));
    EXPECT_FALSE(oracle_embeds({{at("A_x"), 1}}, {}, level));
  }
}

TEST(Oracle, RefusesLargeInstances) {
  try {
    oracle_embeds({{at("A_x"), 13}}, {{at("B_x"), w}}, L::Clopen);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
  EXPECT_TRUE(oracle_embeds({{at("A_x"), 13}}, {{at("B_x"), w}}, L::Clopen, 13));
}

TEST(Oracle, AgreesWithCalculus) {
  Rng rng(41);
  SpaceShape shape;
  shape.max_source_copies = 12;
  for (auto level : kLevels)
    for (int trial = 0; trial < 300; ++trial) {
      auto [x, y] = random_space_pair(rng, shape);
      ASSERT_EQ(embeddable(x, y, level), oracle_embeds(x, y, level)) << x.to_string() << " into " << y.to_string();
    }
}

TEST(Properties, MonotoneInLevelAndReflexive) {
  Rng rng(43);
  SpaceShape shape;
  for (int trial = 0; trial < 1000; ++trial) {
    auto [x, y] = random_space_pair(rng, shape);
    if (embeddable(x, y, L::Clopen)) {
      ASSERT_TRUE(embeddable(x, y, L::Closed));
    }
    if (embeddable(x, y, L::Closed)) {
      ASSERT_TRUE(embeddable(x, y, L::Inj));
    }
    for (auto level : kLevels) ASSERT_TRUE(embeddable(x, x, level));
    if (is_homeomorphic(x, y)) {
      ASSERT_TRUE(embeddable(x, y, L::Clopen));
      ASSERT_TRUE(embeddable(y, x, L::Clopen));
    }
  }
}

TEST(Properties, Transitive) {
  Rng rng(47);
  SpaceShape shape;
  shape.indices = {"x"};
  shape.max_types = 4;
  std::size_t chains = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto x = random_space(rng, rng.between(1, 3), shape);
    auto y = random_space(rng, rng.between(1, 4), shape);
    auto z = random_space(rng, rng.between(1, 4), shape);
    for (auto level : kLevels)
      if (embeddable(x, y, level) && embeddable(y, z, level)) {
        ++chains;
        ASSERT_TRUE(embeddable(x, z, level)) << x.to_string() << " " << y.to_string() << " " << z.to_string();
      }
  }
  EXPECT_GT(chains, 100u);
}

TEST(Properties, CoproductPreservesEmbeddings) {
  Rng rng(53);
  SpaceShape shape;
  for (int trial = 0; trial < 1000; ++trial) {
    auto [x, y] = random_space_pair(rng, shape);
    auto extra = random_space(rng, rng.between(0, 3), shape);
    for (auto level : kLevels) {
      if (embeddable(x, y, level)) {
        ASSERT_TRUE(embeddable(x + extra, y + extra, level));
      }
    }
  }
}

TEST(Properties, UnreachableAtomStaysUnreachable) {
  Rng rng(59);
  SpaceShape shape;
  for (int trial = 0; trial < 1000; ++trial) {
    auto [x, y] = random_space_pair(rng, shape);
    auto extra = random_space(rng, rng.between(0, 3), shape);
    for (const auto& [a, count] : x.entries()) {
      auto reaches = [&](const SymbolicSpace& s) {
        for (const auto& [b, c] : s.entries())
          if (AtomSystem::standard().rel(a, b) >= L::Inj) return true;
        return false;
      };
      if (reaches(y) || reaches(extra)) continue;
      ASSERT_FALSE(embeddable(x, y, L::Inj));
      ASSERT_FALSE(embeddable(x + extra, y + extra, L::Inj));
    }
  }
}

}  // namespace
}  // namespace qorep
