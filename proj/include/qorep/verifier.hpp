#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qorep/atom_system.hpp"
#include "qorep/calculus.hpp"
#include "qorep/construction.hpp"
#include "qorep/relation.hpp"

namespace qorep {

/// Verdict for one ordered pair (q, q').
///   condition 1: q <=1 q'  iff  X(q) is clopen in X(q')
///   condition 2: q <=2 q'  implies X(q) is closed in X(q')
///   condition 3: not q <=2 q' implies no one-to-one map X(q) -> X(q')
struct PairVerdict {
  ElementId q;
  ElementId q_prime;
  bool leq1 = false;
  bool leq2 = false;
  bool clopen = false;
  bool closed = false;
  bool inj = false;
  bool homeo = false;
  bool condition1_ok = false;
  bool condition2_ok = false;
  bool condition3_ok = false;
  /// Converse of condition 2; recorded, not required.
  bool closed_implies_leq2 = false;
  std::optional<MatchingWitness> witness;
  std::string explanation;

  bool ok() const { return condition1_ok && condition2_ok && condition3_ok; }
};

struct VerificationReport {
  std::vector<PairVerdict> verdicts;  // ordered by (q, q')
  bool all_pairwise_nonhomeomorphic = true;
  bool all_clopen_in_ambient = true;
  std::vector<ElementId> ambient_failures;
  bool pass = false;

  std::size_t failed_verdicts() const {
    std::size_t n = 0;
    for (const auto& v : verdicts) n += v.ok() ? 0 : 1;
    return n;
  }
};

struct VerifyOptions {
  bool witnesses = false;
  const AtomSystem* atoms = &AtomSystem::standard();
};

inline PairVerdict verify_pair(const QuasiorderPair& pair, const Construction& c, const ElementId& q,
                               const ElementId& q_prime, const VerifyOptions& opt = {}) {
  const auto& sys = *opt.atoms;
  const auto& x = c.spaces.at(q);
  const auto& y = c.spaces.at(q_prime);

  PairVerdict v;
  v.q = q;
  v.q_prime = q_prime;
  v.leq1 = pair.leq1.holds(q, q_prime);
  v.leq2 = pair.leq2.holds(q, q_prime);
  v.clopen = embeddable(x, y, RelationLevel::Clopen, sys);
  v.closed = embeddable(x, y, RelationLevel::Closed, sys);
  v.inj = embeddable(x, y, RelationLevel::Inj, sys);
  v.homeo = is_homeomorphic(x, y);
  v.condition1_ok = v.leq1 == v.clopen;
  v.condition2_ok = !v.leq2 || v.closed;
  v.condition3_ok = v.leq2 || !v.inj;
  v.closed_implies_leq2 = !v.closed || v.leq2;

  if (v.leq1 && !v.clopen)
    v.explanation = explain_failure(x, y, RelationLevel::Clopen, sys);
  else if (!v.leq1 && v.clopen)
    v.explanation = "unexpected CLOPEN embedding although not " + q + " <=1 " + q_prime;
  else if (!v.condition2_ok)
    v.explanation = explain_failure(x, y, RelationLevel::Closed, sys);
  else if (!v.condition3_ok)
    v.explanation = "unexpected one-to-one map although not " + q + " <=2 " + q_prime;

  if (opt.witnesses || !v.ok()) {
    for (auto level : {RelationLevel::Clopen, RelationLevel::Closed, RelationLevel::Inj}) {
      auto r = embeds(x, y, level, sys);
      if (r.embeds) {
        v.witness = std::move(r.witness);
        break;
      }
    }
  }
  return v;
}

/// Checks every ordered pair, pairwise non-homeomorphism and clopen
/// containment in the ambient space. Failures are report content.
inline VerificationReport verify(const QuasiorderPair& pair, const Construction& c, const VerifyOptions& opt = {}) {
  VerificationReport r;
  const auto& u = pair.universe();
  for (const auto& q : u)
    for (const auto& qp : u) {
      auto v = verify_pair(pair, c, q, qp, opt);
      if (q != qp && v.homeo) r.all_pairwise_nonhomeomorphic = false;
      r.verdicts.push_back(std::move(v));
    }
  for (const auto& q : u)
    if (!embeddable(c.spaces.at(q), c.ambient, RelationLevel::Clopen, *opt.atoms)) {
      r.all_clopen_in_ambient = false;
      r.ambient_failures.push_back(q);
    }
  r.pass = r.failed_verdicts() == 0 && r.all_pairwise_nonhomeomorphic && r.all_clopen_in_ambient;
  return r;
}

struct IntermediateReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the stage-1 and stage-2 relations between spaces that the later
/// stages rely on:
///   - inside one <-component, q < q' iff stage1(q) is clopen in stage1(q')
///     while stage1(q') is closed but not clopen in stage1(q); across
///     <-components, no one-to-one map between stage-1 spaces;
///   - inside one <-component, stage-2 verdicts equal the stage-1 verdicts;
///   - across <-components of one prec-component, stage-2 spaces embed as
///     closed both ways and as clopen neither way;
///   - inside one prec-component, <=1 matches clopen and <=2 matches closed
///     for stage-2 spaces.
inline IntermediateReport verify_intermediate(const PipelineState& s, const AtomSystem& sys = AtomSystem::standard()) {
  using L = RelationLevel;
  IntermediateReport r;
  const auto& u = s.quotient.universe();
  auto expect = [&](bool holds, const std::string& what) {
    ++r.checks;
    if (!holds) r.violations.push_back(what);
  };

  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (i == j) continue;
      const auto& q = u[i];
      const auto& qp = u[j];
      const auto tag = "(" + q + ", " + qp + ")";
      const auto& x1 = s.stage1.at(q);
      const auto& y1 = s.stage1.at(qp);
      const auto& x2 = s.stage2.at(q);
      const auto& y2 = s.stage2.at(qp);

      if (s.strict_components.same_block(i, j)) {
        const bool shape = embeddable(x1, y1, L::Clopen, sys) && embeddable(y1, x1, L::Closed, sys) &&
                           !embeddable(y1, x1, L::Clopen, sys);
        expect(s.strict.holds(i, j) == shape, "stage1 " + tag + ": strict order disagrees with embeddings");
        for (auto level : {L::Clopen, L::Closed, L::Inj})
          expect(embeddable(x1, y1, level, sys) == embeddable(x2, y2, level, sys),
                 "stage2 " + tag + ": " + std::string(level_name(level)) + " verdict differs from stage1");
      } else {
        expect(!embeddable(x1, y1, L::Inj, sys), "stage1 " + tag + ": one-to-one map across <-components");
        if (s.prec_components.same_block(i, j)) {
          expect(embeddable(x2, y2, L::Closed, sys) && embeddable(y2, x2, L::Closed, sys),
                 "stage2 " + tag + ": sibling <-components must be closed both ways");
          expect(!embeddable(x2, y2, L::Clopen, sys) && !embeddable(y2, x2, L::Clopen, sys),
                 "stage2 " + tag + ": sibling <-components must be clopen neither way");
        }
      }
      if (s.prec_components.same_block(i, j)) {
        expect(s.quotient.leq1.holds(i, j) == embeddable(x2, y2, L::Clopen, sys),
               "stage2 " + tag + ": <=1 does not match clopen");
        expect(s.quotient.leq2.holds(i, j) == embeddable(x2, y2, L::Closed, sys),
               "stage2 " + tag + ": <=2 does not match closed");
      }
    }
  return r;
}

}  // namespace qorep
