#pragma once

// Graphviz text output.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "qorep/calculus.hpp"
#include "qorep/construction.hpp"
#include "qorep/verifier.hpp"

namespace qorep {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Covering pairs of a strict order: p < q with nothing strictly between.
inline std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Relation& strict) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = strict.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !strict.holds(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && strict.holds(i, k) && strict.holds(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace detail

/// Hasse diagram of the strict order on the classes, nested in clusters for
/// precdot-components > prec-components > <-components, plus the component
/// order between prec-components as dashed cluster-to-cluster edges.
inline std::string export_dot(const PipelineState& s) {
  using detail::dot_quote;
  const auto& u = s.quotient.universe();
  std::ostringstream os;
  os << "digraph pipeline {\n  compound=true;\n  rankdir=BT;\n  node [shape=ellipse];\n";

  for (std::size_t t = 0; t < s.precdot_components.block_count(); ++t) {
    os << "  subgraph " << dot_quote("cluster_T_" + s.precdot_components.name(t)) << " {\n";
    os << "    label=" << dot_quote("T " + s.precdot_components.name(t)) << ";\n    style=dotted;\n";
    for (std::size_t l = 0; l < s.prec_components.block_count(); ++l) {
      const auto lrep = s.prec_components.members(l).front();
      if (s.precdot_components.block_index_of(lrep) != t) continue;
      os << "    subgraph " << dot_quote("cluster_L_" + s.prec_components.name(l)) << " {\n";
      os << "      label=" << dot_quote("L " + s.prec_components.name(l)) << ";\n      style=dashed;\n";
      for (std::size_t c = 0; c < s.strict_components.block_count(); ++c) {
        const auto crep = s.strict_components.members(c).front();
        if (s.prec_components.block_index_of(crep) != l) continue;
        os << "      subgraph " << dot_quote("cluster_C_" + s.strict_components.name(c)) << " {\n";
        os << "        label=" << dot_quote("C " + s.strict_components.name(c)) << ";\n";
        for (auto i : s.strict_components.members(c)) {
          const auto members = s.classes.member_labels(s.classes.block_index_of(u[i]));
          std::string label;
          for (const auto& m : members) label += (label.empty() ? "" : "~") + m;
          os << "        " << dot_quote(u[i]) << " [label=" << dot_quote(label) << "];\n";
        }
        os << "      }\n";
      }
      os << "    }\n";
    }
    os << "  }\n";
  }

  for (const auto& [i, j] : detail::covering_pairs(s.strict))
    os << "  " << dot_quote(u[i]) << " -> " << dot_quote(u[j]) << ";\n";

  const auto& order = s.component_order;
  for (const auto& [a, b] : detail::covering_pairs(order.without_diagonal())) {
    const auto from = s.prec_components.members(a).front();
    const auto to = s.prec_components.members(b).front();
    os << "  " << dot_quote(u[from]) << " -> " << dot_quote(u[to]) << " [style=dashed, ltail="
       << dot_quote("cluster_L_" + order.label(a)) << ", lhead=" << dot_quote("cluster_L_" + order.label(b))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

/// Strongest embedding found between distinct elements; failing verdicts in red.
inline std::string export_dot(const VerificationReport& r) {
  using detail::dot_quote;
  std::ostringstream os;
  os << "digraph verdicts {\n";
  std::vector<std::string> nodes;
  for (const auto& v : r.verdicts)
    if (v.q == v.q_prime) nodes.push_back(v.q);
  for (const auto& n : nodes) os << "  " << dot_quote(n) << ";\n";
  for (const auto& v : r.verdicts) {
    if (v.q == v.q_prime) continue;
    const char* kind = v.clopen ? "clopen" : v.closed ? "closed" : v.inj ? "inj" : nullptr;
    if (!kind && v.ok()) continue;
    os << "  " << dot_quote(v.q) << " -> " << dot_quote(v.q_prime) << " [label=" << dot_quote(kind ? kind : "none");
    if (!v.ok()) os << ", color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

/// Bipartite drawing of a matching witness.
inline std::string export_dot(const MatchingWitness& w) {
  using detail::dot_quote;
  std::ostringstream os;
  os << "digraph witness {\n  rankdir=LR;\n";
  std::vector<std::string> sources, targets;
  for (const auto& t : w.transfers) {
    if (std::find(sources.begin(), sources.end(), t.source.to_string()) == sources.end())
      sources.push_back(t.source.to_string());
    if (std::find(targets.begin(), targets.end(), t.target.to_string()) == targets.end())
      targets.push_back(t.target.to_string());
  }
  os << "  subgraph cluster_source {\n    label=\"source\";\n";
  for (const auto& s : sources) os << "    " << dot_quote("src:" + s) << " [label=" << dot_quote(s) << "];\n";
  os << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  for (const auto& t : targets) os << "    " << dot_quote("dst:" + t) << " [label=" << dot_quote(t) << "];\n";
  os << "  }\n";
  for (const auto& t : w.transfers) {
    std::string label(level_name(w.level));
    if (t.amount != Count(1)) label += " x" + t.amount.to_string();
    os << "  " << dot_quote("src:" + t.source.to_string()) << " -> " << dot_quote("dst:" + t.target.to_string())
       << " [label=" << dot_quote(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qorep
