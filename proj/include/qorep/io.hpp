#pragma once

// JSON documents: input pairs, constructions, witnesses and reports.
// Reflexive pairs are implied and never written; omega is the string "omega".

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qorep/calculus.hpp"
#include "qorep/construction.hpp"
#include "qorep/error.hpp"
#include "qorep/order_core.hpp"
#include "qorep/verifier.hpp"

namespace qorep {

using Json = nlohmann::ordered_json;

struct InputDocument {
  std::vector<std::string> elements;
  std::vector<LabelPair> leq1;
  std::vector<LabelPair> leq2;
  bool autoclose = false;
};

namespace detail {

inline std::vector<LabelPair> read_pairs(const Json& doc, const char* field, const std::vector<std::string>& known) {
  std::vector<LabelPair> out;
  if (!doc.contains(field)) return out;
  const auto& arr = doc.at(field);
  if (!arr.is_array()) throw Error(Errc::Schema, std::string(field) + ": expected an array of pairs");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& p = arr[k];
    const auto where = std::string(field) + "[" + std::to_string(k) + "]";
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw Error(Errc::Schema, where + ": expected [\"label\", \"label\"]");
    for (std::size_t side = 0; side < 2; ++side) {
      const auto label = p[side].get<std::string>();
      if (std::find(known.begin(), known.end(), label) == known.end())
        throw Error(Errc::UnknownElement, where + ": '" + label + "' is not listed in elements");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

}  // namespace detail

inline InputDocument read_input_document(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::Schema, "document must be an object");
  if (!doc.contains("elements") || !doc.at("elements").is_array())
    throw Error(Errc::Schema, "elements: expected an array of labels");
  InputDocument in;
  const auto& elems = doc.at("elements");
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (!elems[k].is_string() || elems[k].get<std::string>().empty())
      throw Error(Errc::Schema, "elements[" + std::to_string(k) + "]: expected a nonempty string");
    const auto label = elems[k].get<std::string>();
    if (std::find(in.elements.begin(), in.elements.end(), label) != in.elements.end())
      throw Error(Errc::DuplicateElement, "elements[" + std::to_string(k) + "]: '" + label + "' repeated");
    in.elements.push_back(label);
  }
  in.leq1 = detail::read_pairs(doc, "leq1", in.elements);
  in.leq2 = detail::read_pairs(doc, "leq2", in.elements);
  if (doc.contains("options")) {
    const auto& opt = doc.at("options");
    if (!opt.is_object()) throw Error(Errc::Schema, "options: expected an object");
    if (opt.contains("autoclose")) {
      if (!opt.at("autoclose").is_boolean()) throw Error(Errc::Schema, "options.autoclose: expected a boolean");
      in.autoclose = opt.at("autoclose").get<bool>();
    }
  }
  return in;
}

/// Parses and validates an input document. `force_autoclose` ORs into the
/// document's own option.
inline QuasiorderPair parse_input(const std::string& text, bool force_autoclose = false) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Schema, std::string("not valid JSON: ") + e.what());
  }
  const auto in = read_input_document(doc);
  return validate_pair(in.elements, in.leq1, in.leq2, in.autoclose || force_autoclose);
}

inline Json to_json(const Count& c) { return c.is_omega() ? Json("omega") : Json(c.value()); }

inline Count count_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "omega") return Count::omega();
  if (j.is_number_unsigned()) return Count(j.get<std::uint64_t>());
  throw Error(Errc::Schema, "count must be a non-negative integer or \"omega\"");
}

inline Json to_json(const Atom& a) { return Json(a.to_string()); }

inline Json to_json(const SymbolicSpace& s) {
  Json arr = Json::array();
  for (const auto& [atom, count] : s.entries()) arr.push_back(Json{{"atom", atom.to_string()}, {"count", to_json(count)}});
  return arr;
}

inline SymbolicSpace space_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::Schema, "space must be an array of {atom, count}");
  std::vector<std::pair<Atom, Count>> raw;
  for (const auto& e : j) raw.emplace_back(parse_atom(e.at("atom").get<std::string>()), count_from_json(e.at("count")));
  return SymbolicSpace::normalize(raw);
}

inline Json to_json(const Relation& r) {
  Json arr = Json::array();
  for (const auto& [a, b] : r.pairs(false)) arr.push_back(Json::array({a, b}));
  return arr;
}

inline Json to_json(const QuasiorderPair& p) {
  return Json{{"elements", p.universe()}, {"leq1", to_json(p.leq1)}, {"leq2", to_json(p.leq2)}};
}

inline Json to_json(const Partition& p) {
  Json arr = Json::array();
  for (std::size_t b = 0; b < p.block_count(); ++b) arr.push_back(p.member_labels(b));
  return arr;
}

inline Json to_json(const MatchingWitness& w) {
  Json arr = Json::array();
  for (const auto& t : w.transfers)
    arr.push_back(Json{{"source", t.source.to_string()}, {"target", t.target.to_string()}, {"count", to_json(t.amount)}});
  return Json{{"level", std::string(level_name(w.level))}, {"transfers", arr}};
}

inline Json to_json(const Construction& c) {
  Json spaces = Json::object();
  for (const auto& [q, space] : c.spaces) spaces[q] = to_json(space);
  return Json{{"spaces", spaces}, {"ambient", to_json(c.ambient)}};
}

inline Json to_json(const PipelineState& s) {
  Json stages = Json::object();
  for (const auto& q : s.quotient.universe())
    stages[q] = Json{{"stage1", to_json(s.stage1.at(q))},
                     {"stage2", to_json(s.stage2.at(q))},
                     {"stage2_tilde", to_json(s.stage2_tilde.at(q))},
                     {"stage3", to_json(s.stage3.at(q))}};
  return Json{{"classes", to_json(s.classes)},
              {"strict_order", to_json(s.strict)},
              {"strict_components", to_json(s.strict_components)},
              {"prec_components", to_json(s.prec_components)},
              {"precdot_components", to_json(s.precdot_components)},
              {"component_order", to_json(s.component_order)},
              {"class_stages", stages},
              {"construction", to_json(s.construction)}};
}

inline Json to_json(const PairVerdict& v) {
  Json j{{"q", v.q},
         {"q_prime", v.q_prime},
         {"leq1", v.leq1},
         {"leq2", v.leq2},
         {"clopen", v.clopen},
         {"closed", v.closed},
         {"inj", v.inj},
         {"homeo", v.homeo},
         {"condition1_ok", v.condition1_ok},
         {"condition2_ok", v.condition2_ok},
         {"condition3_ok", v.condition3_ok},
         {"closed_implies_leq2", v.closed_implies_leq2}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.explanation.empty()) j["explanation"] = v.explanation;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return Json{{"verdicts", verdicts},
              {"all_pairwise_nonhomeomorphic", r.all_pairwise_nonhomeomorphic},
              {"all_clopen_in_ambient", r.all_clopen_in_ambient},
              {"ambient_failures", r.ambient_failures},
              {"failed_verdicts", r.failed_verdicts()},
              {"pass", r.pass}};
}

}  // namespace qorep
