#pragma once

// Batch front end behind the `qorep` command-line tool.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qorep/calculus.hpp"
#include "qorep/construction.hpp"
#include "qorep/dot.hpp"
#include "qorep/error.hpp"
#include "qorep/generators.hpp"
#include "qorep/io.hpp"
#include "qorep/verifier.hpp"

namespace qorep {

inline constexpr const char* kToolName = "qorep";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInvalid = 2 };

struct RunConfig {
  std::string command;
  std::optional<std::string> input;
  std::uint64_t seed = 1;
  std::size_t size = 4;
  std::size_t samples = 100;
  double density1 = 0.3;
  double density2 = 0.3;
  bool autoclose = false;
  std::size_t oracle_bound = 12;
  std::optional<std::string> dot;
  std::optional<std::string> out;
  /// Worker threads for `random` and `oracle-check`; 0 picks the hardware count.
  std::size_t jobs = 0;
};

/// Everything that decides the output; `jobs` is deliberately absent.
inline Json to_json(const RunConfig& c) {
  Json j{{"command", c.command}};
  j["input"] = c.input ? Json(*c.input) : Json(nullptr);
  j["seed"] = c.seed;
  j["size"] = c.size;
  j["samples"] = c.samples;
  j["density1"] = c.density1;
  j["density2"] = c.density2;
  j["autoclose"] = c.autoclose;
  j["oracle_bound"] = c.oracle_bound;
  j["dot"] = c.dot ? Json(*c.dot) : Json(nullptr);
  j["out"] = c.out ? Json(*c.out) : Json(nullptr);
  return j;
}

/// Outcome of the full check suite on one pair.
struct InstanceOutcome {
  VerificationReport report;
  IntermediateReport observations;
  std::vector<std::string> invariant_violations;

  bool pass() const { return report.pass && observations.ok() && invariant_violations.empty(); }
};

inline InstanceOutcome check_instance(const QuasiorderPair& pair, const VerifyOptions& opt = {}) {
  InstanceOutcome out;
  const auto state = build_pipeline(pair);
  out.report = verify(pair, state.construction, opt);
  out.observations = verify_intermediate(state, *opt.atoms);
  out.invariant_violations = check_construction_invariants(state, state.construction);
  return out;
}

namespace detail {

/// Runs body(i) for i in [0, count) on `jobs` threads. Results must be written
/// by index so the output order never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body&& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Schema, "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::optional<std::string>& path, const std::string& text, std::ostream& fallback) {
  if (!path) {
    fallback << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + *path + "'");
  out << text;
}

inline Json header(const RunConfig& c) {
  return Json{{"tool", kToolName}, {"version", kToolVersion}, {"config", to_json(c)}};
}

inline QuasiorderPair load_pair(const RunConfig& c) {
  if (!c.input) throw Error(Errc::Schema, "--input is required for '" + c.command + "'");
  return parse_input(read_file(*c.input), c.autoclose);
}

inline Json failure_list(const InstanceOutcome& o) {
  Json arr = Json::array();
  for (const auto& v : o.report.verdicts)
    if (!v.ok()) arr.push_back(Json{{"q", v.q}, {"q_prime", v.q_prime}, {"explanation", v.explanation}});
  if (!o.report.all_pairwise_nonhomeomorphic) arr.push_back(Json{{"global", "homeomorphic pair present"}});
  for (const auto& q : o.report.ambient_failures) arr.push_back(Json{{"global", "X(" + q + ") not clopen in ambient"}});
  for (const auto& v : o.observations.violations) arr.push_back(Json{{"observation", v}});
  for (const auto& v : o.invariant_violations) arr.push_back(Json{{"invariant", v}});
  return arr;
}

inline int run_construct(const RunConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  const auto state = build_pipeline(pair);
  Json doc = header(c);
  doc["input"] = to_json(pair);
  doc["pipeline"] = to_json(state);
  write_text(c.out, doc.dump(2) + "\n", out);
  if (c.dot) write_text(c.dot, export_dot(state), out);
  return kExitPass;
}

inline int run_verify(const RunConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  const auto state = build_pipeline(pair);
  VerifyOptions opt;
  opt.witnesses = true;
  InstanceOutcome o;
  o.report = verify(pair, state.construction, opt);
  o.observations = verify_intermediate(state);
  o.invariant_violations = check_construction_invariants(state, state.construction);

  Json doc = header(c);
  doc["input"] = to_json(pair);
  doc["construction"] = to_json(state.construction);
  doc["report"] = to_json(o.report);
  doc["observations"] = Json{{"checks", o.observations.checks}, {"violations", o.observations.violations}};
  doc["invariant_violations"] = o.invariant_violations;
  doc["pass"] = o.pass();
  write_text(c.out, doc.dump(2) + "\n", out);
  if (c.dot) write_text(c.dot, export_dot(o.report), out);
  return o.pass() ? kExitPass : kExitFail;
}

inline int run_random(const RunConfig& c, std::ostream& out) {
  if (c.size == 0) throw Error(Errc::Schema, "--size must be at least 1");
  if (c.density1 < 0 || c.density1 > 1 || c.density2 < 0 || c.density2 > 1)
    throw Error(Errc::Schema, "densities must lie in [0, 1]");
  Rng master(c.seed);
  std::vector<std::uint64_t> seeds(c.samples);
  for (auto& s : seeds) s = master.next();

  std::vector<Json> rows(c.samples);
  std::vector<char> passed(c.samples, 0);
  parallel_for(c.samples, c.jobs, [&](std::size_t i) {
    const auto pair = random_pair(c.size, seeds[i], c.density1, c.density2);
    const auto o = check_instance(pair);
    passed[i] = o.pass();
    Json row{{"index", i}, {"seed", seeds[i]}, {"leq1", to_json(pair.leq1)}, {"leq2", to_json(pair.leq2)}};
    row["verdicts_checked"] = o.report.verdicts.size();
    row["observation_checks"] = o.observations.checks;
    row["pass"] = o.pass();
    if (!o.pass()) row["failures"] = failure_list(o);
    rows[i] = std::move(row);
  });

  const auto pass_count = static_cast<std::size_t>(std::count(passed.begin(), passed.end(), 1));
  Json doc = header(c);
  doc["samples"] = rows;
  doc["summary"] = Json{{"samples", c.samples}, {"passed", pass_count}, {"pass", pass_count == c.samples}};
  write_text(c.out, doc.dump(2) + "\n", out);
  return pass_count == c.samples ? kExitPass : kExitFail;
}

inline int run_oracle_check(const RunConfig& c, std::ostream& out) {
  Json levels = Json::object();
  bool all_agree = true;
  for (auto level : {RelationLevel::Clopen, RelationLevel::Closed, RelationLevel::Inj}) {
    Rng rng(c.seed + static_cast<std::uint64_t>(level));
    SpaceShape shape;
    shape.max_source_copies = c.oracle_bound;
    std::vector<std::pair<SymbolicSpace, SymbolicSpace>> cases;
    for (std::size_t i = 0; i < c.samples; ++i) cases.push_back(random_space_pair(rng, shape));

    std::vector<char> agree(cases.size(), 0), positive(cases.size(), 0);
    parallel_for(cases.size(), c.jobs, [&](std::size_t i) {
      const bool fast = embeddable(cases[i].first, cases[i].second, level);
      const bool slow = oracle_embeds(cases[i].first, cases[i].second, level, c.oracle_bound);
      agree[i] = fast == slow;
      positive[i] = fast;
    });

    Json disagreements = Json::array();
    for (std::size_t i = 0; i < cases.size(); ++i)
      if (!agree[i])
        disagreements.push_back(Json{{"index", i}, {"x", to_json(cases[i].first)}, {"y", to_json(cases[i].second)}});
    const auto agree_count = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 1));
    all_agree = all_agree && agree_count == cases.size();
    levels[std::string(level_name(level))] =
        Json{{"cases", cases.size()},
             {"agree", agree_count},
             {"embeddable", static_cast<std::size_t>(std::count(positive.begin(), positive.end(), 1))},
             {"disagreements", disagreements}};
  }
  Json doc = header(c);
  doc["levels"] = levels;
  doc["pass"] = all_agree;
  write_text(c.out, doc.dump(2) + "\n", out);
  return all_agree ? kExitPass : kExitFail;
}

inline int run_export(const RunConfig& c, std::ostream& out) {
  const auto pair = load_pair(c);
  const auto state = build_pipeline(pair);
  write_text(c.dot ? c.dot : c.out, export_dot(state), out);
  return kExitPass;
}

}  // namespace detail

/// Executes one command. Reports go to `--out` (or `out`), structured errors
/// to `err`. Exit codes: 0 pass, 1 verification failure, 2 invalid input.
inline int run(const RunConfig& c, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    if (c.command == "construct") return detail::run_construct(c, out);
    if (c.command == "verify") return detail::run_verify(c, out);
    if (c.command == "random") return detail::run_random(c, out);
    if (c.command == "oracle-check") return detail::run_oracle_check(c, out);
    if (c.command == "export") return detail::run_export(c, out);
    throw Error(Errc::Schema, "unknown command '" + c.command + "'");
  } catch (const Error& e) {
    err << Json{{"error", Json{{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}}.dump() << "\n";
    return kExitInvalid;
  }
}

}  // namespace qorep
