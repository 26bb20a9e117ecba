#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qorep/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Symbolic construction and verification of quasiorder-pair representations"};
  app.set_version_flag("--version", std::string(qorep::kToolName) + " " + qorep::kToolVersion);
  app.require_subcommand(1);

  qorep::RunConfig config;
  std::string input, dot, out;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "input document (JSON)");
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--size", config.size, "number of elements per random pair");
    cmd->add_option("--samples", config.samples, "number of random samples");
    cmd->add_option("--density1", config.density1, "edge density for leq1")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--density2", config.density2, "extra edge density for leq2")->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--autoclose", config.autoclose, "take transitive closures of the input relations");
    cmd->add_option("--oracle-bound", config.oracle_bound, "largest source copy count for the brute-force oracle");
    cmd->add_option("--dot", dot, "write a Graphviz diagram to PATH");
    cmd->add_option("--out", out, "write the report to PATH instead of stdout");
    cmd->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");
  };
  add_common(app.add_subcommand("construct", "build the spaces X(q)"));
  add_common(app.add_subcommand("verify", "build and verify the spaces X(q)"));
  add_common(app.add_subcommand("random", "verify random pairs"));
  add_common(app.add_subcommand("oracle-check", "compare the calculus against the brute-force oracle"));
  add_common(app.add_subcommand("export", "write the pipeline diagram"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qorep::kExitInvalid;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) config.input = input;
  if (!dot.empty()) config.dot = dot;
  if (!out.empty()) config.out = out;
  return qorep::run(config);
}
