#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "signrank/commands.hpp"

namespace cli = signrank::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact sign-pattern minimum rank toolkit"};
  app.require_subcommand(1);

  std::string out;
  std::string in;
  std::string field = "q";
  std::string lo;
  std::string hi;
  std::string realization;
  signrank::SearchBudget budget;
  budget.seed = cli::default_seed(budget.seed);

  auto* perles = app.add_subcommand("perles", "Nine-point configuration bundle");
  perles->require_subcommand(1);
  auto* build = perles->add_subcommand("build", "Build and verify the bundle");
  build->add_option("--out", out, "Output directory")->required();
  auto* verify = perles->add_subcommand("verify", "Recheck a bundle directory");
  verify->add_option("--dir,--bundle", in, "Bundle directory")->required();

  auto* realize = app.add_subcommand("realize", "Decide realizability of an incidence structure");
  realize->add_option("--incidence", in, "Incidence JSON")->required();
  realize->add_option("--field", field, "q or qsqrt:D");
  realize->add_option("--out", out, "Certificate JSON")->required();

  auto* rationalize = app.add_subcommand("rationalize", "Substitute a rational point for the transcendental");
  rationalize->add_option("--matrix", in, "Polynomial matrix JSON")->required();
  rationalize->add_option("--lo", lo, "Window lower end")->required();
  rationalize->add_option("--hi", hi, "Window upper end")->required();
  rationalize->add_option("--out", out, "Result JSON")->required();

  auto* minrank = app.add_subcommand("minrank", "Minimum rank bounds for a sign pattern");
  minrank->add_option("--pattern", in, "Sign pattern JSON")->required();
  minrank->add_option("--seed", budget.seed, "Search seed (default from SIGNRANK_SEED or 1)");
  minrank->add_option("--max-rank", budget.max_rank, "Largest rank tried (0 = all)");
  minrank->add_option("--entry-bound", budget.entry_bound, "Factor entry bound")->check(CLI::Range(1, 1000));
  minrank->add_option("--iterations", budget.iterations, "Search rounds");
  minrank->add_option("--out", out, "Witness JSON");

  auto* render = app.add_subcommand("render", "Draw a realization as SVG");
  render->add_option("--incidence", in, "Incidence JSON")->required();
  render->add_option("--realization", realization, "Realization JSON")->required();
  render->add_option("--out", out, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  cli::CommandOutcome result;
  if (*build) {
    result = cli::cmd_perles_build(out);
  } else if (*verify) {
    result = cli::cmd_perles_verify(in);
  } else if (*realize) {
    result = cli::cmd_realize(in, field, out);
  } else if (*rationalize) {
    result = cli::cmd_rationalize(in, lo, hi, out);
  } else if (*minrank) {
    result = cli::cmd_minrank(in, budget, out);
  } else {
    result = cli::cmd_render(in, realization, out);
  }
  (result.exit_code == cli::kUsage ? std::cerr : std::cout) << result.summary;
  return result.exit_code;
}
