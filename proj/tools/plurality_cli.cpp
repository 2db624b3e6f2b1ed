// Command-line front end. Prints the result document as JSON on stdout and a
// one-line summary on stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plurality/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of plurality voting with abstentions"};
  app.require_subcommand(1);
  app.fallthrough();

  plurality::CommandOptions options;
  std::string input_path;
  std::string engine = "auto";
  std::string output_path;

  app.add_option("--engine", engine, "SPNE engine: auto, history, counts or tree")
      ->check(CLI::IsMember({"auto", "history", "counts", "tree"}));
  app.add_flag("--skip-validate", options.skip_validate, "Skip the outcome-distinctness check");
  app.add_option("--threads", options.threads, "OpenMP threads (0 = runtime default)");
  app.add_flag("--no-timing", options.no_timing, "Omit timing from the output");
  app.add_option("--seed", options.seed, "Seed for gen");
  app.add_option("--max-states", options.max_states,
                 "Bound on (m+1)^n for the history solver and brute force");
  app.add_option("--max-table", options.max_table, "Bound on n*(n+1)^m for the count solver");
  app.add_option("-o,--output", output_path, "gen/reduce-x3c: also write the election file here");

  struct Spec {
    const char* name;
    const char* help;
    bool takes_file;
  };
  const Spec specs[] = {
      {"validate", "Check that no voter is indifferent between two outcomes", true},
      {"pne-check", "Check whether --ballots is a pure Nash equilibrium", true},
      {"pne-find", "Find a pure Nash equilibrium (exit 4 if none exists)", true},
      {"pne-enum", "List every outcome attained by some pure Nash equilibrium", true},
      {"pne-brute", "Enumerate all pure Nash equilibria exhaustively", true},
      {"spne", "Subgame-perfect equilibrium of the sequential election", true},
      {"spne-oracle", "Subgame-perfect equilibrium by plain game-tree search", true},
      {"two-cand", "Closed-form play for a two-candidate sequential election", true},
      {"mandate", "Voting order giving the majority candidate exactly k votes", false},
      {"reduce-x3c", "Build the election for an exact-cover-by-3-sets instance", true},
      {"gen", "Random profile from uniformly random rankings", false},
  };
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    if (spec.takes_file) sub->add_option("file", input_path, "Input JSON file")->required();
  }
  CLI::App* pne_check = app.get_subcommand("pne-check");
  pne_check->add_option("--ballots", options.ballots,
                        "Comma-separated ballots: candidate names, indices or ABSTAIN")
      ->required();
  CLI::App* mandate = app.get_subcommand("mandate");
  mandate->add_option("--na", options.n_a, "Number of A-voters")->required();
  mandate->add_option("--nb", options.n_b, "Number of B-voters")->required();
  mandate->add_option("--k", options.k, "Desired number of votes for A")->required();
  CLI::App* gen = app.get_subcommand("gen");
  gen->add_option("--n", options.n, "Number of voters")->required();
  gen->add_option("--m", options.m, "Number of candidates")->required();

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "cannot read " << input_path << "\n";
      return plurality::kExitInputError;
    }
    std::ostringstream text;
    text << in.rdbuf();
    options.input = text.str();
  }
  options.engine = plurality::parse_engine(engine);

  const plurality::CommandResult result = plurality::run(command, options);
  std::cout << plurality::result_to_json(result.document).dump(2) << "\n";
  std::cerr << result.summary << "\n";

  if (!output_path.empty() && result.document.details.contains("election")) {
    std::ofstream out(output_path);
    out << result.document.details["election"].dump(2) << "\n";
  }
  return result.exit_code;
}
