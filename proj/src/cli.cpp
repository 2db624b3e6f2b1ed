#include "plurality/cli.hpp"

#include <chrono>
#include <sstream>

#include <omp.h>

#include "plurality/oracle.hpp"
#include "plurality/simultaneous.hpp"
#include "plurality/two_candidate.hpp"

namespace plurality {

using nlohmann::json;

namespace {

const std::string& require_input(const CommandOptions& options, const std::string& command) {
  if (!options.input) throw InputError("command '" + command + "' needs an input file");
  return *options.input;
}

SolveOptions solve_options(const CommandOptions& options) {
  SolveOptions s;
  s.max_states = options.max_states;
  s.max_table = options.max_table;
  return s;
}

void fill_votes(ResultDocument& doc, const Profile& p, const VotingOrder& order,
                const BallotVector& votes) {
  for (int round = 0; round < static_cast<int>(votes.size()); ++round) {
    doc.votes.push_back(VoteRecord{round + 1, p.voter_name(order.voter_at(round)),
                                   format_ballot(p, votes[round])});
  }
}

std::string joined(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& item : items) s += (s.empty() ? "" : ", ") + item;
  return s;
}

json outcome_json(const Profile& p, Outcome o) { return json(outcome_names(p, o)); }

CommandResult cmd_validate(const CommandOptions& options) {
  const ElectionDocument doc = parse_election(require_input(options, "validate"), true);
  const Profile p = doc.profile();
  CommandResult r;
  r.document.command = "validate";
  const ValidationReport report = validate_profile(p);
  r.document.details["n"] = p.n();
  r.document.details["m"] = p.m;
  r.document.details["ok"] = report.ok;
  r.document.details["skipped_distinctness"] = report.skipped_distinctness;
  if (report.violation) {
    const auto& v = *report.violation;
    r.document.details["violation"] = {{"voter", p.voter_name(v.voter)},
                                       {"first", outcome_json(p, v.first)},
                                       {"second", outcome_json(p, v.second)}};
    r.exit_code = kExitInputError;
    r.summary = "invalid: voter " + p.voter_name(v.voter) + " is indifferent between " +
                format_outcome(p, v.first) + " and " + format_outcome(p, v.second);
  } else {
    r.summary = "valid profile: " + std::to_string(p.n()) + " voters, " + std::to_string(p.m) +
                " candidates";
  }
  return r;
}

CommandResult cmd_pne_check(const CommandOptions& options) {
  const ElectionDocument doc =
      parse_election(require_input(options, "pne-check"), options.skip_validate);
  const Profile p = doc.profile();
  if (options.ballots.empty()) throw InputError("pne-check needs --ballots");
  const BallotVector ballots = parse_ballots(p, options.ballots);
  const PneCheck check = is_pne(p, ballots);
  CommandResult r;
  r.document.command = "pne-check";
  r.document.ballots = ballot_names(p, ballots);
  const Outcome o = outcome(tally(ballots, p.m));
  r.document.outcome = outcome_names(p, o);
  r.document.details["is_pne"] = check.is_pne;
  if (check.deviation) {
    r.document.details["deviation"] = {{"voter", p.voter_name(check.deviation->voter)},
                                       {"ballot", format_ballot(p, check.deviation->ballot)}};
    r.summary = "not a PNE: voter " + p.voter_name(check.deviation->voter) + " prefers " +
                format_ballot(p, check.deviation->ballot);
  } else {
    r.summary = "PNE with outcome " + format_outcome(p, o);
  }
  return r;
}

CommandResult cmd_pne_find(const CommandOptions& options) {
  const ElectionDocument doc =
      parse_election(require_input(options, "pne-find"), options.skip_validate);
  const Profile p = doc.profile();
  CommandResult r;
  r.document.command = "pne-find";
  const auto witness = find_pne(p);
  r.document.details["exists"] = witness.has_value();
  if (!witness) {
    r.exit_code = kExitNoPne;
    r.summary = "no pure Nash equilibrium exists";
    return r;
  }
  r.document.outcome = outcome_names(p, witness->outcome);
  r.document.ballots = ballot_names(p, witness->ballots);
  r.document.details["construction"] = witness->outcome.size() == 1 ? "unanimous-top" : "tie";
  r.summary = "PNE " + joined(*r.document.ballots) + " with outcome " +
              format_outcome(p, witness->outcome);
  return r;
}

CommandResult cmd_pne_enum(const CommandOptions& options) {
  const ElectionDocument doc =
      parse_election(require_input(options, "pne-enum"), options.skip_validate);
  const Profile p = doc.profile();
  CommandResult r;
  r.document.command = "pne-enum";
  json outcomes = json::array();
  std::string listed;
  for (Outcome o : enumerate_pne_outcomes(p)) {
    outcomes.push_back(outcome_json(p, o));
    listed += (listed.empty() ? "" : " ") + format_outcome(p, o);
  }
  r.document.details["outcomes"] = outcomes;
  r.summary = outcomes.empty() ? "no PNE outcomes" : "PNE outcomes: " + listed;
  return r;
}

CommandResult cmd_pne_brute(const CommandOptions& options) {
  const ElectionDocument doc =
      parse_election(require_input(options, "pne-brute"), options.skip_validate);
  const Profile p = doc.profile();
  CommandResult r;
  r.document.command = "pne-brute";
  BruteForceOptions brute;
  brute.max_profiles = options.max_states;
  json equilibria = json::array();
  const auto found = brute_force_pne(p, brute);
  for (const auto& w : found) {
    equilibria.push_back(
        json{{"ballots", ballot_names(p, w.ballots)}, {"outcome", outcome_json(p, w.outcome)}});
  }
  r.document.details["equilibria"] = std::move(equilibria);
  r.document.details["count"] = found.size();
  r.document.diagnostics["profiles"] = checked_power(static_cast<std::uint64_t>(p.m) + 1, p.n());
  r.summary = std::to_string(found.size()) + " pure Nash equilibria";
  return r;
}

CommandResult cmd_spne(const CommandOptions& options, const std::string& command) {
  const ElectionDocument doc =
      parse_election(require_input(options, command), options.skip_validate);
  const Profile p = doc.profile();
  const VotingOrder order = doc.voting_order();
  const Engine requested = command == "spne-oracle" ? Engine::tree : options.engine;
  Engine used = requested;
  const SpneResult result = solve_spne(p, order, requested, solve_options(options), &used);
  CommandResult r;
  r.document.command = command;
  r.document.outcome = outcome_names(p, result.outcome);
  fill_votes(r.document, p, order, result.votes);
  const Tally t = tally(result.votes, p.m);
  int mandate = 0;
  for (int c : result.outcome.members()) mandate = std::max(mandate, t.counts[c]);
  r.document.details["mandate"] = mandate;
  r.document.diagnostics["engine"] = engine_name(used);
  r.document.diagnostics["states"] = result.states;
  r.summary = "SPNE outcome " + format_outcome(p, result.outcome) + ", votes (" +
              joined(ballot_names(p, result.votes)) + ")";
  return r;
}

CommandResult cmd_two_cand(const CommandOptions& options) {
  const ElectionDocument doc =
      parse_election(require_input(options, "two-cand"), options.skip_validate);
  const Profile p = doc.profile();
  const VotingOrder order = doc.voting_order();
  const std::vector<VoterType> types = voter_types(p);
  std::vector<VoterType> in_order;
  for (int v : order.voters()) in_order.push_back(types[v]);
  const SpneResult result = two_candidate_play(p, order);
  CommandResult r;
  r.document.command = "two-cand";
  r.document.outcome = outcome_names(p, result.outcome);
  fill_votes(r.document, p, order, result.votes);
  r.document.details["types"] = type_string(in_order);
  r.summary = "two-candidate outcome " + format_outcome(p, result.outcome);
  return r;
}

CommandResult cmd_mandate(const CommandOptions& options) {
  const std::vector<VoterType> types = mandate_permutation(options.n_a, options.n_b, options.k);
  const Profile p = two_candidate_profile(types);
  const VotingOrder order = VotingOrder::identity(p.n());
  const SpneResult result = two_candidate_play(p, order);
  const Tally t = tally(result.votes, 2);
  CommandResult r;
  r.document.command = "mandate";
  r.document.outcome = outcome_names(p, result.outcome);
  fill_votes(r.document, p, order, result.votes);
  r.document.details["order"] = type_string(types);
  r.document.details["mandate"] = t.counts[0];
  r.document.details["votes_b"] = t.counts[1];
  r.summary = "order " + type_string(types) + ": winner " + format_outcome(p, result.outcome) +
              " with mandate " + std::to_string(t.counts[0]);
  return r;
}

CommandResult cmd_reduce(const CommandOptions& options) {
  const X3cInstance x = parse_x3c(require_input(options, "reduce-x3c"));
  const ReductionOutput red = x3c_reduce(x);
  CommandResult r;
  r.document.command = "reduce-x3c";
  r.document.details["election"] = election_to_json(election_from_profile(red.profile));
  r.document.details["thickness"] = x3c_thickness(x);
  r.document.details["shortcut"] = red.shortcut;
  r.document.details["gadget_added"] = red.gadget_added;
  r.document.details["element_of"] = red.element_of;
  r.document.details["d_candidates"] = {red.d_begin, red.d_end};
  r.document.details["e_candidates"] = {red.e_begin, red.e_end};
  r.document.details["note"] = red.note;
  r.summary = "reduced to an election with " + std::to_string(red.profile.m) + " candidates and " +
              std::to_string(red.profile.n()) + " voters (" + red.note + ")";
  return r;
}

CommandResult cmd_gen(const CommandOptions& options) {
  const Profile p = random_profile(options.n, options.m, options.seed);
  CommandResult r;
  r.document.command = "gen";
  r.document.details["election"] = election_to_json(election_from_profile(p));
  r.document.details["seed"] = options.seed;
  r.summary = "random profile: " + std::to_string(p.n()) + " voters, " + std::to_string(p.m) +
              " candidates, seed " + std::to_string(options.seed);
  return r;
}

CommandResult dispatch(const std::string& command, const CommandOptions& options) {
  if (command == "validate") return cmd_validate(options);
  if (command == "pne-check") return cmd_pne_check(options);
  if (command == "pne-find") return cmd_pne_find(options);
  if (command == "pne-enum") return cmd_pne_enum(options);
  if (command == "pne-brute") return cmd_pne_brute(options);
  if (command == "spne" || command == "spne-oracle") return cmd_spne(options, command);
  if (command == "two-cand") return cmd_two_cand(options);
  if (command == "mandate") return cmd_mandate(options);
  if (command == "reduce-x3c") return cmd_reduce(options);
  if (command == "gen") return cmd_gen(options);
  throw InputError("unknown command '" + command + "'");
}

}  // namespace

CommandResult run(const std::string& command, const CommandOptions& options) {
  if (options.threads > 0) omp_set_num_threads(options.threads);
  const auto start = std::chrono::steady_clock::now();
  CommandResult r;
  try {
    r = dispatch(command, options);
  } catch (const BoundExceeded& e) {
    r = CommandResult{};
    r.document.command = command;
    r.document.details["error"] = e.what();
    r.document.details["size"] = e.size();
    r.document.details["bound"] = e.bound();
    r.exit_code = kExitBoundExceeded;
    r.summary = std::string("bound exceeded: ") + e.what();
  } catch (const InputError& e) {
    r = CommandResult{};
    r.document.command = command;
    r.document.details["error"] = e.what();
    r.exit_code = kExitInputError;
    r.summary = std::string("input error: ") + e.what();
  }
  if (!options.no_timing) {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    r.document.diagnostics["elapsed_ms"] = elapsed.count();
  }
  return r;
}

}  // namespace plurality
