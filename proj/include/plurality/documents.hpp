#pragma once

// JSON documents read and written by the command-line tool.
//
// Election:  {"candidates": ["A", ...],
//             "voters": [{"name": "v1", "utilities": [5, 2, 1]}, ...],
//             "order": ["v3", 0, ...]}            (order optional)
// X3C:       {"ground_size": 6, "sets": [[0, 1, 2], ...]}
//
// Utilities are non-negative integers; values beyond 64 bits are written
// and accepted as decimal strings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plurality/instances.hpp"
#include "plurality/model.hpp"
#include "plurality/sequential.hpp"

namespace plurality {

struct VoterRecord {
  std::string name;
  UtilityVector utilities;
};

struct ElectionDocument {
  std::vector<std::string> candidates;
  std::vector<VoterRecord> voters;
  /// Voter indices in round order, if the file gives one.
  std::optional<std::vector<int>> order;

  Profile profile() const;
  VotingOrder voting_order() const;
};

/// Throws InputError naming the offending field (and line for syntax
/// errors). Applies validate_profile unless `skip_validate`.
ElectionDocument parse_election(std::string_view text, bool skip_validate = false);

ElectionDocument election_from_profile(const Profile& p,
                                       const std::optional<VotingOrder>& order = std::nullopt);
nlohmann::json election_to_json(const ElectionDocument& doc);

X3cInstance parse_x3c(std::string_view text);
nlohmann::json x3c_to_json(const X3cInstance& x);

struct VoteRecord {
  int round = 0;
  std::string voter;
  std::string ballot;

  friend bool operator==(const VoteRecord&, const VoteRecord&) = default;
};

struct ResultDocument {
  std::string command;
  std::optional<std::vector<std::string>> outcome;
  /// Sequential commands: on-path ballots per round.
  std::vector<VoteRecord> votes;
  /// Simultaneous commands: one ballot per voter.
  std::optional<std::vector<std::string>> ballots;
  /// Command-specific payload.
  nlohmann::json details = nlohmann::json::object();
  /// State counts, engine, timing.
  nlohmann::json diagnostics = nlohmann::json::object();

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

nlohmann::json result_to_json(const ResultDocument& doc);
ResultDocument result_from_json(const nlohmann::json& j);

std::vector<std::string> outcome_names(const Profile& p, Outcome o);
std::vector<std::string> ballot_names(const Profile& p, std::span<const Ballot> ballots);
/// Accepts candidate names, 0-based indices, and ABSTAIN.
BallotVector parse_ballots(const Profile& p, std::string_view comma_separated);

}  // namespace plurality
