#pragma once

// Closed-form equilibrium play for sequential elections with two
// candidates, A (index 0) and B (index 1).

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plurality/model.hpp"
#include "plurality/sequential.hpp"

namespace plurality {

enum class VoterType { a, b };

/// Votes already cast for each candidate before the mover's round, and the
/// number of A- and B-voters still to move after it.
struct TwoCandidatePrediction {
  int p_a = 0;
  int p_b = 0;
  int f_a = 0;
  int f_b = 0;
};

/// The mover votes for their candidate X iff X's predicted total equals the
/// opponent's or trails it by exactly one; otherwise they abstain.
Ballot two_candidate_ballot(const TwoCandidatePrediction& pred, bool mover_is_a);

/// A-voter iff u_A > u_B. Throws InputError unless m == 2 and every voter
/// strictly prefers one candidate.
std::vector<VoterType> voter_types(const Profile& p);

/// Simulates the rounds with two_candidate_ballot.
SpneResult two_candidate_play(const Profile& p, const VotingOrder& order);

/// Voter types in round order: (n_a - n_b + k - 1) A-voters, all n_b
/// B-voters, then the remaining A-voters. Played out, A wins with exactly k
/// votes.
std::vector<VoterType> mandate_permutation(int n_a, int n_b, int k);

/// One voter per entry, voting in the given order; A-voters get utilities
/// (3, 1) and B-voters (1, 3).
Profile two_candidate_profile(std::span<const VoterType> types);

std::string type_string(std::span<const VoterType> types);
std::vector<VoterType> parse_type_string(std::string_view s);

}  // namespace plurality
