#include "plurality/two_candidate.hpp"

namespace plurality {

Ballot two_candidate_ballot(const TwoCandidatePrediction& pred, bool mover_is_a) {
  const int mine = mover_is_a ? pred.p_a + pred.f_a : pred.p_b + pred.f_b;
  const int theirs = mover_is_a ? pred.p_b + pred.f_b : pred.p_a + pred.f_a;
  if (mine == theirs || mine == theirs - 1) return Ballot::vote(mover_is_a ? 0 : 1);
  return Ballot::abstain();
}

std::vector<VoterType> voter_types(const Profile& p) {
  if (p.m != 2) {
    throw InputError("two-candidate analysis needs exactly 2 candidates, got " +
                     std::to_string(p.m));
  }
  std::vector<VoterType> types;
  types.reserve(p.voters.size());
  for (int i = 0; i < p.n(); ++i) {
    const UtilityVector& u = p.voters[i];
    if (u[0] == u[1]) throw InputError("voter " + p.voter_name(i) + " is indifferent");
    types.push_back(u[0] > u[1] ? VoterType::a : VoterType::b);
  }
  return types;
}

SpneResult two_candidate_play(const Profile& p, const VotingOrder& order) {
  const std::vector<VoterType> types = voter_types(p);
  if (order.size() != p.n()) throw InputError("voting order does not match the voters");

  TwoCandidatePrediction pred;
  for (int v : order.voters()) (types[v] == VoterType::a ? pred.f_a : pred.f_b) += 1;

  SpneResult result;
  for (int round = 0; round < order.size(); ++round) {
    const bool is_a = types[order.voter_at(round)] == VoterType::a;
    // the mover is not one of the future voters
    (is_a ? pred.f_a : pred.f_b) -= 1;
    const Ballot b = two_candidate_ballot(pred, is_a);
    if (b.is_vote()) (b.candidate() == 0 ? pred.p_a : pred.p_b) += 1;
    result.votes.push_back(b);
  }
  result.outcome = outcome(tally(result.votes, 2));
  result.states = static_cast<std::uint64_t>(order.size());
  return result;
}

std::vector<VoterType> mandate_permutation(int n_a, int n_b, int k) {
  if (n_b < 0 || n_a <= n_b) throw InputError("mandate construction needs n_A > n_B >= 0");
  if (k < 1 || k > n_b + 1) {
    throw InputError("mandate k must lie in [1, " + std::to_string(n_b + 1) + "]");
  }
  std::vector<VoterType> types;
  types.insert(types.end(), static_cast<std::size_t>(n_a - n_b + k - 1), VoterType::a);
  types.insert(types.end(), static_cast<std::size_t>(n_b), VoterType::b);
  types.insert(types.end(), static_cast<std::size_t>(n_b - k + 1), VoterType::a);
  return types;
}

Profile two_candidate_profile(std::span<const VoterType> types) {
  Profile p;
  p.m = 2;
  p.candidate_names = {"A", "B"};
  for (VoterType t : types) {
    p.voters.push_back(t == VoterType::a ? UtilityVector{3, 1} : UtilityVector{1, 3});
  }
  return p;
}

std::string type_string(std::span<const VoterType> types) {
  std::string s;
  for (VoterType t : types) s += t == VoterType::a ? 'A' : 'B';
  return s;
}

std::vector<VoterType> parse_type_string(std::string_view s) {
  std::vector<VoterType> types;
  for (char c : s) {
    if (c == 'A' || c == 'a') {
      types.push_back(VoterType::a);
    } else if (c == 'B' || c == 'b') {
      types.push_back(VoterType::b);
    } else {
      throw InputError(std::string("voter type string may only contain A and B, found '") + c +
                       "'");
    }
  }
  return types;
}

}  // namespace plurality
