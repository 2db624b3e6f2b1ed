#pragma once

// Shared fixtures and reference implementations for the test suites. The
// reference solvers here work on exact rationals and naive enumeration and
// share no code with the library's solvers.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plurality/instances.hpp"
#include "plurality/model.hpp"
#include "plurality/sequential.hpp"

namespace testing {

using namespace plurality;
using Rational = boost::multiprecision::cpp_rational;

inline std::vector<std::string> letter_names(int m) {
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) names.push_back(std::string(1, static_cast<char>('A' + c)));
  return names;
}

/// "ACB" -> {0, 2, 1}.
inline Ranking ranking(const std::string& letters) {
  Ranking r;
  for (char ch : letters) r.push_back(ch - 'A');
  return r;
}

struct RankedVoter {
  std::string letters;
  ThreeCandidateKind kind;
};

inline Profile three_candidate_profile(const std::vector<RankedVoter>& voters) {
  Profile p;
  p.m = 3;
  p.candidate_names = letter_names(3);
  for (const auto& v : voters) p.voters.push_back(three_candidate_utilities(ranking(v.letters), v.kind));
  return p;
}

inline Profile rank_profile(const std::vector<std::string>& rankings) {
  Profile p;
  p.m = static_cast<int>(rankings.front().size());
  p.candidate_names = letter_names(p.m);
  for (const auto& r : rankings) p.voters.push_back(rank_to_utilities(ranking(r)));
  return p;
}

/// Two candidates, A-voters (3,1) and B-voters (1,3), from a string like "ABABA".
inline Profile ab_profile(const std::string& types) {
  Profile p;
  p.m = 2;
  p.candidate_names = {"A", "B"};
  for (char t : types) p.voters.push_back(t == 'A' ? UtilityVector{3, 1} : UtilityVector{1, 3});
  return p;
}

/// Ballots as text: candidate letters and '_' for abstain, e.g. "A_CC".
inline BallotVector ballots(const std::string& text) {
  BallotVector b;
  for (char ch : text) b.push_back(ch == '_' ? Ballot::abstain() : Ballot::vote(ch - 'A'));
  return b;
}

inline std::string ballots_text(std::span<const Ballot> b) {
  std::string s;
  for (Ballot x : b) s += x.is_abstain() ? '_' : static_cast<char>('A' + x.candidate());
  return s;
}

// ---- reference arithmetic ------------------------------------------------

inline std::vector<int> ref_counts(std::span<const Ballot> b, int m) {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (Ballot x : b) {
    if (x.is_vote()) ++counts[x.candidate()];
  }
  return counts;
}

inline std::set<int> ref_winners(const std::vector<int>& counts) {
  std::set<int> w;
  const int best = *std::max_element(counts.begin(), counts.end());
  if (best == 0) return w;
  for (int c = 0; c < static_cast<int>(counts.size()); ++c) {
    if (counts[c] == best) w.insert(c);
  }
  return w;
}

inline std::set<int> to_set(Outcome o) {
  const auto members = o.members();
  return {members.begin(), members.end()};
}

/// Average utility of a winner set; nullopt for the empty set.
inline std::optional<Rational> ref_value(const UtilityVector& u, const std::set<int>& w) {
  if (w.empty()) return std::nullopt;
  Rational sum = 0;
  for (int c : w) sum += Rational(u[c]);
  return sum / static_cast<int>(w.size());
}

/// Strict preference of (w1, voted1) over (w2, voted2) under the
/// lexicographic voting-cost rule.
inline bool ref_prefers(const UtilityVector& u, const std::set<int>& w1, bool voted1,
                        const std::set<int>& w2, bool voted2) {
  const auto a = ref_value(u, w1);
  const auto b = ref_value(u, w2);
  if (!a && !b) return !voted1 && voted2;
  if (!a) return false;
  if (!b) return true;
  if (*a != *b) return *a > *b;
  return !voted1 && voted2;
}

inline bool ref_is_pne(const Profile& p, const BallotVector& b) {
  const auto base = ref_winners(ref_counts(b, p.m));
  for (int i = 0; i < p.n(); ++i) {
    for (int code = 0; code <= p.m; ++code) {
      BallotVector alt = b;
      alt[i] = Ballot::from_code(code);
      if (alt[i] == b[i]) continue;
      if (ref_prefers(p.voters[i], ref_winners(ref_counts(alt, p.m)), alt[i].is_vote(), base,
                      b[i].is_vote())) {
        return false;
      }
    }
  }
  return true;
}

inline void for_each_ballot_vector(int n, int m, const std::function<void(const BallotVector&)>& f) {
  BallotVector b(static_cast<std::size_t>(n), Ballot::abstain());
  while (true) {
    f(b);
    int i = n - 1;
    while (i >= 0 && b[i].code() == m) b[i--] = Ballot::abstain();
    if (i < 0) return;
    b[i] = Ballot::from_code(b[i].code() + 1);
  }
}

/// Every pure equilibrium, in odometer order with voter 0 most significant.
inline std::vector<BallotVector> ref_all_pne(const Profile& p) {
  std::vector<BallotVector> out;
  for_each_ballot_vector(p.n(), p.m, [&](const BallotVector& b) {
    if (ref_is_pne(p, b)) out.push_back(b);
  });
  return out;
}

inline std::set<std::set<int>> ref_pne_outcomes(const Profile& p) {
  std::set<std::set<int>> out;
  for (const auto& b : ref_all_pne(p)) out.insert(ref_winners(ref_counts(b, p.m)));
  return out;
}

/// Plain backward induction. Ties between payoff-equal moves go to the
/// earlier entry of `moves` (abstain first, then candidates).
struct RefSpne {
  std::set<int> outcome;
  BallotVector votes;
};

inline RefSpne ref_spne(const Profile& p, const std::vector<int>& order,
                        std::vector<int> candidate_order = {}) {
  if (candidate_order.empty()) {
    for (int c = 0; c < p.m; ++c) candidate_order.push_back(c);
  }
  std::vector<Ballot> moves{Ballot::abstain()};
  for (int c : candidate_order) moves.push_back(Ballot::vote(c));

  std::function<BallotVector(BallotVector&)> solve = [&](BallotVector& prefix) -> BallotVector {
    const std::size_t round = prefix.size();
    if (round == order.size()) return {};
    const UtilityVector& u = p.voters[order[round]];
    BallotVector best_tail;
    std::set<int> best_winners;
    bool best_voted = false;
    bool have = false;
    for (Ballot move : moves) {
      prefix.push_back(move);
      BallotVector tail = solve(prefix);
      BallotVector full = prefix;
      full.insert(full.end(), tail.begin(), tail.end());
      prefix.pop_back();
      const auto w = ref_winners(ref_counts(full, p.m));
      if (!have || ref_prefers(u, w, move.is_vote(), best_winners, best_voted)) {
        have = true;
        best_winners = w;
        best_voted = move.is_vote();
        best_tail = {move};
        best_tail.insert(best_tail.end(), tail.begin(), tail.end());
      }
    }
    return best_tail;
  };
  BallotVector prefix;
  RefSpne r;
  r.votes = solve(prefix);
  r.outcome = ref_winners(ref_counts(r.votes, p.m));
  return r;
}

inline std::vector<int> identity_order(int n) {
  std::vector<int> o(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

}  // namespace testing
