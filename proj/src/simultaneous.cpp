#include "plurality/simultaneous.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace plurality {

namespace {

/// Winners after moving one ballot from old_code to new_code (0 = abstain).
std::uint64_t winners_after(std::span<const int> counts, int cast, int old_code, int new_code) {
  cast += (new_code != 0) - (old_code != 0);
  if (cast == 0) return 0;
  int best = 0;
  std::uint64_t mask = 0;
  for (int j = 0; j < static_cast<int>(counts.size()); ++j) {
    const int c = counts[j] - (old_code == j + 1) + (new_code == j + 1);
    if (c > best) {
      best = c;
      mask = std::uint64_t{1} << j;
    } else if (c == best && c > 0) {
      mask |= std::uint64_t{1} << j;
    }
  }
  return mask;
}

/// Combinations of {0..m-1} of size k in lexicographic order of their sorted
/// member lists.
class CombinationCursor {
 public:
  CombinationCursor(int m, int k) : m_(m), idx_(static_cast<std::size_t>(k)) {
    for (int i = 0; i < k; ++i) idx_[i] = i;
    done_ = k > m;
  }

  bool done() const { return done_; }

  std::uint64_t mask() const {
    std::uint64_t mask = 0;
    for (int i : idx_) mask |= std::uint64_t{1} << i;
    return mask;
  }

  void advance() {
    const int k = static_cast<int>(idx_.size());
    int i = k - 1;
    while (i >= 0 && idx_[i] == m_ - k + i) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++idx_[i];
    for (int j = i + 1; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
  }

 private:
  int m_;
  std::vector<int> idx_;
  bool done_ = false;
};

constexpr std::size_t kScanBatch = 4096;

PneWitness witness_from_ballots(const Profile& p, BallotVector ballots) {
  const Outcome o = outcome(tally(ballots, p.m));
  return PneWitness{std::move(ballots), o};
}

std::optional<PneWitness> unanimous_witness(const Profile& p) {
  if (auto top = unanimous_top(p)) {
    BallotVector ballots(static_cast<std::size_t>(p.n()), Ballot::abstain());
    ballots[0] = Ballot::vote(*top);
    return witness_from_ballots(p, std::move(ballots));
  }
  return std::nullopt;
}

/// Index of the first mask in the batch that passes, or batch.size().
std::size_t first_passing(const Profile& p, const std::vector<std::uint64_t>& batch,
                          Execution exec) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (check_tie_set(p, Outcome::from_mask(batch[i]))) return i;
    }
    return batch.size();
  }

  long long first = LLONG_MAX;
  std::string error;
  const long long count = static_cast<long long>(batch.size());
#pragma omp parallel for reduction(min : first) schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    if (i >= first) continue;
    try {
      if (check_tie_set(p, Outcome::from_mask(batch[static_cast<std::size_t>(i)]))) first = i;
    } catch (const InputError& e) {
#pragma omp critical(plurality_scan_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw InputError(error);
  return first == LLONG_MAX ? batch.size() : static_cast<std::size_t>(first);
}

}  // namespace

PneCheck is_pne(const Profile& p, std::span<const Ballot> ballots) {
  if (static_cast<int>(ballots.size()) != p.n()) {
    throw InputError("ballot vector has " + std::to_string(ballots.size()) +
                     " entries for " + std::to_string(p.n()) + " voters");
  }
  const Tally t = tally(ballots, p.m);
  const Outcome current = outcome(t);
  for (int i = 0; i < p.n(); ++i) {
    const Ballot mine = ballots[i];
    const Payoff stay = payoff(p.voters[i], current, mine.is_vote());
    for (int code = 0; code <= p.m; ++code) {
      if (code == mine.code()) continue;
      const Outcome moved =
          Outcome::from_mask(winners_after(t.counts, t.cast, mine.code(), code));
      if (payoff(p.voters[i], moved, code != 0) > stay) {
        return PneCheck{false, Deviation{i, Ballot::from_code(code)}};
      }
    }
  }
  return PneCheck{true, std::nullopt};
}

EquilibriumChecker::EquilibriumChecker(const Profile& p) : profile_(&p) {
  if (p.m <= PreferenceTable::kMaxCandidates) table_.emplace(p);
}

PneCheck EquilibriumChecker::check(std::span<const Ballot> ballots) const {
  if (!table_) return is_pne(*profile_, ballots);
  const Profile& p = *profile_;
  if (static_cast<int>(ballots.size()) != p.n()) {
    throw InputError("ballot vector has " + std::to_string(ballots.size()) +
                     " entries for " + std::to_string(p.n()) + " voters");
  }
  const Tally t = tally(ballots, p.m);
  const std::uint64_t current = winners_after(t.counts, t.cast, 0, 0);
  for (int i = 0; i < p.n(); ++i) {
    const int mine = ballots[i].code();
    const std::uint64_t stay = table_->key(i, current, mine != 0);
    for (int code = 0; code <= p.m; ++code) {
      if (code == mine) continue;
      const std::uint64_t moved = winners_after(t.counts, t.cast, mine, code);
      if (table_->key(i, moved, code != 0) > stay) {
        return PneCheck{false, Deviation{i, Ballot::from_code(code)}};
      }
    }
  }
  return PneCheck{true, std::nullopt};
}

bool EquilibriumChecker::is_equilibrium(std::span<const int> codes,
                                        std::span<const int> counts) const {
  if (!table_) {
    BallotVector ballots;
    ballots.reserve(codes.size());
    for (int c : codes) ballots.push_back(Ballot::from_code(c));
    return is_pne(*profile_, ballots).is_pne;
  }
  int cast = 0;
  for (int c : counts) cast += c;
  const std::uint64_t current = winners_after(counts, cast, 0, 0);
  const int m = profile_->m;
  for (int i = 0; i < static_cast<int>(codes.size()); ++i) {
    const int mine = codes[i];
    const std::uint64_t stay = table_->key(i, current, mine != 0);
    for (int code = 0; code <= m; ++code) {
      if (code == mine) continue;
      if (table_->key(i, winners_after(counts, cast, mine, code), code != 0) > stay) {
        return false;
      }
    }
  }
  return true;
}

std::optional<int> unanimous_top(const Profile& p) {
  std::optional<int> common;
  for (const auto& u : p.voters) {
    int top = 0;
    bool strict = true;
    for (int j = 1; j < p.m; ++j) {
      if (u[j] > u[top]) {
        top = j;
        strict = true;
      } else if (u[j] == u[top]) {
        strict = false;
      }
    }
    if (!strict) return std::nullopt;
    if (common && *common != top) return std::nullopt;
    common = top;
  }
  return common;
}

std::optional<TopChoicePartition> check_tie_set(const Profile& p, Outcome tie_set) {
  if (p.m < kMaxCandidates && (tie_set.mask() >> p.m) != 0) {
    throw InputError("tie set " + format_outcome(p, tie_set) + " is not a subset of the " +
                     std::to_string(p.m) + " candidates");
  }
  const int k = tie_set.size();
  if (k < 2) throw InputError("tie set needs at least two candidates");
  const int n = p.n();
  if (n % k != 0) return std::nullopt;
  const int quota = n / k;

  const std::vector<int> members = tie_set.members();
  std::vector<std::vector<int>> groups(members.size());
  for (int i = 0; i < n; ++i) {
    const UtilityVector& u = p.voters[i];
    std::size_t best = 0;
    for (std::size_t t = 1; t < members.size(); ++t) {
      if (u[members[t]] == u[members[best]]) {
        throw InputError("voter " + p.voter_name(i) + " is indifferent between " +
                         p.candidate_name(members[t]) + " and " +
                         p.candidate_name(members[best]));
      }
      if (u[members[t]] > u[members[best]]) best = t;
    }
    groups[best].push_back(i);
    if (static_cast<int>(groups[best].size()) > quota) return std::nullopt;
  }
  for (const auto& g : groups) {
    if (static_cast<int>(g.size()) != quota) return std::nullopt;
  }

  // Each voter must prefer the full tie to any other member winning alone.
  for (std::size_t l = 0; l < members.size(); ++l) {
    for (int i : groups[l]) {
      const ExpectedUtility tie_value = expected_utility(p.voters[i], tie_set);
      for (std::size_t t = 0; t < members.size(); ++t) {
        if (t == l) continue;
        const ExpectedUtility alone = expected_utility(p.voters[i], Outcome{members[t]});
        const auto cmp = tie_value <=> alone;
        if (cmp == 0) {
          throw InputError("voter " + p.voter_name(i) + " is indifferent between " +
                           format_outcome(p, tie_set) + " and {" +
                           p.candidate_name(members[t]) + "}");
        }
        if (cmp < 0) return std::nullopt;
      }
    }
  }

  if (quota == 1) {
    for (std::size_t l = 0; l < members.size(); ++l) {
      const int i = groups[l].front();
      const ExpectedUtility tie_value = expected_utility(p.voters[i], tie_set);
      const std::uint64_t without = tie_set.mask() & ~(std::uint64_t{1} << members[l]);
      for (int c = 0; c < p.m; ++c) {
        if (tie_set.contains(c)) continue;
        const Outcome moved = Outcome::from_mask(without | (std::uint64_t{1} << c));
        const auto cmp = tie_value <=> expected_utility(p.voters[i], moved);
        if (cmp == 0) {
          throw InputError("voter " + p.voter_name(i) + " is indifferent between " +
                           format_outcome(p, tie_set) + " and " + format_outcome(p, moved));
        }
        if (cmp < 0) return std::nullopt;
      }
    }
  }

  TopChoicePartition partition;
  partition.tie_set = tie_set;
  for (std::size_t l = 0; l < members.size(); ++l) {
    partition.groups.emplace_back(members[l], std::move(groups[l]));
  }
  return partition;
}

BallotVector tie_ballots(const Profile& p, const TopChoicePartition& partition) {
  BallotVector ballots(static_cast<std::size_t>(p.n()), Ballot::abstain());
  for (const auto& [candidate, voters] : partition.groups) {
    for (int i : voters) ballots[i] = Ballot::vote(candidate);
  }
  return ballots;
}

std::optional<PneWitness> find_pne(const Profile& p, Execution exec) {
  if (auto w = unanimous_witness(p)) return w;
  const int n = p.n();
  std::vector<std::uint64_t> batch;
  batch.reserve(kScanBatch);
  for (int k = 2; k <= std::min(p.m, n); ++k) {
    if (n % k != 0) continue;
    CombinationCursor cursor(p.m, k);
    while (!cursor.done()) {
      batch.clear();
      while (!cursor.done() && batch.size() < kScanBatch) {
        batch.push_back(cursor.mask());
        cursor.advance();
      }
      const std::size_t hit = first_passing(p, batch, exec);
      if (hit < batch.size()) {
        auto partition = check_tie_set(p, Outcome::from_mask(batch[hit]));
        return witness_from_ballots(p, tie_ballots(p, *partition));
      }
    }
  }
  return std::nullopt;
}

std::vector<Outcome> enumerate_pne_outcomes(const Profile& p) {
  std::vector<Outcome> outcomes;
  if (auto top = unanimous_top(p)) outcomes.push_back(Outcome{*top});
  const int n = p.n();
  for (int k = 2; k <= std::min(p.m, n); ++k) {
    if (n % k != 0) continue;
    for (CombinationCursor cursor(p.m, k); !cursor.done(); cursor.advance()) {
      const Outcome candidate_set = Outcome::from_mask(cursor.mask());
      if (check_tie_set(p, candidate_set)) outcomes.push_back(candidate_set);
    }
  }
  return outcomes;
}

}  // namespace plurality
