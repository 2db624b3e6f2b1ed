#include "plurality/oracle.hpp"

#include <algorithm>

namespace plurality {

namespace {

constexpr std::uint64_t kChunk = 4096;

/// Decodes `index` into action codes (voter 0 most significant) and their tally.
void decode(std::uint64_t index, int m, std::vector<int>& codes, std::vector<int>& counts) {
  const std::uint64_t base = static_cast<std::uint64_t>(m) + 1;
  std::fill(counts.begin(), counts.end(), 0);
  for (int i = static_cast<int>(codes.size()) - 1; i >= 0; --i) {
    codes[i] = static_cast<int>(index % base);
    index /= base;
    if (codes[i] != 0) ++counts[codes[i] - 1];
  }
}

/// Odometer step in enumeration order, keeping the tally in sync.
void step(int m, std::vector<int>& codes, std::vector<int>& counts) {
  for (int i = static_cast<int>(codes.size()) - 1; i >= 0; --i) {
    if (codes[i] != 0) --counts[codes[i] - 1];
    if (codes[i] < m) {
      ++codes[i];
      ++counts[codes[i] - 1];
      return;
    }
    codes[i] = 0;
  }
}

PneWitness to_witness(const Profile& p, const std::vector<int>& codes) {
  BallotVector ballots;
  ballots.reserve(codes.size());
  for (int c : codes) ballots.push_back(Ballot::from_code(c));
  const Outcome o = outcome(tally(ballots, p.m));
  return PneWitness{std::move(ballots), o};
}

std::vector<PneWitness> scan_range(const Profile& p, const EquilibriumChecker& checker,
                                   std::uint64_t begin, std::uint64_t end) {
  std::vector<PneWitness> found;
  std::vector<int> codes(static_cast<std::size_t>(p.n()));
  std::vector<int> counts(static_cast<std::size_t>(p.m));
  decode(begin, p.m, codes, counts);
  for (std::uint64_t index = begin; index < end; ++index) {
    if (checker.is_equilibrium(codes, counts)) found.push_back(to_witness(p, codes));
    step(p.m, codes, counts);
  }
  return found;
}

struct TreeNode {
  Outcome outcome;
  /// Ballots from this round to the end, last round first.
  BallotVector reversed_votes;
};

class TreeSolver {
 public:
  TreeSolver(const Profile& p, const VotingOrder& order, std::vector<int> actions)
      : p_(p), order_(order), actions_(std::move(actions)), counts_(static_cast<std::size_t>(p.m)) {}

  TreeNode solve(int round) {
    ++states_;
    if (round == p_.n()) {
      Tally t;
      t.counts = counts_;
      for (int c : counts_) t.cast += c;
      return TreeNode{outcome(t), {}};
    }
    const UtilityVector& u = p_.voters[order_.voter_at(round)];
    TreeNode best;
    Payoff best_payoff{ExpectedUtility::negative_infinity(), true};
    int best_code = -1;
    for (int code : actions_) {
      if (code != 0) ++counts_[code - 1];
      TreeNode child = solve(round + 1);
      if (code != 0) --counts_[code - 1];
      Payoff value = payoff(u, child.outcome, code != 0);
      if (best_code < 0 || value > best_payoff) {
        best = std::move(child);
        best_payoff = std::move(value);
        best_code = code;
      }
    }
    best.reversed_votes.push_back(Ballot::from_code(best_code));
    return best;
  }

  std::uint64_t states() const { return states_; }

 private:
  const Profile& p_;
  const VotingOrder& order_;
  std::vector<int> actions_;
  std::vector<int> counts_;
  std::uint64_t states_ = 0;
};

}  // namespace

std::vector<PneWitness> brute_force_pne(const Profile& p, const BruteForceOptions& options) {
  const std::uint64_t total = checked_power(static_cast<std::uint64_t>(p.m) + 1, p.n());
  if (total > options.max_profiles) {
    throw BoundExceeded("brute-force PNE enumeration (m+1)^n exceeds the bound", total,
                        options.max_profiles);
  }
  const EquilibriumChecker checker(p);
  if (options.execution == Execution::serial) return scan_range(p, checker, 0, total);

  const std::int64_t chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::vector<std::vector<PneWitness>> per_chunk(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    per_chunk[static_cast<std::size_t>(c)] =
        scan_range(p, checker, begin, std::min(total, begin + kChunk));
  }
  std::vector<PneWitness> all;
  for (auto& found : per_chunk) {
    std::move(found.begin(), found.end(), std::back_inserter(all));
  }
  return all;
}

SpneResult tree_spne(const Profile& p, const VotingOrder& order, const TreeOptions& options) {
  if (order.size() != p.n()) {
    throw InputError("voting order has " + std::to_string(order.size()) + " entries for " +
                     std::to_string(p.n()) + " voters");
  }
  const std::uint64_t leaves = checked_power(static_cast<std::uint64_t>(p.m) + 1, p.n());
  if (leaves > options.max_leaves) {
    throw BoundExceeded("tree solver leaves (m+1)^n exceed the bound", leaves,
                        options.max_leaves);
  }
  TreeSolver solver(p, order, action_order(p.m, options.tie_break));
  TreeNode root = solver.solve(0);
  SpneResult result;
  result.outcome = root.outcome;
  result.votes.assign(root.reversed_votes.rbegin(), root.reversed_votes.rend());
  result.states = solver.states();
  return result;
}

}  // namespace plurality
