#include "plurality/sequential.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "plurality/oracle.hpp"

namespace plurality {

namespace {

using Counts = std::array<int, PreferenceTable::kMaxCandidates>;

std::uint32_t winners_with(const Counts& counts, int m, int added_code) {
  int best = 0;
  std::uint32_t mask = 0;
  for (int j = 0; j < m; ++j) {
    const int c = counts[j] + (added_code == j + 1);
    if (c > best) {
      best = c;
      mask = std::uint32_t{1} << j;
    } else if (c == best && c > 0) {
      mask |= std::uint32_t{1} << j;
    }
  }
  return mask;
}

struct Choice {
  int code = 0;
  std::uint32_t mask = 0;
};

/// First action of maximal key for `voter`; `result_of(code)` gives the final
/// winners after that action.
template <typename ResultOf>
Choice best_action(const PreferenceTable& table, int voter, std::span<const int> actions,
                   ResultOf&& result_of) {
  Choice best;
  std::uint64_t best_key = 0;
  bool first = true;
  for (int code : actions) {
    const std::uint32_t mask = result_of(code);
    const std::uint64_t key = table.key(voter, mask, code != 0);
    if (first || key > best_key) {
      best = Choice{code, mask};
      best_key = key;
      first = false;
    }
  }
  return best;
}

void require_order(const Profile& p, const VotingOrder& order) {
  if (order.size() != p.n()) {
    throw InputError("voting order has " + std::to_string(order.size()) + " entries for " +
                     std::to_string(p.n()) + " voters");
  }
}

}  // namespace

VotingOrder::VotingOrder(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (int v : order_) {
    if (v < 0 || v >= static_cast<int>(order_.size())) {
      throw InputError("voting order names voter " + std::to_string(v) + " out of range");
    }
    if (seen[v]) throw InputError("voting order lists voter " + std::to_string(v) + " twice");
    seen[v] = true;
  }
}

VotingOrder VotingOrder::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  return VotingOrder(std::move(order));
}

std::uint64_t checked_power(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

std::vector<int> action_order(int m, const std::vector<int>& tie_break) {
  std::vector<int> actions{0};
  if (tie_break.empty()) {
    for (int c = 0; c < m; ++c) actions.push_back(c + 1);
    return actions;
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  if (static_cast<int>(tie_break.size()) != m) {
    throw InputError("tie-break order must list all " + std::to_string(m) + " candidates");
  }
  for (int c : tie_break) {
    if (c < 0 || c >= m || seen[c]) throw InputError("tie-break order is not a permutation");
    seen[c] = true;
    actions.push_back(c + 1);
  }
  return actions;
}

SpneResult spne_history(const Profile& p, const VotingOrder& order, const SolveOptions& options) {
  require_order(p, order);
  const int n = p.n();
  const int m = p.m;
  const std::uint64_t branching = static_cast<std::uint64_t>(m) + 1;
  const std::uint64_t leaves = checked_power(branching, n);
  if (leaves > options.max_states) {
    throw BoundExceeded("history solver state space (m+1)^n exceeds --max-states", leaves,
                        options.max_states);
  }
  const PreferenceTable table(p);
  const std::vector<int> actions = action_order(m, options.tie_break);
  const bool parallel = options.execution == Execution::parallel;

  // decisions[i][h]: action code of the round-i mover after history h, where
  // h encodes the first i ballots in base m+1, earliest round most significant.
  std::vector<std::vector<std::uint8_t>> decisions(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> next;  // final winners for each history one round longer
  std::uint64_t states = 0;

  for (int round = n - 1; round >= 0; --round) {
    const std::int64_t size = static_cast<std::int64_t>(checked_power(branching, round));
    const int voter = order.voter_at(round);
    const bool last = round == n - 1;
    std::vector<std::uint32_t> current(static_cast<std::size_t>(size));
    std::vector<std::uint8_t>& chosen = decisions[round];
    chosen.resize(static_cast<std::size_t>(size));

    if (last) {
      // Walk each block with an odometer so the tally is decoded only once per block.
      constexpr std::int64_t kBlock = 4096;
      const std::int64_t blocks = (size + kBlock - 1) / kBlock;
#pragma omp parallel for if (parallel) schedule(static)
      for (std::int64_t b = 0; b < blocks; ++b) {
        const std::int64_t begin = b * kBlock;
        const std::int64_t end = std::min(size, begin + kBlock);
        Counts counts{};
        std::vector<int> digits(static_cast<std::size_t>(round), 0);
        std::uint64_t rest = static_cast<std::uint64_t>(begin);
        for (int d = 0; d < round; ++d, rest /= branching) {
          digits[d] = static_cast<int>(rest % branching);
          if (digits[d] != 0) ++counts[digits[d] - 1];
        }
        for (std::int64_t h = begin; h < end; ++h) {
          const Choice choice = best_action(table, voter, actions,
                                            [&](int code) { return winners_with(counts, m, code); });
          current[static_cast<std::size_t>(h)] = choice.mask;
          chosen[static_cast<std::size_t>(h)] = static_cast<std::uint8_t>(choice.code);
          for (int d = 0; d < round; ++d) {
            if (digits[d] != 0) --counts[digits[d] - 1];
            if (++digits[d] < static_cast<int>(branching)) {
              ++counts[digits[d] - 1];
              break;
            }
            digits[d] = 0;
          }
        }
      }
    } else {
#pragma omp parallel for if (parallel) schedule(static)
      for (std::int64_t h = 0; h < size; ++h) {
        const std::uint64_t base = static_cast<std::uint64_t>(h) * branching;
        const Choice choice = best_action(
            table, voter, actions, [&](int code) { return next[base + static_cast<std::uint64_t>(code)]; });
        current[static_cast<std::size_t>(h)] = choice.mask;
        chosen[static_cast<std::size_t>(h)] = static_cast<std::uint8_t>(choice.code);
      }
    }
    states += static_cast<std::uint64_t>(size);
    next = std::move(current);
  }

  SpneResult result;
  result.states = states;
  if (n == 0) return result;
  result.outcome = Outcome::from_mask(next[0]);
  std::uint64_t h = 0;
  for (int round = 0; round < n; ++round) {
    const int code = decisions[round][h];
    result.votes.push_back(Ballot::from_code(code));
    h = h * branching + static_cast<std::uint64_t>(code);
  }
  return result;
}

CountDpSolver::CountDpSolver(const Profile& p, const VotingOrder& order,
                             const SolveOptions& options)
    : m_(p.m), n_(p.n()) {
  require_order(p, order);
  const std::uint64_t slice = checked_power(static_cast<std::uint64_t>(n_) + 1, m_);
  const std::uint64_t rounds = static_cast<std::uint64_t>(std::max(n_, 1));
  const std::uint64_t cells = slice > std::numeric_limits<std::uint64_t>::max() / rounds
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : slice * rounds;
  if (cells > options.max_table) {
    throw BoundExceeded("count solver table n*(n+1)^m exceeds --max-table", cells,
                        options.max_table);
  }
  const PreferenceTable table(p);
  const std::vector<int> actions = action_order(m_, options.tie_break);
  const bool parallel = options.execution == Execution::parallel;

  slice_ = static_cast<std::size_t>(slice);
  stride_.resize(static_cast<std::size_t>(m_));
  for (int j = 0; j < m_; ++j) stride_[j] = static_cast<std::size_t>(checked_power(n_ + 1, j));
  decisions_.assign(slice_ * static_cast<std::size_t>(n_), 0);

  std::vector<std::uint32_t> next(slice_, 0);
  std::vector<std::uint32_t> current(slice_, 0);
  const std::int64_t count = static_cast<std::int64_t>(slice_);
  std::uint64_t states = 0;

  for (int round = n_ - 1; round >= 0; --round) {
    const int voter = order.voter_at(round);
    const bool last = round == n_ - 1;
    std::uint8_t* chosen = decisions_.data() + static_cast<std::size_t>(round) * slice_;

#pragma omp parallel for if (parallel) schedule(static) reduction(+ : states)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Counts counts{};
      int cast = 0;
      std::size_t rest = static_cast<std::size_t>(idx);
      for (int j = 0; j < m_; ++j) {
        counts[j] = static_cast<int>(rest % static_cast<std::size_t>(n_ + 1));
        rest /= static_cast<std::size_t>(n_ + 1);
        cast += counts[j];
      }
      if (cast > round) continue;
      ++states;
      Choice choice;
      if (last) {
        choice = best_action(table, voter, actions,
                             [&](int code) { return winners_with(counts, m_, code); });
      } else {
        choice = best_action(table, voter, actions, [&](int code) {
          const std::size_t to =
              code == 0 ? static_cast<std::size_t>(idx)
                        : static_cast<std::size_t>(idx) + stride_[static_cast<std::size_t>(code - 1)];
          return next[to];
        });
      }
      current[static_cast<std::size_t>(idx)] = choice.mask;
      chosen[idx] = static_cast<std::uint8_t>(choice.code);
    }
    std::swap(next, current);
  }
  states_ = states;
}

std::size_t CountDpSolver::index(std::span<const int> counts) const {
  std::size_t idx = 0;
  for (int j = 0; j < m_; ++j) idx += static_cast<std::size_t>(counts[j]) * stride_[j];
  return idx;
}

int CountDpSolver::action(std::span<const int> counts, int round) const {
  if (static_cast<int>(counts.size()) != m_ || round < 0 || round >= n_) {
    throw InputError("count state out of range");
  }
  int cast = 0;
  for (int c : counts) {
    if (c < 0) throw InputError("negative vote count");
    cast += c;
  }
  if (cast > round) throw InputError("more votes than rounds played");
  return decisions_[static_cast<std::size_t>(round) * slice_ + index(counts)];
}

SpneResult CountDpSolver::play_from(std::span<const Ballot> prefix) const {
  if (static_cast<int>(prefix.size()) > n_) throw InputError("history longer than the election");
  std::vector<int> counts(static_cast<std::size_t>(m_), 0);
  SpneResult result;
  for (Ballot b : prefix) {
    if (b.is_vote()) {
      if (b.candidate() >= m_) throw InputError("history votes for an unknown candidate");
      ++counts[b.candidate()];
    }
    result.votes.push_back(b);
  }
  for (int round = static_cast<int>(prefix.size()); round < n_; ++round) {
    const int code = decisions_[static_cast<std::size_t>(round) * slice_ + index(counts)];
    if (code != 0) ++counts[code - 1];
    result.votes.push_back(Ballot::from_code(code));
  }
  result.outcome = outcome(tally(result.votes, m_));
  result.states = states_;
  return result;
}

SpneResult CountDpSolver::play() const { return play_from({}); }

SpneResult spne_counts(const Profile& p, const VotingOrder& order, const SolveOptions& options) {
  return CountDpSolver(p, order, options).play();
}

Engine parse_engine(const std::string& name) {
  if (name == "auto" || name.empty()) return Engine::automatic;
  if (name == "history") return Engine::history;
  if (name == "counts") return Engine::counts;
  if (name == "tree") return Engine::tree;
  throw InputError("unknown engine '" + name + "' (expected history, counts or tree)");
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::automatic: return "auto";
    case Engine::history: return "history";
    case Engine::counts: return "counts";
    case Engine::tree: return "tree";
  }
  return "auto";
}

SpneResult solve_spne(const Profile& p, const VotingOrder& order, Engine engine,
                      const SolveOptions& options, Engine* used) {
  if (engine == Engine::automatic) {
    const std::uint64_t leaves = checked_power(static_cast<std::uint64_t>(p.m) + 1, p.n());
    engine = leaves <= options.max_states ? Engine::history : Engine::counts;
  }
  if (used != nullptr) *used = engine;
  switch (engine) {
    case Engine::history: return spne_history(p, order, options);
    case Engine::counts: return spne_counts(p, order, options);
    case Engine::tree: {
      TreeOptions tree;
      tree.tie_break = options.tie_break;
      return tree_spne(p, order, tree);
    }
    case Engine::automatic: break;
  }
  return spne_counts(p, order, options);
}

std::pair<Outcome, int> winner_mandate(const Profile& p, const VotingOrder& order,
                                       const SolveOptions& options) {
  const SpneResult r = solve_spne(p, order, Engine::automatic, options);
  const Tally t = tally(r.votes, p.m);
  const int mandate = t.cast == 0 ? 0 : *std::max_element(t.counts.begin(), t.counts.end());
  return {r.outcome, mandate};
}

}  // namespace plurality
