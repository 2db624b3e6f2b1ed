#pragma once

// Subgame-perfect equilibria of sequential plurality voting.
//
// Every solver here uses the same action order for breaking payoff ties:
// abstain first, then candidates in SolveOptions::tie_break order (ascending
// index by default). The mover takes the first action whose payoff is
// maximal. Abstaining never ties with voting, so only two votes leading to the
// same final outcome can tie.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plurality/model.hpp"
#include "plurality/preference_table.hpp"

namespace plurality {

/// order[t] is the voter who moves in round t.
class VotingOrder {
 public:
  VotingOrder() = default;
  /// Throws InputError unless `order` is a permutation of 0..n-1.
  explicit VotingOrder(std::vector<int> order);

  static VotingOrder identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  int voter_at(int round) const { return order_[round]; }
  std::span<const int> voters() const { return order_; }

 private:
  std::vector<int> order_;
};

struct SolveOptions {
  /// Candidate order used after abstain when breaking payoff ties. Empty
  /// means ascending index.
  std::vector<int> tie_break;
  /// Bound on (m+1)^n for the history solver.
  std::uint64_t max_states = std::uint64_t{1} << 28;
  /// Bound on n * (n+1)^m for the count solver.
  std::uint64_t max_table = 100'000'000;
  Execution execution = Execution::parallel;
};

struct SpneResult {
  Outcome outcome;
  /// On-path ballots indexed by round.
  BallotVector votes;
  /// Number of decision states the solver evaluated.
  std::uint64_t states = 0;
};

/// Action codes in tie-break order: 0 (abstain) first, then c + 1 for each
/// candidate c in the requested order. Throws InputError for a tie_break that
/// is not a permutation of the candidates.
std::vector<int> action_order(int m, const std::vector<int>& tie_break);

/// Backward induction over full histories, one layer per round.
SpneResult spne_history(const Profile& p, const VotingOrder& order,
                        const SolveOptions& options = {});

/// Backward induction over (vote counts, round) states. Keeps the decision
/// table for every round so play can be resumed from any history.
class CountDpSolver {
 public:
  CountDpSolver(const Profile& p, const VotingOrder& order, const SolveOptions& options = {});

  /// Equilibrium play from the empty history.
  SpneResult play() const;
  /// Plays `prefix` as given, then equilibrium play for the remaining rounds.
  SpneResult play_from(std::span<const Ballot> prefix) const;

  /// Equilibrium action code of the round-`round` mover after `counts`.
  int action(std::span<const int> counts, int round) const;

  std::uint64_t states() const { return states_; }

 private:
  std::size_t index(std::span<const int> counts) const;

  int m_;
  int n_;
  std::vector<std::size_t> stride_;
  std::size_t slice_ = 0;
  /// decisions_[round * slice_ + index(counts)]
  std::vector<std::uint8_t> decisions_;
  std::uint64_t states_ = 0;
};

SpneResult spne_counts(const Profile& p, const VotingOrder& order,
                       const SolveOptions& options = {});

enum class Engine { automatic, history, counts, tree };

Engine parse_engine(const std::string& name);
std::string engine_name(Engine e);

/// Dispatches to one solver. `automatic` uses the history solver when
/// (m+1)^n fits options.max_states and the count solver otherwise.
/// The engine actually used is written to `used` when non-null.
SpneResult solve_spne(const Profile& p, const VotingOrder& order, Engine engine,
                      const SolveOptions& options = {}, Engine* used = nullptr);

/// Winners of the equilibrium and the number of votes each of them received.
std::pair<Outcome, int> winner_mandate(const Profile& p, const VotingOrder& order,
                                       const SolveOptions& options = {});

/// Saturating (base)^(exp); returns UINT64_MAX on overflow.
std::uint64_t checked_power(std::uint64_t base, int exp);

}  // namespace plurality
