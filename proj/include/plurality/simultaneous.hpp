#pragma once

// Pure Nash equilibria of simultaneous plurality voting.

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "plurality/model.hpp"
#include "plurality/preference_table.hpp"

namespace plurality {

struct Deviation {
  int voter = 0;
  Ballot ballot;
};

struct PneCheck {
  bool is_pne = false;
  /// First profitable deviation, scanning voters ascending and alternatives
  /// in action order (abstain, then candidates ascending).
  std::optional<Deviation> deviation;

  explicit operator bool() const { return is_pne; }
};

/// Reference check using exact rational payoffs.
PneCheck is_pne(const Profile& p, std::span<const Ballot> ballots);

/// Same predicate as is_pne, prepared once per profile. Uses integer outcome
/// ranks when m is small enough, exact payoffs otherwise.
class EquilibriumChecker {
 public:
  explicit EquilibriumChecker(const Profile& p);

  PneCheck check(std::span<const Ballot> ballots) const;
  /// Variant for hot loops: ballots as action codes, counts as their tally.
  bool is_equilibrium(std::span<const int> codes, std::span<const int> counts) const;

 private:
  const Profile* profile_;
  std::optional<PreferenceTable> table_;
};

std::optional<int> unanimous_top(const Profile& p);

struct TopChoicePartition {
  Outcome tie_set;
  /// (candidate, voters whose favourite member of tie_set it is), ascending
  /// by candidate.
  std::vector<std::pair<int, std::vector<int>>> groups;
};

/// Tie characterisation for a fixed winner set: every member is the
/// favourite (within the set) of exactly n/k voters, and each of those
/// voters prefers the full tie to any other member winning alone. When each
/// member has a single supporter and candidates outside the set exist, that
/// supporter could also move their vote outside, producing the set minus
/// their favourite plus the outsider; the tie must beat those outcomes too.
/// Throws InputError if the
/// set is not a subset of the candidates, has fewer than two members, or a
/// voter turns out indifferent (only possible for an invalid profile).
std::optional<TopChoicePartition> check_tie_set(const Profile& p, Outcome tie_set);

struct PneWitness {
  BallotVector ballots;
  Outcome outcome;
};

/// Unanimous-top construction first, then the first passing tie set in
/// (size, lexicographic) order. The parallel scan returns the same witness
/// as the serial one.
std::optional<PneWitness> find_pne(const Profile& p, Execution exec = Execution::parallel);

/// Every outcome that some PNE attains, sorted by (size, lexicographic).
std::vector<Outcome> enumerate_pne_outcomes(const Profile& p);

/// Ballots for the tie construction: every voter votes for their group's
/// candidate.
BallotVector tie_ballots(const Profile& p, const TopChoicePartition& partition);

}  // namespace plurality
