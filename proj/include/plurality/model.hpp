#pragma once

// Election semantics shared by every solver: ballots, tallies, outcomes,
// utilities and the lexicographic payoff order of lazy voters.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plurality {

using BigInt = boost::multiprecision::cpp_int;

/// Outcomes are stored as candidate bitmasks, so elections are limited to 64
/// candidates.
inline constexpr int kMaxCandidates = 64;

/// Malformed input: bad indices, invalid profiles, schema violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound would be exceeded by the requested computation.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, std::uint64_t size, std::uint64_t bound);

  std::uint64_t size() const { return size_; }
  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t size_;
  std::uint64_t bound_;
};

/// Selects between an OpenMP kernel and its serial reference. Both produce
/// identical results.
enum class Execution { serial, parallel };

class Ballot {
 public:
  constexpr Ballot() = default;

  static constexpr Ballot abstain() { return Ballot(); }
  static constexpr Ballot vote(int candidate) { return Ballot(candidate); }

  constexpr bool is_abstain() const { return candidate_ < 0; }
  constexpr bool is_vote() const { return candidate_ >= 0; }
  /// Only meaningful for votes.
  constexpr int candidate() const { return candidate_; }

  /// Dense action code: 0 for abstain, c + 1 for a vote for c.
  constexpr int code() const { return candidate_ + 1; }
  static constexpr Ballot from_code(int code) { return Ballot(code - 1); }

  friend constexpr bool operator==(Ballot, Ballot) = default;

 private:
  constexpr explicit Ballot(int candidate) : candidate_(candidate < 0 ? -1 : candidate) {}

  int candidate_ = -1;
};

using BallotVector = std::vector<Ballot>;

struct Tally {
  std::vector<int> counts;
  int cast = 0;
};

/// A set of candidates; the winners of an election.
class Outcome {
 public:
  constexpr Outcome() = default;
  Outcome(std::initializer_list<int> candidates);

  static constexpr Outcome from_mask(std::uint64_t mask) {
    Outcome o;
    o.mask_ = mask;
    return o;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const;
  constexpr bool contains(int candidate) const { return (mask_ >> candidate) & 1U; }
  std::vector<int> members() const;

  friend constexpr bool operator==(Outcome, Outcome) = default;
  /// Orders by size, then lexicographically by ascending member indices.
  friend std::strong_ordering operator<=>(Outcome a, Outcome b);

 private:
  std::uint64_t mask_ = 0;
};

using UtilityVector = std::vector<BigInt>;

struct Profile {
  int m = 0;
  std::vector<UtilityVector> voters;
  std::vector<std::string> candidate_names;
  std::vector<std::string> voter_names;

  int n() const { return static_cast<int>(voters.size()); }
  std::string candidate_name(int c) const;
  std::string voter_name(int i) const;
};

/// Builds a profile from small integer utility rows.
Profile make_profile(int m, const std::vector<std::vector<long long>>& rows);

/// Exact expected utility of an outcome: a rational sum / size, or -infinity
/// for the empty outcome.
class ExpectedUtility {
 public:
  static ExpectedUtility negative_infinity() { return ExpectedUtility(); }
  ExpectedUtility(BigInt numerator, std::int64_t denominator);

  bool is_negative_infinity() const { return neg_inf_; }
  const BigInt& numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend std::strong_ordering operator<=>(const ExpectedUtility& a, const ExpectedUtility& b);
  friend bool operator==(const ExpectedUtility& a, const ExpectedUtility& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  ExpectedUtility() = default;

  bool neg_inf_ = true;
  BigInt num_ = 0;
  std::int64_t den_ = 1;
};

/// Outcome value first; at equal value abstaining beats voting (the voting
/// cost is smaller than any gap between outcome values).
struct Payoff {
  ExpectedUtility value;
  bool voted = false;

  friend std::strong_ordering operator<=>(const Payoff& a, const Payoff& b);
  friend bool operator==(const Payoff& a, const Payoff& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

Tally tally(std::span<const Ballot> ballots, int m);

/// Argmax set of the tally; empty iff no ballot was cast.
Outcome outcome(const Tally& t);

ExpectedUtility expected_utility(const UtilityVector& u, Outcome o);

Payoff payoff(const UtilityVector& u, Outcome o, bool voted);

struct Indifference {
  int voter = 0;
  Outcome first;
  Outcome second;
};

struct ValidationReport {
  bool ok = true;
  /// m was above the enumeration bound, so distinctness was not checked.
  bool skipped_distinctness = false;
  std::optional<Indifference> violation;
};

inline constexpr int kDefaultValidationMaxCandidates = 20;

/// Throws InputError on structural problems (empty election, ragged rows,
/// negative utilities). Reports the first voter indifferent between two
/// distinct nonempty outcomes.
ValidationReport validate_profile(const Profile& p,
                                  int max_candidates = kDefaultValidationMaxCandidates);

/// Two distinct nonempty outcomes with equal expected utility, if any.
std::optional<std::pair<Outcome, Outcome>> find_indifference(const UtilityVector& u);

std::string format_outcome(const Profile& p, Outcome o);
std::string format_ballot(const Profile& p, Ballot b);

}  // namespace plurality
