#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plurality/model.hpp"

namespace plurality {

struct RankedOutcomes {
  /// All nonempty outcome masks, ascending by expected utility (ties keep
  /// ascending mask order).
  std::vector<std::uint64_t> ascending;
  /// First pair of adjacent outcomes with equal expected utility.
  std::optional<std::pair<Outcome, Outcome>> tie;
};

/// Sorts the 2^m - 1 nonempty outcomes of one voter by exact expected
/// utility. Requires m <= 30.
RankedOutcomes rank_outcomes(const UtilityVector& u);

/// Per-voter rank of every outcome, precomputed from the exact order so that
/// hot loops compare integers instead of rationals.
///
/// rank(v, 0) == 0 encodes the empty outcome; nonempty outcomes get
/// 1 .. 2^m - 1 from worst to best. key() folds in the voting cost: at equal
/// rank the abstaining action is larger.
class PreferenceTable {
 public:
  static constexpr int kMaxCandidates = 20;

  /// Throws InputError if some voter is indifferent between two outcomes and
  /// BoundExceeded if m > kMaxCandidates.
  explicit PreferenceTable(const Profile& p);

  int m() const { return m_; }
  int n() const { return n_; }

  std::uint32_t rank(int voter, std::uint64_t mask) const {
    return ranks_[static_cast<std::size_t>(voter) * stride_ + mask];
  }

  std::uint64_t key(int voter, std::uint64_t mask, bool voted) const {
    return (static_cast<std::uint64_t>(rank(voter, mask)) << 1) | (voted ? 0U : 1U);
  }

 private:
  int m_;
  int n_;
  std::size_t stride_;
  std::vector<std::uint32_t> ranks_;
};

}  // namespace plurality
