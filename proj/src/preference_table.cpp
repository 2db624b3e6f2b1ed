#include "plurality/preference_table.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace plurality {

namespace {

constexpr int kMaxEnumerableCandidates = 30;

template <typename Sum, typename Wide>
RankedOutcomes rank_with(const std::vector<Sum>& sums, std::size_t count) {
  RankedOutcomes result;
  result.ascending.resize(count - 1);
  std::iota(result.ascending.begin(), result.ascending.end(), std::uint64_t{1});

  // a/|a| vs b/|b| by cross-multiplication
  auto compare = [&](std::uint64_t a, std::uint64_t b) {
    const Wide lhs = Wide(sums[a]) * std::popcount(b);
    const Wide rhs = Wide(sums[b]) * std::popcount(a);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  };
  std::stable_sort(result.ascending.begin(), result.ascending.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return compare(a, b) < 0; });
  for (std::size_t k = 1; k < result.ascending.size(); ++k) {
    if (compare(result.ascending[k - 1], result.ascending[k]) == 0) {
      result.tie = {Outcome::from_mask(result.ascending[k - 1]),
                    Outcome::from_mask(result.ascending[k])};
      break;
    }
  }
  return result;
}

}  // namespace

RankedOutcomes rank_outcomes(const UtilityVector& u) {
  const int m = static_cast<int>(u.size());
  if (m < 1 || m > kMaxEnumerableCandidates) {
    throw BoundExceeded("outcome enumeration needs 1 <= m <= 30", static_cast<std::uint64_t>(m),
                        kMaxEnumerableCandidates);
  }
  const std::size_t count = std::size_t{1} << m;

  BigInt total = 0;
  for (const auto& x : u) total += x;

  if (total <= BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
    std::vector<std::int64_t> sums(count, 0);
    for (std::size_t mask = 1; mask < count; ++mask) {
      const int low = std::countr_zero(mask);
      sums[mask] = sums[mask & (mask - 1)] + static_cast<std::int64_t>(u[low]);
    }
    return rank_with<std::int64_t, __int128>(sums, count);
  }
  std::vector<BigInt> sums(count, 0);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + u[low];
  }
  return rank_with<BigInt, BigInt>(sums, count);
}

PreferenceTable::PreferenceTable(const Profile& p)
    : m_(p.m), n_(p.n()), stride_(std::size_t{1} << std::max(p.m, 0)) {
  if (p.m > kMaxCandidates) {
    throw BoundExceeded("preference table limited to " + std::to_string(kMaxCandidates) +
                            " candidates",
                        static_cast<std::uint64_t>(p.m), kMaxCandidates);
  }
  ranks_.assign(stride_ * static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) {
    if (static_cast<int>(p.voters[v].size()) != m_) {
      throw InputError("voter " + p.voter_name(v) + " has a utility row of the wrong length");
    }
    const RankedOutcomes ranked = rank_outcomes(p.voters[v]);
    if (ranked.tie) {
      throw InputError("voter " + p.voter_name(v) + " is indifferent between " +
                       format_outcome(p, ranked.tie->first) + " and " +
                       format_outcome(p, ranked.tie->second));
    }
    std::uint32_t* row = ranks_.data() + static_cast<std::size_t>(v) * stride_;
    for (std::size_t k = 0; k < ranked.ascending.size(); ++k) {
      row[ranked.ascending[k]] = static_cast<std::uint32_t>(k + 1);
    }
  }
}

}  // namespace plurality
