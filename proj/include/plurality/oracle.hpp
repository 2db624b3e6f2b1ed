#pragma once

// Brute-force references. These favour being obviously correct over speed
// and exist to check the solvers in simultaneous.hpp and sequential.hpp.

#include <cstdint>
#include <vector>

#include "plurality/model.hpp"
#include "plurality/sequential.hpp"
#include "plurality/simultaneous.hpp"

namespace plurality {

struct BruteForceOptions {
  /// Bound on (m+1)^n.
  std::uint64_t max_profiles = 10'000'000;
  Execution execution = Execution::parallel;
};

/// Every ballot vector that is a PNE, in lexicographic order over action
/// codes (abstain < candidate 0 < candidate 1 ...), voter 0 most
/// significant.
std::vector<PneWitness> brute_force_pne(const Profile& p, const BruteForceOptions& options = {});

struct TreeOptions {
  std::vector<int> tie_break;
  /// Bound on (m+1)^n.
  std::uint64_t max_leaves = std::uint64_t{1} << 20;
};

/// Plain recursive backward induction without memoisation, comparing exact
/// rational payoffs.
SpneResult tree_spne(const Profile& p, const VotingOrder& order, const TreeOptions& options = {});

}  // namespace plurality
