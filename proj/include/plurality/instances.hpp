#pragma once

// Instance construction: utilities from rankings, the two three-candidate
// voter classes, seeded random profiles, and the exact-cover-by-3-sets
// reduction to PNE existence.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "plurality/model.hpp"

namespace plurality {

/// Candidates from most to least preferred.
using Ranking = std::vector<int>;

void require_ranking(const Ranking& r, int m);

/// The j-th most preferred candidate (1-based j) gets (m+1)^(m-j). Throws
/// std::logic_error if the result would let a voter be indifferent between
/// two outcomes.
UtilityVector rank_to_utilities(const Ranking& r);

/// Voters with three candidates: top-bottom voters prefer a tie between
/// their first and last choice to their middle choice winning alone;
/// centrist voters prefer the opposite.
enum class ThreeCandidateKind { top_bottom, centrist };

/// (top, middle, bottom) = (8, 3, 2) for top-bottom, (8, 5, 1) for centrist.
UtilityVector three_candidate_utilities(const Ranking& r, ThreeCandidateKind kind);

/// n voters with independent uniform rankings mapped through
/// rank_to_utilities. Deterministic in the seed.
Profile random_profile(int n, int m, std::uint64_t seed);

/// Four voters over A, B, C: two rank A > B > C, two rank A > C > B.
Profile example_one_profile();

struct X3cInstance {
  int ground_size = 0;
  std::vector<std::array<int, 3>> sets;
};

/// Throws InputError for a ground size that is not a positive multiple of
/// three, malformed or out-of-range sets, and duplicate sets.
void validate_x3c(const X3cInstance& x);

/// Number of sets containing each ground element.
std::vector<int> x3c_thickness(const X3cInstance& x);

struct ReductionOutput {
  Profile profile;
  /// Candidates [d_begin, d_end) stand for ground elements, [e_begin, e_end)
  /// for sets.
  int d_begin = 0;
  int d_end = 0;
  int e_begin = 0;
  int e_end = 0;
  /// Every element has thickness 1, so the sets already form an exact cover
  /// and a fixed yes-instance is returned.
  bool shortcut = false;
  /// Uniform thickness: three fresh elements and one set covering them were
  /// added first.
  bool gadget_added = false;
  /// element_of[i] is the original ground element behind candidate d_i;
  /// gadget elements are ground_size, ground_size + 1, ground_size + 2.
  std::vector<int> element_of;
  std::string note;
};

ReductionOutput x3c_reduce(const X3cInstance& x);

struct X3cBounds {
  int max_ground = 12;
  int max_sets = 12;
};

/// Exhaustive search for N/3 pairwise disjoint sets.
bool x3c_solve_bruteforce(const X3cInstance& x, const X3cBounds& bounds = {});

}  // namespace plurality
