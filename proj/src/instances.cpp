#include "plurality/instances.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace plurality {

namespace {

/// Whether power-of-(m+1) utilities keep all outcomes apart. The answer only
/// depends on m, so it is computed once per m.
bool rank_utilities_distinct(int m) {
  static std::mutex mutex;
  static std::map<int, bool> known;
  {
    const std::lock_guard lock(mutex);
    if (auto it = known.find(m); it != known.end()) return it->second;
  }
  bool distinct = true;
  if (m <= kDefaultValidationMaxCandidates) {
    UtilityVector u(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) u[j] = boost::multiprecision::pow(BigInt(m + 1), m - 1 - j);
    distinct = !find_indifference(u).has_value();
  }
  const std::lock_guard lock(mutex);
  known[m] = distinct;
  return distinct;
}

std::string set_label(const std::array<int, 3>& s) {
  return "{" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) +
         "}";
}

}  // namespace

void require_ranking(const Ranking& r, int m) {
  if (static_cast<int>(r.size()) != m) {
    throw InputError("ranking has " + std::to_string(r.size()) + " entries, expected " +
                     std::to_string(m));
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int c : r) {
    if (c < 0 || c >= m || seen[c]) throw InputError("ranking is not a permutation");
    seen[c] = true;
  }
}

UtilityVector rank_to_utilities(const Ranking& r) {
  const int m = static_cast<int>(r.size());
  require_ranking(r, m);
  if (m == 0) throw InputError("ranking is empty");
  if (!rank_utilities_distinct(m)) {
    throw std::logic_error("rank utilities with m = " + std::to_string(m) +
                           " make two outcomes tie");
  }
  UtilityVector u(static_cast<std::size_t>(m));
  BigInt value = 1;
  for (int j = m - 1; j >= 0; --j) {
    u[r[j]] = value;
    value *= m + 1;
  }
  return u;
}

UtilityVector three_candidate_utilities(const Ranking& r, ThreeCandidateKind kind) {
  require_ranking(r, 3);
  const std::array<int, 3> pattern =
      kind == ThreeCandidateKind::top_bottom ? std::array{8, 3, 2} : std::array{8, 5, 1};
  UtilityVector u(3);
  for (int j = 0; j < 3; ++j) u[r[j]] = pattern[j];
  return u;
}

Profile random_profile(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw InputError("random profile needs n >= 1 and m >= 1");
  std::mt19937_64 rng(seed);
  Profile p;
  p.m = m;
  Ranking r(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    std::iota(r.begin(), r.end(), 0);
    std::shuffle(r.begin(), r.end(), rng);
    p.voters.push_back(rank_to_utilities(r));
  }
  return p;
}

Profile example_one_profile() {
  Profile p = make_profile(3, {{5, 2, 1}, {5, 2, 1}, {5, 1, 2}, {5, 1, 2}});
  p.candidate_names = {"A", "B", "C"};
  return p;
}

void validate_x3c(const X3cInstance& x) {
  if (x.ground_size <= 0 || x.ground_size % 3 != 0) {
    throw InputError("X3C ground size must be a positive multiple of 3, got " +
                     std::to_string(x.ground_size));
  }
  std::set<std::array<int, 3>> seen;
  for (const auto& s : x.sets) {
    for (int g : s) {
      if (g < 0 || g >= x.ground_size) {
        throw InputError("X3C set " + set_label(s) + " has an element outside the ground set");
      }
    }
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      throw InputError("X3C set " + set_label(s) + " does not have 3 distinct elements");
    }
    std::array<int, 3> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) throw InputError("X3C set " + set_label(s) + " is duplicated");
  }
}

std::vector<int> x3c_thickness(const X3cInstance& x) {
  std::vector<int> f(static_cast<std::size_t>(x.ground_size), 0);
  for (const auto& s : x.sets) {
    for (int g : s) ++f.at(static_cast<std::size_t>(g));
  }
  return f;
}

ReductionOutput x3c_reduce(const X3cInstance& x) {
  validate_x3c(x);
  ReductionOutput out;
  std::vector<int> f = x3c_thickness(x);
  const bool uniform = std::all_of(f.begin(), f.end(), [&](int v) { return v == f[0]; });

  if (uniform && f[0] == 1) {
    out.profile = example_one_profile();
    out.shortcut = true;
    out.d_begin = out.d_end = out.e_begin = out.e_end = 0;
    out.note = "every element has thickness 1: the sets are an exact cover; emitted a fixed "
               "yes-instance";
    return out;
  }

  X3cInstance work = x;
  if (uniform) {
    const int g = work.ground_size;
    work.sets.push_back({g, g + 1, g + 2});
    work.ground_size += 3;
    out.gadget_added = true;
    f = x3c_thickness(work);
  }

  const int ground = work.ground_size;
  const int num_sets = static_cast<int>(work.sets.size());
  std::vector<int> element_of(static_cast<std::size_t>(ground));
  std::iota(element_of.begin(), element_of.end(), 0);
  std::stable_sort(element_of.begin(), element_of.end(),
                   [&](int a, int b) { return f[a] > f[b]; });
  std::vector<int> renumbered(static_cast<std::size_t>(ground));
  for (int i = 0; i < ground; ++i) renumbered[element_of[i]] = i;

  const int m = ground + num_sets;
  Profile& p = out.profile;
  p.m = m;
  for (int i = 0; i < ground; ++i) p.candidate_names.push_back("d" + std::to_string(i + 1));
  for (int j = 0; j < num_sets; ++j) p.candidate_names.push_back("e" + std::to_string(j + 1));

  auto add_voter = [&](Ranking r, std::string name) {
    p.voters.push_back(rank_to_utilities(r));
    p.voter_names.push_back(std::move(name));
  };

  for (int i = 0; i < ground; ++i) {
    Ranking r{i};
    for (int d = 0; d < ground; ++d) {
      if (d != i) r.push_back(d);
    }
    for (int e = 0; e < num_sets; ++e) r.push_back(ground + e);
    for (int copy = 1; copy <= 2; ++copy) {
      add_voter(r, "u(" + std::to_string(i + 1) + "," + std::to_string(copy) + ")");
    }
  }
  for (int j = 0; j < num_sets; ++j) {
    std::array<int, 3> members{};
    for (int t = 0; t < 3; ++t) members[t] = renumbered[work.sets[j][t]];
    std::sort(members.begin(), members.end());
    for (int t : members) {
      Ranking r{ground + j, t};
      for (int d = 0; d < ground; ++d) {
        if (d != t) r.push_back(d);
      }
      for (int e = 0; e < num_sets; ++e) {
        if (e != j) r.push_back(ground + e);
      }
      add_voter(r, "w(" + std::to_string(j + 1) + "," + std::to_string(t + 1) + ")");
    }
  }

  out.d_begin = 0;
  out.d_end = ground;
  out.e_begin = ground;
  out.e_end = m;
  out.element_of = std::move(element_of);
  out.note = out.gadget_added ? "uniform thickness: added gadget elements and set"
                              : "non-uniform instance";
  return out;
}

bool x3c_solve_bruteforce(const X3cInstance& x, const X3cBounds& bounds) {
  validate_x3c(x);
  if (x.ground_size > bounds.max_ground) {
    throw BoundExceeded("X3C ground set too large for brute force",
                        static_cast<std::uint64_t>(x.ground_size),
                        static_cast<std::uint64_t>(bounds.max_ground));
  }
  if (static_cast<int>(x.sets.size()) > bounds.max_sets) {
    throw BoundExceeded("X3C set family too large for brute force", x.sets.size(),
                        static_cast<std::uint64_t>(bounds.max_sets));
  }
  std::vector<std::uint64_t> masks;
  for (const auto& s : x.sets) {
    masks.push_back((std::uint64_t{1} << s[0]) | (std::uint64_t{1} << s[1]) |
                    (std::uint64_t{1} << s[2]));
  }
  const std::uint64_t full = (std::uint64_t{1} << x.ground_size) - 1;
  const int need = x.ground_size / 3;
  const int count = static_cast<int>(masks.size());

  // Every size-need subset of the sets, checked for pairwise disjointness.
  std::vector<int> pick(static_cast<std::size_t>(need));
  std::iota(pick.begin(), pick.end(), 0);
  if (need > count) return false;
  while (true) {
    std::uint64_t covered = 0;
    bool disjoint = true;
    for (int idx : pick) {
      if (covered & masks[idx]) {
        disjoint = false;
        break;
      }
      covered |= masks[idx];
    }
    if (disjoint && covered == full) return true;
    int i = need - 1;
    while (i >= 0 && pick[i] == count - need + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace plurality
