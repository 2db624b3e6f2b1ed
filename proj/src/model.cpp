#include "plurality/model.hpp"

#include <algorithm>
#include <bit>

#include "plurality/preference_table.hpp"

namespace plurality {

BoundExceeded::BoundExceeded(const std::string& what, std::uint64_t size, std::uint64_t bound)
    : std::runtime_error(what + " (size " + std::to_string(size) + ", bound " +
                         std::to_string(bound) + ")"),
      size_(size),
      bound_(bound) {}

Outcome::Outcome(std::initializer_list<int> candidates) {
  for (int c : candidates) mask_ |= std::uint64_t{1} << c;
}

int Outcome::size() const { return std::popcount(mask_); }

std::vector<int> Outcome::members() const {
  std::vector<int> out;
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::strong_ordering operator<=>(Outcome a, Outcome b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Same size: the set whose lowest differing member is smaller comes first.
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Profile::candidate_name(int c) const {
  if (c >= 0 && c < static_cast<int>(candidate_names.size())) return candidate_names[c];
  if (m <= 26) return std::string(1, static_cast<char>('A' + c));
  return "c" + std::to_string(c + 1);
}

std::string Profile::voter_name(int i) const {
  if (i >= 0 && i < static_cast<int>(voter_names.size())) return voter_names[i];
  return "v" + std::to_string(i + 1);
}

Profile make_profile(int m, const std::vector<std::vector<long long>>& rows) {
  Profile p;
  p.m = m;
  for (const auto& row : rows) {
    UtilityVector u;
    u.reserve(row.size());
    for (long long x : row) u.emplace_back(x);
    p.voters.push_back(std::move(u));
  }
  return p;
}

ExpectedUtility::ExpectedUtility(BigInt numerator, std::int64_t denominator)
    : neg_inf_(false), num_(std::move(numerator)), den_(denominator) {
  if (den_ <= 0) throw InputError("expected utility needs a positive denominator");
}

std::strong_ordering operator<=>(const ExpectedUtility& a, const ExpectedUtility& b) {
  if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExpectedUtility::to_string() const {
  if (neg_inf_) return "-inf";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Payoff& a, const Payoff& b) {
  if (auto c = a.value <=> b.value; c != 0) return c;
  return b.voted <=> a.voted;
}

Tally tally(std::span<const Ballot> ballots, int m) {
  Tally t;
  t.counts.assign(static_cast<std::size_t>(m), 0);
  for (Ballot b : ballots) {
    if (b.is_abstain()) continue;
    if (b.candidate() >= m) {
      throw InputError("ballot names candidate " + std::to_string(b.candidate()) +
                       " but the election has " + std::to_string(m));
    }
    ++t.counts[b.candidate()];
    ++t.cast;
  }
  return t;
}

Outcome outcome(const Tally& t) {
  if (t.cast == 0) return {};
  const int best = *std::max_element(t.counts.begin(), t.counts.end());
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < t.counts.size(); ++j) {
    if (t.counts[j] == best) mask |= std::uint64_t{1} << j;
  }
  return Outcome::from_mask(mask);
}

ExpectedUtility expected_utility(const UtilityVector& u, Outcome o) {
  if (o.empty()) return ExpectedUtility::negative_infinity();
  BigInt sum = 0;
  for (int c : o.members()) sum += u.at(static_cast<std::size_t>(c));
  return ExpectedUtility(std::move(sum), o.size());
}

Payoff payoff(const UtilityVector& u, Outcome o, bool voted) {
  return Payoff{expected_utility(u, o), voted};
}

std::optional<std::pair<Outcome, Outcome>> find_indifference(const UtilityVector& u) {
  return rank_outcomes(u).tie;
}

ValidationReport validate_profile(const Profile& p, int max_candidates) {
  if (p.m <= 0) throw InputError("election has no candidates");
  if (p.m > kMaxCandidates) {
    throw InputError("election has " + std::to_string(p.m) + " candidates; at most " +
                     std::to_string(kMaxCandidates) + " are supported");
  }
  if (p.n() == 0) throw InputError("election has no voters");
  for (int i = 0; i < p.n(); ++i) {
    if (static_cast<int>(p.voters[i].size()) != p.m) {
      throw InputError("voter " + p.voter_name(i) + " has " +
                       std::to_string(p.voters[i].size()) + " utilities, expected " +
                       std::to_string(p.m));
    }
    for (const auto& x : p.voters[i]) {
      if (x < 0) throw InputError("voter " + p.voter_name(i) + " has a negative utility");
    }
  }

  ValidationReport report;
  if (p.m > max_candidates) {
    report.skipped_distinctness = true;
    return report;
  }
  for (int i = 0; i < p.n(); ++i) {
    if (auto tie = find_indifference(p.voters[i])) {
      report.ok = false;
      report.violation = Indifference{i, tie->first, tie->second};
      return report;
    }
  }
  return report;
}

std::string format_outcome(const Profile& p, Outcome o) {
  std::string s = "{";
  bool first = true;
  for (int c : o.members()) {
    if (!first) s += ",";
    s += p.candidate_name(c);
    first = false;
  }
  return s + "}";
}

std::string format_ballot(const Profile& p, Ballot b) {
  return b.is_abstain() ? std::string("ABSTAIN") : p.candidate_name(b.candidate());
}

}  // namespace plurality
