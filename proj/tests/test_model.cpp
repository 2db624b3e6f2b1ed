#include <random>

#include "doctest.h"
#include "plurality/model.hpp"
#include "plurality/preference_table.hpp"
#include "support.hpp"

using namespace plurality;
using testing::Rational;

TEST_CASE("tally counts votes and casts") {
  const BallotVector b{Ballot::vote(0), Ballot::abstain(), Ballot::vote(0), Ballot::vote(1)};
  const Tally t = tally(b, 3);
  CHECK(t.counts == std::vector<int>{2, 1, 0});
  CHECK(t.cast == 3);

  const Tally none = tally(BallotVector(4, Ballot::abstain()), 2);
  CHECK(none.counts == std::vector<int>{0, 0});
  CHECK(none.cast == 0);

  const Tally bbcc = tally(testing::ballots("BBCC"), 3);
  CHECK(bbcc.counts == std::vector<int>{0, 2, 2});
}

TEST_CASE("tally rejects ballots for unknown candidates") {
  const BallotVector b{Ballot::vote(3)};
  CHECK_THROWS_AS(tally(b, 3), InputError);
}

TEST_CASE("outcome is the argmax set, empty when nobody votes") {
  CHECK(outcome(Tally{{2, 2, 0}, 4}) == Outcome{0, 1});
  CHECK(outcome(Tally{{0, 0, 0}, 0}).empty());
  CHECK(outcome(Tally{{0, 2, 2}, 4}) == Outcome{1, 2});
}

TEST_CASE("outcome is nonempty exactly when a ballot is cast") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 6);
    BallotVector b;
    bool any = false;
    for (int i = 0; i < n; ++i) {
      b.push_back(Ballot::from_code(static_cast<int>(rng() % (m + 1))));
      any = any || b.back().is_vote();
    }
    const Outcome o = outcome(tally(b, m));
    CHECK(o.empty() == !any);
    CHECK(testing::to_set(o) == testing::ref_winners(testing::ref_counts(b, m)));
  }
}

TEST_CASE("outcome ordering is by size then members") {
  CHECK(Outcome{2} < Outcome{0, 1});
  CHECK(Outcome{0, 1} < Outcome{0, 2});
  CHECK(Outcome{0, 2} < Outcome{1, 2});
  CHECK(Outcome{} < Outcome{0});
}

TEST_CASE("expected utility") {
  const UtilityVector u{5, 2, 1};
  CHECK(expected_utility(u, Outcome{1, 2}) == ExpectedUtility(3, 2));
  CHECK(expected_utility(u, Outcome{0}) == ExpectedUtility(5, 1));
  CHECK(expected_utility(u, Outcome{}) == ExpectedUtility::negative_infinity());
  CHECK(expected_utility(u, Outcome{}) < expected_utility(u, Outcome{2}));
  CHECK(expected_utility(u, Outcome{1, 2}).to_string() == "3/2");
}

TEST_CASE("singleton expected utility equals the raw utility") {
  const UtilityVector u{7, 0, 123456789};
  for (int c = 0; c < 3; ++c) CHECK(expected_utility(u, Outcome{c}) == ExpectedUtility(u[c], 1));
}

TEST_CASE("payoff: abstaining beats voting at equal outcome") {
  const UtilityVector u{5, 2, 1};
  CHECK(payoff(u, Outcome{0}, false) > payoff(u, Outcome{0}, true));
  // 3/2 minus the voting cost is still above 1.
  CHECK(payoff(u, Outcome{1, 2}, true) > payoff(u, Outcome{2}, false));
  CHECK(payoff(u, Outcome{}, false) < payoff(u, Outcome{2}, true));
  CHECK(payoff(u, Outcome{}, true) < payoff(u, Outcome{2}, true));
  CHECK(payoff(u, Outcome{}, false) > payoff(u, Outcome{}, true));
}

TEST_CASE("payoff order agrees with exact rationals and is a total order") {
  std::mt19937_64 rng(5);
  const int m = 4;
  for (int trial = 0; trial < 50; ++trial) {
    UtilityVector u;
    for (int c = 0; c < m; ++c) u.push_back(BigInt(rng() % 1000));
    struct Item {
      Payoff payoff;
      std::set<int> winners;
      bool voted;
    };
    std::vector<Item> items;
    for (std::uint64_t mask = 0; mask < (1U << m); ++mask) {
      for (bool voted : {false, true}) {
        const Outcome o = Outcome::from_mask(mask);
        items.push_back({payoff(u, o, voted), testing::to_set(o), voted});
      }
    }
    std::shuffle(items.begin(), items.end(), rng);
    for (const auto& a : items) {
      for (const auto& b : items) {
        const bool ref_less = testing::ref_prefers(u, b.winners, b.voted, a.winners, a.voted);
        CHECK((a.payoff < b.payoff) == ref_less);
      }
    }
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.payoff < b.payoff; });
    for (std::size_t i = 1; i < items.size(); ++i) CHECK(items[i - 1].payoff <= items[i].payoff);
  }
}

TEST_CASE("cross-multiplication matches reduced fractions on large values") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    BigInt a = BigInt(rng()) * BigInt(rng());
    BigInt b = BigInt(rng()) * BigInt(rng());
    const std::int64_t da = 1 + static_cast<std::int64_t>(rng() % 20);
    const std::int64_t db = 1 + static_cast<std::int64_t>(rng() % 20);
    if (trial % 3 == 0) b = a * db / da;
    const ExpectedUtility x(a, da), y(b, db);
    const Rational rx(a, da), ry(b, db);
    CHECK((x < y) == (rx < ry));
    CHECK((x == y) == (rx == ry));
  }
}

TEST_CASE("validate_profile") {
  const Profile ex1 = example_one_profile();
  CHECK(validate_profile(ex1).ok);

  const Profile flat = make_profile(2, {{1, 1}});
  const ValidationReport bad = validate_profile(flat);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violation);
  CHECK(bad.violation->voter == 0);
  CHECK(std::set{bad.violation->first, bad.violation->second} == std::set{Outcome{0}, Outcome{1}});

  CHECK(validate_profile(make_profile(3, {{4, 3, 1}})).ok);
  // {0,2} averages 2 = u(B) for (3,2,1).
  CHECK_FALSE(validate_profile(make_profile(3, {{3, 2, 1}})).ok);
}

TEST_CASE("validate_profile agrees with pairwise enumeration of outcome values") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    UtilityVector u;
    for (int c = 0; c < m; ++c) u.push_back(BigInt(rng() % 7));
    std::set<Rational> seen;
    bool distinct = true;
    for (std::uint64_t mask = 1; mask < (1U << m); ++mask) {
      distinct = seen.insert(*testing::ref_value(u, testing::to_set(Outcome::from_mask(mask)))).second && distinct;
    }
    Profile p;
    p.m = m;
    p.voters = {u};
    CHECK(validate_profile(p).ok == distinct);
  }
}

TEST_CASE("validate_profile structural errors") {
  Profile ragged = make_profile(3, {{1, 2, 3}});
  ragged.voters.push_back({1, 2});
  CHECK_THROWS_AS(validate_profile(ragged), InputError);
  Profile empty;
  empty.m = 2;
  CHECK_THROWS_AS(validate_profile(empty), InputError);
  Profile negative = make_profile(2, {{-1, 2}});
  CHECK_THROWS_AS(validate_profile(negative), InputError);
}

TEST_CASE("validate_profile skips distinctness above the bound") {
  Profile big;
  big.m = 22;
  big.voters.push_back(UtilityVector(22, BigInt(1)));
  const ValidationReport r = validate_profile(big);
  CHECK(r.ok);
  CHECK(r.skipped_distinctness);
}

TEST_CASE("formatting") {
  const Profile p = example_one_profile();
  CHECK(format_outcome(p, Outcome{1, 2}) == "{B,C}");
  CHECK(format_ballot(p, Ballot::abstain()) == "ABSTAIN");
  CHECK(format_ballot(p, Ballot::vote(2)) == "C");
  Profile wide;
  wide.m = 30;
  CHECK(wide.candidate_name(0) == "c1");
  CHECK(wide.voter_name(4) == "v5");
}

TEST_CASE("preference table ranks agree with exact payoffs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Profile p = random_profile(3, 2 + static_cast<int>(trial % 4), rng());
    const PreferenceTable table(p);
    const std::uint64_t outcomes = std::uint64_t{1} << p.m;
    for (int i = 0; i < p.n(); ++i) {
      for (std::uint64_t a = 0; a < outcomes; ++a) {
        for (std::uint64_t b = 0; b < outcomes; ++b) {
          for (bool va : {false, true}) {
            for (bool vb : {false, true}) {
              const bool exact = payoff(p.voters[i], Outcome::from_mask(a), va) <
                                 payoff(p.voters[i], Outcome::from_mask(b), vb);
              CHECK((table.key(i, a, va) < table.key(i, b, vb)) == exact);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("preference table rejects indifferent voters and huge candidate sets") {
  CHECK_THROWS_AS(PreferenceTable(make_profile(2, {{1, 1}})), InputError);
  Profile big;
  big.m = 21;
  big.voters.push_back(rank_to_utilities([] {
    Ranking r(21);
    std::iota(r.begin(), r.end(), 0);
    return r;
  }()));
  CHECK_THROWS_AS(PreferenceTable{big}, BoundExceeded);
}

TEST_CASE("rank_outcomes handles utilities beyond 64 bits") {
  const BigInt huge = BigInt(1) << 100;
  const RankedOutcomes r = rank_outcomes({huge, huge + 1, 0});
  CHECK_FALSE(r.tie.has_value());
  CHECK(r.ascending.size() == 7);
  CHECK(r.ascending.front() == Outcome{2}.mask());
  CHECK(r.ascending.back() == Outcome{1}.mask());
}
