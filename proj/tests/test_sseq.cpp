#include <gtest/gtest.h>

#include "bridgecancel/error.hpp"
#include "bridgecancel/sseq.hpp"
#include "support.hpp"

using namespace bridgecancel;

namespace {

Rational q(const char* text) { return Rational::parse(text); }
ContinuedFraction cf(const char* text) { return ContinuedFraction::parse(text); }

std::vector<Term> v(const SSequence& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(SSequence, RejectsNonPositiveTerms) {
  EXPECT_THROW(SSequence(std::vector<Term>{2, 0}), DomainError);
  EXPECT_TRUE(SSequence{}.empty());
  EXPECT_EQ((SSequence{4, 3, 4}).to_string(), "(4,3,4)");
  EXPECT_TRUE((SSequence{4, 3, 4}).is_symmetric());
  EXPECT_FALSE((SSequence{4, 3}).is_symmetric());
}

TEST(SlopeSseq, KnownValues) {
  EXPECT_EQ(slope_sseq(q("1/1")), (SSequence{1, 1}));
  EXPECT_EQ(slope_sseq(q("1/3")), (SSequence{3, 3}));
  EXPECT_EQ(slope_sseq(q("2/5")), (SSequence{3, 2, 3, 2}));
  EXPECT_EQ(cyclic_slope_sseq(q("5/17")).canonical(), (SSequence{3, 3, 4, 3, 4, 3, 3, 4, 3, 4}));
}

TEST(SlopeSseq, MatchesRunsOfOracleWord) {
  for (std::int64_t p = 1; p <= 70; ++p) {
    for (std::int64_t qn = 1; qn <= p; ++qn) {
      if (std::gcd(qn, p) != 1) continue;
      const Rational r{Integer(qn), Integer(p)};
      const auto runs = testsupport::sign_runs(testsupport::relator_string(qn, p), false);
      EXPECT_EQ(v(slope_sseq(r)), runs) << qn << "/" << p;
      EXPECT_EQ(v(s_sequence(relator(r))), runs);
    }
  }
}

TEST(SSequence, CyclicMergesWrapRun) {
  const CyclicSSequence cs = cyclic_s_sequence(CyclicWord(Word::parse("aabABB")));
  EXPECT_EQ(cs.representative(), (SSequence{3, 3}));
  EXPECT_EQ(cyclic_s_sequence(CyclicWord(relator(q("2/5")))), cyclic_slope_sseq(q("2/5")));
}

TEST(SlopeSseq, HalfRotationOnRandomLargeSlopes) {
  for (int i = 0; i < 200; ++i) {
    const auto s = testsupport::random_slope(5000);
    const SSequence seq = slope_sseq(s.value());
    ASSERT_EQ(seq.size(), static_cast<std::size_t>(2 * s.q));
    EXPECT_EQ(seq.sum(), 2 * s.p);
    for (std::size_t j = 0; j < static_cast<std::size_t>(s.q); ++j) EXPECT_EQ(seq[j], seq[j + s.q]);
  }
}

TEST(Recurrences, UpAddsOne) {
  const CyclicSSequence up = recurrence_up(cyclic_slope_sseq(q("1/2")));
  EXPECT_EQ(up.representative(), (SSequence{3, 3}));
  EXPECT_EQ(recurrence_up(cyclic_slope_sseq(predecessor(cf("[3,2,2]")).value())), cyclic_slope_sseq(q("5/17")));
}

TEST(Recurrences, FlipUnpacking) {
  // [1,2] = 2/3 from [3] = 1/3: each 3 becomes (2, 1).
  const auto [forward, backward] = recurrence_flip(cyclic_slope_sseq(q("1/3")));
  EXPECT_EQ(forward.representative(), (SSequence{2, 1, 2, 1}));
  EXPECT_TRUE(forward == cyclic_slope_sseq(q("2/3")) || backward == cyclic_slope_sseq(q("2/3")));
  EXPECT_THROW(recurrence_flip(CyclicSSequence(SSequence{1, 2})), DomainError);
}

TEST(Recurrences, EverySlopeFollowsItsPredecessor) {
  for (const auto& s : testsupport::all_slopes(90)) {
    const ContinuedFraction x = cf_expand(s.value());
    const CyclicSSequence pred = cyclic_slope_sseq(predecessor(x).value());
    const CyclicSSequence actual = cyclic_slope_sseq(s.value());
    if (x.front() >= 2) {
      EXPECT_EQ(recurrence_up(pred).representative(), actual.representative()) << x;
    } else {
      const auto [f, b] = recurrence_flip(pred);
      EXPECT_TRUE(f == actual || b == actual) << x;
    }
  }
}

TEST(Decompose, PinnedInstances) {
  const Decomposition d = decompose(cf("[3,2,2]"));
  EXPECT_EQ(d.s1, (SSequence{4, 3, 4}));
  EXPECT_EQ(d.s2, (SSequence{3, 3}));
  const Decomposition base = decompose(cf("[3]"));
  EXPECT_TRUE(base.s1.empty());
  EXPECT_EQ(base.s2, (SSequence{3}));
  const Decomposition two = decompose(cf("[1,4]"));
  EXPECT_EQ(two.s1, (SSequence{2}));
  EXPECT_EQ(two.s2, (SSequence{1, 1, 1}));
}

// Independent route: search every rotation and split of CS(r) for symmetric
// blocks with the right boundary terms; decompose must return one of them.
TEST(Decompose, IsAmongBruteForceSplits) {
  for (const auto& s : testsupport::all_slopes(40)) {
    const ContinuedFraction x = cf_expand(s.value());
    const Decomposition d = decompose(x);
    const std::vector<Term> cs = v(slope_sseq(s.value()));
    const std::size_t half = cs.size() / 2;
    const Term m1 = x.front().get_si();
    bool found = false;
    for (std::size_t rot = 0; rot < cs.size() && !found; ++rot) {
      const auto r = testsupport::rotation(cs, rot);
      if (!std::equal(r.begin(), r.begin() + half, r.begin() + half)) continue;
      for (std::size_t cut = 0; cut < half && !found; ++cut) {
        const std::vector<Term> s1(r.begin(), r.begin() + cut), s2(r.begin() + cut, r.begin() + half);
        const bool sym1 = std::equal(s1.begin(), s1.end(), s1.rbegin());
        const bool sym2 = std::equal(s2.begin(), s2.end(), s2.rbegin());
        const bool edges = (s1.empty() || (s1.front() == m1 + 1)) && s2.front() == m1;
        if (sym1 && sym2 && edges && s1 == v(d.s1) && s2 == v(d.s2)) found = true;
      }
    }
    EXPECT_TRUE(found) << x << " S1 = " << d.s1 << " S2 = " << d.s2;
    EXPECT_EQ(d.s1.sum() + d.s2.sum(), s.p);
    EXPECT_EQ(static_cast<std::int64_t>(d.s1.size() + d.s2.size()), s.q);
  }
}

TEST(Occurrences, CountsAndEmptyPattern) {
  const CyclicSSequence cs = cyclic_slope_sseq(q("5/17"));
  EXPECT_EQ(count_cyclic_occurrences(cs, SSequence{4, 3, 4}), 2u);
  EXPECT_EQ(count_cyclic_occurrences(cs, SSequence{3}), 6u);
  EXPECT_EQ(count_cyclic_occurrences(cs, SSequence{5}), 0u);
  EXPECT_EQ(count_cyclic_occurrences(CyclicSSequence(SSequence{3, 3}), SSequence{3, 3, 3}), 0u);
  EXPECT_THROW(count_cyclic_occurrences(cs, SSequence{}), DomainError);
}

TEST(Connection, KnownCases) {
  // r = [3,2,2]: s = [3,2,3] satisfies the conditions, [3,3] is too short.
  EXPECT_TRUE(connection_conditions(cf("[3,2,2]"), cf("[3,2,3]")));
  EXPECT_TRUE(connection_conditions(cf("[3,2,2]"), cf("[3,2,2]")));
  EXPECT_FALSE(connection_conditions(cf("[3,2,2]"), cf("[3,3]")));
  EXPECT_TRUE(connection_conditions(cf("[3,2,2]"), cf("[3,2,1,5]")));
  EXPECT_FALSE(connection_conditions(cf("[3,2,2]"), cf("[3,2,1]")));
  EXPECT_TRUE(in_open_interval(cf("[3,2,2]"), q("5/17")));
  EXPECT_FALSE(in_open_interval(cf("[3,2,2]"), q("3/10")));
}

TEST(Connection, TriangleOnRandomSlopes) {
  for (int i = 0; i < 400; ++i) {
    const auto rs = testsupport::random_slope(30);
    const auto ss = testsupport::random_slope(60);
    const ContinuedFraction r = cf_expand(rs.value());
    const Rational s = ss.value();
    const bool a = connection_conditions(r, cf_expand(s));
    EXPECT_EQ(a, in_open_interval(r, s)) << r << " " << s;
    EXPECT_EQ(a, contains_pattern(r, cyclic_slope_sseq(s))) << r << " " << s;
  }
}
