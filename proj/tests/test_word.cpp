#include <gtest/gtest.h>

#include "bridgecancel/cyclic.hpp"
#include "bridgecancel/error.hpp"
#include "bridgecancel/word.hpp"
#include "support.hpp"

using namespace bridgecancel;

namespace {

Word w(const char* text) { return Word::parse(text); }
Rational q(const char* text) { return Rational::parse(text); }

}  // namespace

TEST(Word, ParsesAndReduces) {
  EXPECT_EQ(w("abBA").to_string(), "");
  EXPECT_EQ(w("aAb").to_string(), "b");
  EXPECT_EQ(w("abBBbA").to_string(), "");
  EXPECT_EQ(w("abAB").size(), 4u);
  EXPECT_THROW(w("abc"), ParseError);
  EXPECT_EQ(w("aB").tokens(), (std::vector<int>{1, -2}));
}

TEST(Word, InverseAndProduct) {
  const Word x = w("abAAb");
  EXPECT_EQ(x.inverse().to_string(), "BaaBA");
  EXPECT_TRUE((x * x.inverse()).empty());
  EXPECT_EQ((w("ab") * w("Ba")).to_string(), "aa");
}

TEST(Word, LetterOrder) {
  EXPECT_LT(kA, kAInv);
  EXPECT_LT(kAInv, kB);
  EXPECT_LT(kB, kBInv);
  EXPECT_LT(w("A"), w("b"));
  EXPECT_LT(w("ab"), w("aB"));
}

TEST(Word, CyclicReduction) {
  EXPECT_EQ(cyclic_reduce(w("Baab")).representative().to_string(), "aa");
  EXPECT_TRUE(w("abAB").is_cyclically_reduced());
  EXPECT_FALSE(w("abA").is_cyclically_reduced());
  EXPECT_THROW(CyclicWord(w("abA")), DomainError);
  EXPECT_TRUE(cyclically_equal(CyclicWord(w("abAB")), CyclicWord(w("ABab"))));
  EXPECT_FALSE(CyclicWord(w("abAB")) == CyclicWord(w("abab")));
}

TEST(Word, Alternation) {
  EXPECT_TRUE(is_cyclically_alternating(CyclicWord(w("abAB"))));
  EXPECT_FALSE(is_cyclically_alternating(CyclicWord(w("aab"))));
  EXPECT_FALSE(is_cyclically_alternating(CyclicWord(w("aba"))));
}

TEST(Relator, KnownWords) {
  EXPECT_EQ(relator(q("1/1")).to_string(), "aB");
  EXPECT_EQ(relator(q("1/2")).to_string(), "abAB");
  EXPECT_EQ(relator(q("1/3")).to_string(), "abaBAB");
  // The sign formula gives abaBAbabAB for 2/5, with sign runs (3,2,3,2).
  EXPECT_EQ(relator(q("2/5")).to_string(), "abaBAbabAB");
  EXPECT_EQ(relator(parse_slope("[2,2]")), relator(q("2/5")));
  EXPECT_THROW(relator(q("0")), DomainError);
  EXPECT_THROW(relator(q("4/3")), DomainError);
  EXPECT_THROW(relator(Rational::infinity()), DomainError);
}

TEST(Relator, MatchesStringOracle) {
  for (std::int64_t p = 1; p <= 60; ++p) {
    for (std::int64_t qn = 1; qn <= p; ++qn) {
      if (std::gcd(qn, p) != 1) continue;
      const Word u = relator(Rational(Integer(qn), Integer(p)));
      ASSERT_EQ(u.to_string(), testsupport::relator_string(qn, p)) << qn << "/" << p;
      EXPECT_EQ(u.size(), static_cast<std::size_t>(2 * p));
      EXPECT_TRUE(is_cyclically_alternating(CyclicWord(u)));
      EXPECT_EQ(u.front(), kA);
    }
  }
}

TEST(FlipB, InvolutionAndComplement) {
  const Word u = relator(q("2/5"));
  EXPECT_EQ(flip_b(flip_b(u)), u);
  const CyclicWord flipped(flip_b(u));
  const Word target = relator(q("3/5"));
  EXPECT_TRUE(flipped == CyclicWord(target) || flipped == CyclicWord(target.inverse()));
}

TEST(FlipB, PredecessorCorrespondence) {
  for (const auto& s : testsupport::all_slopes(60)) {
    const ContinuedFraction x = cf_expand(s.value());
    if (x.front() != 1) continue;
    const CyclicWord flipped(flip_b(relator(predecessor(x).value())));
    const Word u = relator(s.value());
    EXPECT_TRUE(flipped == CyclicWord(u) || flipped == CyclicWord(u.inverse())) << x;
  }
}

TEST(LeastRotation, MatchesBruteForce) {
  for (int i = 0; i < 1000; ++i) {
    std::vector<int> xs(static_cast<std::size_t>(testsupport::uniform(1, 12)));
    for (auto& x : xs) x = static_cast<int>(testsupport::uniform(0, 2));
    const auto start = cyclic::least_rotation(std::span<const int>(xs));
    EXPECT_EQ(testsupport::rotation(xs, start), testsupport::least_rotation_by_brute_force(xs));
  }
}

TEST(CyclicWord, CanonicalIsLeastRotation) {
  for (int i = 0; i < 300; ++i) {
    const std::string text = testsupport::random_cyclic_word(12);
    const CyclicWord c(w(text.c_str()));
    std::string best = text;
    for (std::size_t k = 1; k < text.size(); ++k) {
      if (w(testsupport::rotation(text, k).c_str()) < w(best.c_str())) best = testsupport::rotation(text, k);
    }
    EXPECT_EQ(c.canonical().to_string(), best);
  }
}

TEST(CyclicMatch, CountsWrappingOccurrences) {
  const std::vector<int> text{3, 2, 3, 2};
  EXPECT_EQ(cyclic::cyclic_match_positions(std::span<const int>(text), std::span<const int>(std::vector<int>{2, 3}))
                .size(),
            2u);
  const std::vector<int> longer{3, 2, 3, 2, 3};
  EXPECT_TRUE(cyclic::cyclic_match_positions(std::span<const int>(text), std::span<const int>(longer)).empty());
  for (int i = 0; i < 500; ++i) {
    std::vector<int> t(static_cast<std::size_t>(testsupport::uniform(1, 10)));
    std::vector<int> pat(static_cast<std::size_t>(testsupport::uniform(1, 4)));
    for (auto& x : t) x = static_cast<int>(testsupport::uniform(0, 1));
    for (auto& x : pat) x = static_cast<int>(testsupport::uniform(0, 1));
    EXPECT_EQ(cyclic::cyclic_match_positions(std::span<const int>(t), std::span<const int>(pat)).size(),
              testsupport::cyclic_occurrences(t, pat));
  }
}
