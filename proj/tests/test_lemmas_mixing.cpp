#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "ttr/lemmas.hpp"
#include "ttr/mixing.hpp"

namespace {

using ttr::DeckSpec;
using ttr::make_rational;
using ttr::Rational;

// Wrong at a single argument pair.
struct CorruptedBinomial {
  long a, b, delta;
  ttr::BigInt operator()(long x, long y) const {
    ttr::BigInt v = ttr::binomial(x, y);
    if (x == a && y == b) v += delta;
    return v;
  }
};

TEST(BinomialLemma1, HoldsInHypothesisRange) {
  for (long n : {10L, 12L}) {
    const auto rep = ttr::check_binomial_lemma_1(n);
    EXPECT_TRUE(rep.holds()) << n;
    EXPECT_TRUE(rep.in_hypothesis);
  }
}

TEST(BinomialLemma1, RejectsOutOfHypothesis) {
  EXPECT_THROW(ttr::check_binomial_lemma_1(8), std::invalid_argument);
  EXPECT_THROW(ttr::check_binomial_lemma_1(11), std::invalid_argument);
}

TEST(BinomialLemma1, EightCardsIsFlagged) {
  const auto rep = ttr::evaluate_binomial_lemma_1(8);
  EXPECT_FALSE(rep.in_hypothesis);
  EXPECT_TRUE(rep.holds());
}

TEST(BinomialLemma2, HoldsInHypothesisRange) {
  for (long n : {8L, 14L}) EXPECT_TRUE(ttr::check_binomial_lemma_2(n).holds()) << n;
  EXPECT_THROW(ttr::check_binomial_lemma_2(6), std::invalid_argument);
}

TEST(BinomialLemma2, SixCardsIsFlagged) {
  const auto rep = ttr::evaluate_binomial_lemma_2(6);
  EXPECT_FALSE(rep.in_hypothesis);
  EXPECT_TRUE(rep.holds());
}

TEST(BinomialLemmas, CorruptedBinomialIsDetected) {
  // Pushing C(10,6) or C(8,4) far down makes a positivity claim false.
  const auto rep = ttr::check_binomial_lemma_1(10, {}, CorruptedBinomial{10, 6, -1000});
  EXPECT_FALSE(rep.holds());
  const auto rep2 = ttr::check_binomial_lemma_2(8, {}, CorruptedBinomial{8, 4, -1000});
  EXPECT_FALSE(rep2.holds());
  const bool positivity_failed = !rep2.failures.empty() && rep2.failures.front().claim == "lemma2-i";
  EXPECT_TRUE(positivity_failed);
}

TEST(BinomialLemmas, NegatingAnyClaimFails) {
  for (const auto& id : ttr::lemma_claim_ids()) {
    ttr::LemmaOptions opts{id};
    const bool first = id.rfind("lemma1", 0) == 0;
    const auto rep = first ? ttr::check_binomial_lemma_1(12, opts) : ttr::check_binomial_lemma_2(12, opts);
    ASSERT_FALSE(rep.holds()) << id;
    for (const auto& f : rep.failures) ASSERT_EQ(f.claim, id);
  }
}

TEST(ExpEnclosure, ContainsExpAndIsNarrow) {
  const Rational width = ttr::default_enclosure_width();
  for (const char* text : {"0", "1", "2", "3", "1/3", "0.5", "7"}) {
    const Rational c = ttr::parse_rational(text);
    const auto iv = ttr::exp_neg_enclosure(c, width);
    EXPECT_LE(iv.width(), width) << text;
    EXPECT_LE(iv.lo, iv.hi);
    const long double expected = std::exp(-static_cast<long double>(c.get_d()));
    // Slack covers the rounding of the rational endpoints to double.
    EXPECT_LE(static_cast<long double>(iv.lo.get_d()), expected + 1e-16L) << text;
    EXPECT_GE(static_cast<long double>(iv.hi.get_d()), expected - 1e-16L) << text;
  }
}

TEST(ExpEnclosure, NestsAsWidthShrinks) {
  const Rational c = make_rational(5, 2);
  const auto coarse = ttr::exp_neg_enclosure(c, make_rational(1, 1000));
  const auto fine = ttr::exp_neg_enclosure(c, make_rational(1, 1000000000));
  // Both contain e^{-5/2}; the finer interval overlaps the coarse one.
  EXPECT_LE(coarse.lo, fine.hi);
  EXPECT_LE(fine.lo, coarse.hi);
  EXPECT_LT(fine.width(), coarse.width());
}

TEST(ExpEnclosure, RejectsNegative) {
  EXPECT_THROW(ttr::exp_neg_enclosure(Rational(-1), make_rational(1, 10)), std::domain_error);
}

TEST(CompareGap, ThreeWayVerdict) {
  const ttr::RationalInterval iv{make_rational(1, 4), make_rational(1, 3)};
  EXPECT_EQ(ttr::compare_gap(make_rational(1, 5), iv), ttr::BoundVerdict::holds);
  EXPECT_EQ(ttr::compare_gap(make_rational(1, 2), iv), ttr::BoundVerdict::fails);
  EXPECT_EQ(ttr::compare_gap(make_rational(3, 10), iv), ttr::BoundVerdict::indeterminate);
}

// Reference gaps computed independently with Python's fractions.Fraction by
// enumerating the closed form and cross-checking against repeated matrix
// products.
struct GapReference {
  std::size_t n;
  int c;
  unsigned long m;
  double gap;
};

constexpr GapReference kGapReferences[] = {
    {10, 0, 93, 2.428277202668291e-08},  {10, 1, 103, 2.6073894083321447e-09},
    {10, 2, 113, 2.7996762269441735e-10}, {10, 3, 123, 3.006133178096972e-11},
    {12, 0, 120, 1.1338156744943605e-08}, {12, 1, 132, 1.2716718325108671e-09},
    {12, 2, 144, 1.4262715878553613e-10}, {12, 3, 156, 1.5996607186411238e-11},
};

TEST(MixingBound, HoldsAtThresholdsWithReferenceGaps) {
  for (const auto& ref : kGapReferences) {
    const auto r = ttr::check_mixing_bound(DeckSpec(ref.n), Rational(ref.c));
    EXPECT_EQ(r.m, ref.m);
    EXPECT_EQ(r.verdict, ttr::BoundVerdict::holds);
    EXPECT_TRUE(r.report.holds());
    EXPECT_TRUE(r.report.in_hypothesis);
    EXPECT_NEAR(r.gap.get_d() / ref.gap, 1.0, 1e-12) << ref.n << "," << ref.c;
  }
}

TEST(MixingBound, GapDecreasesAlongTestedThresholds) {
  Rational previous = 2;
  for (int c = 0; c <= 3; ++c) {
    const auto r = ttr::check_mixing_bound(DeckSpec(10), Rational(c));
    EXPECT_LT(r.gap, previous);
    previous = r.gap;
  }
}

TEST(MixingBound, FailsBeforeMixing) {
  // Thirteen shuffles leave a gap of about 0.3713, just above e^{-1}.
  const auto r = ttr::check_gap_bound(DeckSpec(10), 13, Rational(1));
  EXPECT_FALSE(r.report.in_hypothesis);
  EXPECT_EQ(r.verdict, ttr::BoundVerdict::fails);
  EXPECT_FALSE(r.report.holds());
  EXPECT_NEAR(r.gap.get_d(), 0.37134923826, 1e-11);
}

}  // namespace
