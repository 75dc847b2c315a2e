#include <gtest/gtest.h>

#include "mtw/motive.hpp"
#include "mtw/stability.hpp"

using mtw::FgAbelianGroup;
using mtw::SlopeFunction;
using mtw::SplitTateMotive;

namespace {

SplitTateMotive Z(int twist, int degree) {
  return SplitTateMotive::summand(FgAbelianGroup::free_of_rank(1), twist, degree);
}

SplitTateMotive Zmod(std::int64_t n, int twist, int degree) {
  return SplitTateMotive::summand(FgAbelianGroup::cyclic(n), twist, degree);
}

TEST(Slope, DefaultRule) {
  const auto l = SlopeFunction::default_slope();
  const int expected[] = {0, 1, 2, 3, 4, 4, 5, 5, 6};
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(l(d), expected[d]) << "d=" << d;
  EXPECT_THROW(l(-1), std::invalid_argument);
}

TEST(Slope, TableValidation) {
  const auto t = SlopeFunction::from_table({0, 1, 1, 2});
  EXPECT_EQ(t(0), 0);
  EXPECT_EQ(t(3), 2);
  EXPECT_THROW(t(4), std::invalid_argument);
  EXPECT_THROW(SlopeFunction::from_table({}), std::invalid_argument);
  EXPECT_THROW(SlopeFunction::from_table({2, 1}), std::invalid_argument);
  EXPECT_THROW(SlopeFunction::from_table({-1, 0}), std::invalid_argument);
}

TEST(Stability, ConstantSequenceIsStable) {
  const SplitTateMotive m = direct_sum(Z(0, 0), Z(1, 1));
  const std::vector<SplitTateMotive> seq(6, m);
  for (bool v : mtw::stability_verdicts(seq, SlopeFunction::default_slope())) EXPECT_TRUE(v);
}

TEST(Stability, JunkExactlyAtTheCutoffIsInvisible) {
  const auto l = SlopeFunction::default_slope();
  std::vector<SplitTateMotive> seq;
  for (int d = 0; d <= 6; ++d) seq.push_back(direct_sum(Z(0, 0), Zmod(2, 2, l(d))));
  for (bool v : mtw::stability_verdicts(seq, l)) EXPECT_TRUE(v);
}

TEST(Stability, ParityBreakFailsFromTwo) {
  std::vector<SplitTateMotive> seq;
  for (int d = 0; d <= 6; ++d)
    seq.push_back(d % 2 == 0 ? direct_sum(Z(0, 0), Z(1, 1)) : Z(0, 0));
  const auto verdicts = mtw::stability_verdicts(seq, SlopeFunction::default_slope());
  ASSERT_EQ(verdicts.size(), 6u);
  EXPECT_TRUE(verdicts[0]);  // cutoff 0 sees nothing
  EXPECT_TRUE(verdicts[1]);  // cutoff 1 still below the junk degree
  for (std::size_t d = 2; d < verdicts.size(); ++d) EXPECT_FALSE(verdicts[d]) << "d=" << d;
}

TEST(Stability, NeedsAtLeastTwoObjects) {
  EXPECT_THROW(mtw::stability_verdicts({Z(0, 0)}, SlopeFunction::default_slope()),
               std::invalid_argument);
}

TEST(Transfer, PointwiseMinimumReproducesDefaultSlope) {
  // l(d) = d and m(d) = floor(d/2) + 2 combine to the default rule.
  std::vector<int> l_vals, m_vals;
  for (int d = 0; d <= 8; ++d) {
    l_vals.push_back(d);
    m_vals.push_back(d / 2 + 2);
  }
  const auto combined =
      mtw::transfer_slope(std::vector<bool>(9, true), SlopeFunction::from_table(l_vals),
                          SlopeFunction::from_table(m_vals));
  const auto def = SlopeFunction::default_slope();
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(combined(d), def(d)) << "d=" << d;
}

TEST(Transfer, IdempotentOnEqualSlopes) {
  const auto l = SlopeFunction::from_table({0, 1, 2, 2, 3});
  const auto out = mtw::transfer_slope(std::vector<bool>(5, true), l, l);
  for (int d = 0; d < 5; ++d) EXPECT_EQ(out(d), l(d));
}

TEST(Transfer, FalseVerdictIsAnErrorNamingTheIndex) {
  std::vector<bool> verdicts(5, true);
  verdicts[3] = false;
  try {
    mtw::transfer_slope(verdicts, SlopeFunction::default_slope(),
                        SlopeFunction::default_slope());
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

}  // namespace
