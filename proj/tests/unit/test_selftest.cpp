#include <gtest/gtest.h>

#include "equichain/errors.hpp"
#include "equichain/examples.hpp"
#include "equichain/selftest.hpp"
#include "fixtures.hpp"

using namespace equichain;
using namespace equichain::testing;

TEST(Selftest, PassesAndIsDeterministic) {
  SelftestReport a = run_selftest(7, 3);
  SelftestReport b = run_selftest(7, 3);
  EXPECT_TRUE(a.ok()) << a.text();
  EXPECT_EQ(a.text(), b.text());
  EXPECT_NE(a.text().find("summary: "), std::string::npos);
  EXPECT_THROW(run_selftest(7, 0), InvalidInput);
}

TEST(Selftest, ChecksReportFailures) {
  auto ex = gen_bar_resolution(cyclic(2));
  Reduction broken = ex.equivalence.right;
  broken.eta = LinearMap::zero(1);
  SampleOptions o;
  o.max_degree = 2;
  CheckResult r = check_reduction("broken", broken, o);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.line().find("broken: FAIL"), std::string::npos);

  CheckResult g = check_groups("groups", {free_group(1)}, {cyclic_group(2)});
  EXPECT_FALSE(g.ok);
  EXPECT_NE(g.witness.find("Z != Z/2"), std::string::npos);
  EXPECT_FALSE(check_groups("size", {}, {free_group(1)}).ok);
}

TEST(Selftest, SquareZeroChecksCountWhatTheyCheck) {
  CheckResult r = check_rinfty_square_zero("z2", zg(2), 3);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.checks, 2 + 4 + 8 + 16);
  auto R = zg(3);
  auto bar = bar_complex(R, periodic(R, 4));
  CheckResult b = check_bar_square_zero("bar", *bar, 200, 3, 6, 1);
  EXPECT_TRUE(b.ok) << b.witness;
  EXPECT_EQ(b.checks, 200);
}
