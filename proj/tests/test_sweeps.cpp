#include <gtest/gtest.h>

#include <tia/sweeps.hpp>

using namespace tia;

TEST(Describe, ReadableForms) {
  EXPECT_EQ(describe(Gen1D::point(0, {1, 0})), "pt_0^{1,0}");
  EXPECT_EQ(describe(Gen1D::interval(0, 2, {0, 1})), "iv_{0,2}^{0,1}");
  EXPECT_EQ(describe(Gen1D::infinitesimal(1)), "inf_1^{0,0}");
}

TEST(Sweep1D, SmallWindowIsClean) {
  SweepOptions opt;
  opt.decBound = 1;
  opt.window = 3;
  const auto rep = sweep_dga_1d(opt);
  EXPECT_TRUE(rep.ok()) << (rep.notes.empty() ? "" : rep.notes.front());
  EXPECT_GT(rep.checks, 0);
  EXPECT_GT(rep.laws.at("graded_commutativity"), 0);
  EXPECT_GT(rep.laws.at("associativity"), 0);
  EXPECT_GT(rep.laws.at("leibniz"), 0);
  EXPECT_GT(rep.laws.at("boundary_squared"), 0);
}

TEST(Sweep1D, PeriodicLatticeIsClean) {
  SweepOptions opt;
  opt.decBound = 1;
  opt.window = 3;  // ignored when period is set
  opt.period = 4;
  const auto rep = sweep_dga_1d(opt);
  EXPECT_TRUE(rep.ok()) << (rep.notes.empty() ? "" : rep.notes.front());
}

TEST(Sweep1D, InjectedDefectIsCaught) {
  SweepOptions opt;
  opt.decBound = 1;
  opt.window = 3;
  opt.injectDefect = true;
  const auto rep = sweep_dga_1d(opt);
  EXPECT_FALSE(rep.ok());
  ASSERT_FALSE(rep.notes.empty());
}

TEST(Sweep3D, SmallWindowIsClean) {
  SweepOptions opt;
  opt.decBound = 0;
  opt.window = 3;
  const auto rep = sweep_dga_3d(opt);
  EXPECT_TRUE(rep.ok()) << (rep.notes.empty() ? "" : rep.notes.front());
  EXPECT_GT(rep.laws.at("sign_associativity_cocycle"), 0);
  EXPECT_GT(rep.laws.at("product_sign_conformance"), 0);
  EXPECT_GT(rep.laws.at("graded_commutativity_canonical"), 0);
  EXPECT_GT(rep.laws.at("leibniz_random"), 0);
}

TEST(Sweep3D, InjectedDefectIsCaught) {
  SweepOptions opt;
  opt.decBound = 0;
  opt.window = 3;
  opt.injectDefect = true;
  const auto rep = sweep_dga_3d(opt);
  EXPECT_FALSE(rep.ok());
}

TEST(OracleSweep, TinyWindowAgrees) {
  const auto agree = sweep_oracle(0, 3);
  EXPECT_TRUE(agree.report.ok());
  EXPECT_EQ(agree.products, 81);
  EXPECT_EQ(agree.boundaries, 9);
}

TEST(OracleSweep, SwappedBinomialFixtureDisagrees) {
  const auto agree = sweep_oracle(1, 3, /*useSwappedBinomial=*/true);
  EXPECT_FALSE(agree.report.ok());
  ASSERT_FALSE(agree.report.notes.empty());
  // The note carries both values for the first disagreeing pair.
  EXPECT_NE(agree.report.notes.front().find("closed form"), std::string::npos);
  EXPECT_NE(agree.report.notes.front().find("integration"), std::string::npos);
}

TEST(IdealSweep, ClosedUnderProductsAndEscapesBoundary) {
  const auto rep = sweep_ideal(3, 4, 1);
  EXPECT_TRUE(rep.ok()) << (rep.notes.empty() ? "" : rep.notes.front());
  EXPECT_GT(rep.laws.at("ideal_closed_under_product"), 0);
  EXPECT_EQ(rep.laws.at("boundary_escapes_ideal"), 2);
}

TEST(UClosure, ReachesTheExpectedFamily) {
  const auto rep = u_closure_check();
  EXPECT_TRUE(rep.ok()) << (rep.notes.empty() ? "" : rep.notes.front());
  EXPECT_EQ(rep.laws.at("closure_size"), 260);
  EXPECT_LE(rep.laws.at("closure_rounds"), 6);
}
