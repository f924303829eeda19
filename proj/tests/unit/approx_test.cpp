#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "truncvar/approx.hpp"
#include "truncvar/synth.hpp"
#include "truncvar/variation.hpp"

using namespace truncvar;

namespace {

SampledPath p1() { return make_path({0, 1, 2, 3, 4}, {0.0, 1.0, 0.2, 1.2, 0.2}); }
SampledPath p3() { return make_path({0, 1}, {5, 5}); }
SampledPath ramp3() { return make_path({0, 1, 2}, {0, 1, 2}); }

void expect_values_near(std::span<const double> got, const std::vector<double>& want,
                        double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "at " << i;
}

}  // namespace

TEST(LazyApproximation, Golden) {
  const auto r = lazy_approximation(p1(), Level(0.6));
  expect_values_near(r.approximation.values(), {0.3, 0.7, 0.5, 0.9, 0.5}, 1e-12);
  EXPECT_NEAR(r.achieved_tv, 1.4, 1e-12);
  EXPECT_NEAR(r.sup_error, 0.3, 1e-12);
  EXPECT_TRUE(std::ranges::equal(r.approximation.times(), p1().times()));
}

TEST(LazyApproximation, DegenerateLevels) {
  const auto wide = lazy_approximation(p1(), Level(2.0));
  expect_values_near(wide.approximation.values(), {1.0, 1.0, 1.0, 1.0, 1.0}, 0.0);
  EXPECT_EQ(wide.achieved_tv, 0.0);
  const auto flat = lazy_approximation(p3(), Level(0.1));
  expect_values_near(flat.approximation.values(), {5.05, 5.05}, 0.0);
  EXPECT_EQ(flat.achieved_tv, 0.0);
}

TEST(LazyApproximation, SingleSample) {
  const auto r = lazy_approximation(make_path({0}, {3}), Level(1));
  expect_values_near(r.approximation.values(), {3.5}, 0.0);
  EXPECT_EQ(r.achieved_tv, 0.0);
}

TEST(JordanPairTest, Golden) {
  const auto jp = jordan_pair(p1(), Level(0.6));
  expect_values_near(jp.up_component, {0, 0.4, 0.4, 0.8, 0.8}, 1e-12);
  expect_values_near(jp.down_component, {0, 0, 0.2, 0.2, 0.6}, 1e-12);
}

TEST(JordanPairTest, TrivialAndMonotone) {
  const auto flat = jordan_pair(p3(), Level(0.1));
  expect_values_near(flat.up_component, {0, 0}, 0.0);
  expect_values_near(flat.down_component, {0, 0}, 0.0);
  const auto ramp = jordan_pair(ramp3(), Level(0.5));
  expect_values_near(ramp.up_component, {0, 0.5, 1.5}, 0.0);
  expect_values_near(ramp.down_component, {0, 0, 0}, 0.0);
}

TEST(ZeroStart, Golden) {
  const auto r = zero_start_approximation(p1(), Level(0.6));
  expect_values_near(r.approximation.values(), {0, 0.4, 0.2, 0.6, 0.2}, 1e-12);
  EXPECT_NEAR(r.achieved_tv, 1.4, 1e-12);
  EXPECT_LE(r.sup_error, 0.6 + 1e-12);
  expect_values_near(zero_start_approximation(p3(), Level(0.1)).approximation.values(), {0, 0},
                     0.0);
  expect_values_near(zero_start_approximation(p1(), Level(2.0)).approximation.values(),
                     {0, 0, 0, 0, 0}, 0.0);
}

TEST(StepSkeleton, Examples) {
  const auto p = make_path({0, 1, 2, 3}, {0, 0.1, 0.2, 1.0});
  EXPECT_EQ(step_skeleton(p, Level(0.5)), make_path({0, 3}, {0, 1.0}));
  EXPECT_EQ(step_skeleton(p3(), Level(0.1)), make_path({0, 1}, {5, 5}));
  EXPECT_EQ(step_skeleton(p1(), Level(0.6)), p1());
  // strict trigger: an increment of exactly c/2 does not open a breakpoint
  EXPECT_EQ(step_skeleton(make_path({0, 1}, {0, 0.5}), Level(1.0)), make_path({0, 1}, {0, 0}));
}

TEST(StepSkeleton, WithinHalfLevel) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [path, level] = oracle::random_case(rng, 150);
    const auto g = step_skeleton(path, Level(level));
    EXPECT_LE(sup_distance(path, g), level / 2);
    EXPECT_LE(g.size(), path.size());
    for (double t : g.times()) {
      EXPECT_TRUE(std::ranges::binary_search(path.times(), t));
    }
  }
}

TEST(ApproxProperties, AgreesWithLiteralFormula) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [path, level] = oracle::random_case(rng, 80);
    const auto r = lazy_approximation(path, Level(level));
    const auto ref = oracle::reference_lazy(path.values(), level);
    expect_values_near(r.approximation.values(), ref.lazy, 0.0);
  }
}

TEST(ApproxProperties, BallJordanAndJumps) {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [path, level] = oracle::random_case(rng, 200);
    const Level c(level);
    const auto r = lazy_approximation(path, c);
    const auto& up = r.jordan.up_component;
    const auto& down = r.jordan.down_component;
    const auto fc = r.approximation.values();
    const auto f = path.values();
    const double tol = oracle::tolerance_for(path);

    EXPECT_LE(r.sup_error, level / 2 + 1e-12);
    EXPECT_EQ(up.front(), 0.0);
    EXPECT_EQ(down.front(), 0.0);

    double tv_prefix = 0.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
      const double du = up[i] - up[i - 1];
      const double dd = down[i] - down[i - 1];
      EXPECT_GE(du, 0.0);
      EXPECT_GE(dd, 0.0);
      EXPECT_EQ(std::min(du, dd), 0.0) << "both components move at " << i;
      if (f[i] == f[i - 1]) {
        EXPECT_EQ(du, 0.0);
        EXPECT_EQ(dd, 0.0);
        EXPECT_EQ(fc[i], fc[i - 1]);
      }
      EXPECT_LE(std::abs(fc[i] - fc[i - 1]), std::abs(f[i] - f[i - 1]) + tol);
      // f^c(s) = f^c(a) + up(s) - down(s); prefix TV = up + down
      EXPECT_NEAR(fc[i], fc[0] + up[i] - down[i], tol);
      tv_prefix += std::abs(fc[i] - fc[i - 1]);
      EXPECT_NEAR(tv_prefix, up[i] + down[i], tol);
    }

    const auto z = zero_start_approximation(path, c);
    EXPECT_EQ(z.approximation.value(0), 0.0);
    EXPECT_EQ(z.achieved_tv, r.achieved_tv);
    EXPECT_LE(z.sup_error, level + tol);
  }
}

TEST(ApproxProperties, NegationEquivariance) {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [path, level] = oracle::random_case(rng, 120);
    const Level c(level);
    if (!first_up_time(path, c) && !first_down_time(path, c)) continue;
    const auto a = lazy_approximation(negate(path), c).approximation;
    const auto b = negate(lazy_approximation(path, c).approximation);
    EXPECT_EQ(a, b);
  }
}

TEST(ApproxProperties, UniqueInTheBall) {
  // Shifting f^c by any nonzero constant leaves the c/2-ball once c <= osc.
  SplitMix64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    auto [path, level] = oracle::random_case(rng, 120);
    const double osc = osc_norm(path);
    if (osc == 0.0) continue;
    level = std::min(level, osc);
    const auto fc = lazy_approximation(path, Level(level)).approximation;
    const double delta = 1e-6 * level * (rng.uniform() < 0.5 ? -1 : 1);
    EXPECT_GT(sup_distance(path, add_constant(fc, delta)), level / 2);
  }
}
