#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "hw/error.hpp"
#include "hw/parallel.hpp"
#include "hw/quadrature.hpp"
#include "support/generators.hpp"

using namespace hw;

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (int n : {4, 7, 32, 96}) {
    const GaussLegendre gl = gauss_legendre(n);
    ASSERT_EQ(gl.nodes.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(std::is_sorted(gl.nodes.begin(), gl.nodes.end()));
    for (int k = 0; k < 2 * n; k += 3) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], k);
      const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
      EXPECT_NEAR(s, exact, 1e-13) << n << " " << k;
    }
    for (double w : gl.weights) EXPECT_GT(w, 0.0);
  }
}

TEST(AngularGrid, WeightSumIsTwo) {
  for (auto [p, t] : {std::pair{64, 32}, {256, 128}, {10, 5}}) {
    const AngularGrid g = build_angular_grid(p, t);
    // Few theta nodes resolve sin(2 theta) only to about 1e-7.
    EXPECT_NEAR(g.weight_sum(), 2.0, t >= 32 ? 1e-12 : 1e-6);
    EXPECT_EQ(g.w.size() % 4, 0u);
    EXPECT_EQ(g.node_count, static_cast<std::size_t>(p * t));
    for (std::size_t k = 0; k < g.node_count; ++k) EXPECT_GT(g.w[k], 0.0);
    for (std::size_t k = g.node_count; k < g.w.size(); ++k) EXPECT_EQ(g.w[k], 0.0);
  }
}

TEST(AngularGrid, AxisMomentsVanish) {
  const AngularGrid g = build_angular_grid(64, 32);
  EXPECT_NEAR(g.moment_x, 0.0, 1e-13);
  EXPECT_NEAR(g.moment_y, 0.0, 1e-13);
  EXPECT_NEAR(g.moment_z, 0.0, 1e-13);
}

TEST(AngularGrid, ConstantIntegratesToTwo) {
  EXPECT_NEAR(integrate_angular([](double, double) { return 1.0; }, build_angular_grid(64, 32)), 2.0, 1e-12);
}

TEST(BetaGrid, ConstantAndGaussian) {
  const BetaGrid g = build_beta_grid(96, 5.0);
  EXPECT_NEAR(integrate_beta([](Complex) { return 1.0; }, g), 100.0, 1e-9);
  for (double r : {4.0, 5.0, 7.0}) {
    const double v = integrate_beta(
        [](Complex b) { return 2.0 / std::numbers::pi * std::exp(-2.0 * std::norm(b)); }, build_beta_grid(96, r));
    EXPECT_NEAR(v, 1.0, 1e-8) << r;
  }
}

TEST(Grid, ValidatesInputs) {
  EXPECT_THROW(build_angular_grid(3, 16), ValidationError);
  EXPECT_THROW(build_angular_grid(16, 2), ValidationError);
  EXPECT_THROW(build_beta_grid(3, 5.0), ValidationError);
  EXPECT_THROW(build_beta_grid(16, 0.0), ValidationError);
  EXPECT_THROW(build_beta_grid(16, INFINITY), ValidationError);
}

TEST(Grid, Doubling) {
  const QuadratureGrid g = build_grid(8, 6, 10, 3.0);
  const QuadratureGrid d = doubled(g);
  EXPECT_EQ(d.angular.n_phi, 16);
  EXPECT_EQ(d.angular.n_theta, 12);
  EXPECT_EQ(d.beta.n_beta, 20);
  EXPECT_EQ(d.beta.radius, 3.0);
}

TEST(Integrate, FullMeasureOfProductGaussian) {
  const QuadratureGrid g = build_grid(16, 8, 64, 5.0);
  const double v = integrate(
      [](const GridNode& n) { return 1.0 / std::numbers::pi * std::exp(-2.0 * std::norm(n.beta)); }, g);
  EXPECT_NEAR(v, 1.0, 1e-10);
}

TEST(Integrate, Linear) {
  const QuadratureGrid g = build_grid(12, 8, 24, 3.0);
  auto f = [](const GridNode& n) { return std::cos(n.phi) * std::sin(2 * n.theta) * std::exp(-std::norm(n.beta)); };
  auto h = [](const GridNode& n) { return n.beta.real() * n.beta.real() + std::cos(2 * n.theta); };
  const double a = 1.7, b = -0.3;
  const double lhs = integrate([&](const GridNode& n) { return a * f(n) + b * h(n); }, g);
  EXPECT_NEAR(lhs, a * integrate(f, g) + b * integrate(h, g), 1e-12);
}

TEST(Integrate, RejectsNonFinite) {
  const QuadratureGrid g = build_grid(8, 4, 8, 2.0);
  EXPECT_THROW(integrate([](const GridNode& n) { return n.beta.real() > 1.0 ? NAN : 0.0; }, g), NumericalError);
}

TEST(Integrate, IndependentOfWorkerCount) {
  const QuadratureGrid g = build_grid(20, 10, 40, 3.0);
  auto f = [](const GridNode& n) { return std::sin(3 * n.phi + n.beta.imag()) * std::exp(-std::norm(n.beta)); };
  ::setenv("HW_THREADS", "1", 1);
  const double one = integrate(f, g);
  ::setenv("HW_THREADS", "3", 1);
  const double three = integrate(f, g);
  ::unsetenv("HW_THREADS");
  const double all = integrate(f, g);
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, all);
}

TEST(Parallel, WorkerCountHonoursCap) {
  ::setenv("HW_THREADS", "2", 1);
  EXPECT_LE(worker_count(), 2);
  EXPECT_GE(worker_count(), 1);
  ::unsetenv("HW_THREADS");
  EXPECT_GE(worker_count(), 1);
}

TEST(Parallel, ForCoversEveryIndexAndRethrows) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  EXPECT_EQ(std::accumulate(hits.begin(), hits.end(), 0), 1000);
  EXPECT_THROW(parallel_for(100, [](std::size_t i) { if (i == 57) throw NumericalError("x"); }), NumericalError);
}

TEST(Parallel, PairwiseSumAccurate) {
  std::vector<double> v(100001, 0.1);
  EXPECT_NEAR(pairwise_sum(v), 10000.1, 1e-9);
  EXPECT_EQ(pairwise_sum(std::span<const double>()), 0.0);
}
