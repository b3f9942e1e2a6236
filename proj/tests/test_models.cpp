#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rdg/edge_probability.hpp"
#include "rdg/expected_degree.hpp"

using namespace rdg;

TEST(EdgeProbability, Examples) {
  EXPECT_DOUBLE_EQ(edge_probability(EdgeProbabilityModel::inverse_distance(1.0, 10), 5.0), 0.02);
  EXPECT_NEAR(edge_probability(EdgeProbabilityModel::waxman(1.0, 1.0), 1.0), 0.36787944117144233, 1e-15);
  EXPECT_EQ(edge_probability(EdgeProbabilityModel::inverse_distance(-1.0, 10), 2.0), 1.0);
  EXPECT_EQ(edge_probability(EdgeProbabilityModel::constant(0.3), 17.0), 0.3);
}

TEST(EdgeProbability, Truncated) {
  const auto g = EdgeProbabilityModel::truncated(EdgeProbabilityModel::inverse_distance(1.0, 10), 18.0);
  EXPECT_DOUBLE_EQ(g(18.0), 1.0 / 180.0);
  EXPECT_EQ(g(18.5), 0.0);
  EXPECT_EQ(g.describe(), "truncated(inverse-distance(beta=1.000000,n=10),cutoff=18.000000)");
}

TEST(EdgeProbability, RejectsBadInput) {
  EXPECT_THROW(EdgeProbabilityModel::inverse_distance(1.0, 10)(0.0), InvalidInput);
  EXPECT_THROW(EdgeProbabilityModel::constant(1.0)(-1.0), InvalidInput);
  EXPECT_THROW(EdgeProbabilityModel::constant(1.5), InvalidInput);
  EXPECT_THROW(EdgeProbabilityModel::waxman(0.0, 1.0), InvalidInput);
  EXPECT_THROW(EdgeProbabilityModel::waxman(1.0, 1.5), InvalidInput);
  EXPECT_THROW(EdgeProbabilityModel::truncated(EdgeProbabilityModel::constant(1.0), 0.0), InvalidInput);
}

TEST(EdgeProbability, NonIncreasingAndInUnitInterval) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> beta(-3.0, 3.0);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  std::uniform_real_distribution<double> dist(1e-6, 50.0);
  for (int iter = 0; iter < 300; ++iter) {
    const std::vector<EdgeProbabilityModel> models{
        EdgeProbabilityModel::inverse_distance(beta(rng), 1 + rng() % 100),
        EdgeProbabilityModel::waxman(unit(rng), unit(rng)), EdgeProbabilityModel::constant(unit(rng)),
        EdgeProbabilityModel::truncated(EdgeProbabilityModel::inverse_distance(beta(rng), 10), dist(rng))};
    double a = dist(rng);
    double b = dist(rng);
    if (a > b) std::swap(a, b);
    for (const auto& m : models) {
      EXPECT_GE(m(a), m(b));
      EXPECT_GE(m(a), 0.0);
      EXPECT_LE(m(a), 1.0);
    }
  }
}

TEST(EdgeProbability, RaisingBetaLowersEveryProbability) {
  for (double d = 1; d <= 40; ++d) {
    const double lo = EdgeProbabilityModel::inverse_distance(0.5, 15)(d);
    const double hi = EdgeProbabilityModel::inverse_distance(1.5, 15)(d);
    EXPECT_LT(hi, lo);
  }
}

TEST(ExpectedDegree, InfiniteTwoDimensions) {
  const LatticeSpace space(10, 2);
  const auto f = EdgeProbabilityModel::inverse_distance(1.0, 10);
  EXPECT_NEAR(expected_degree_infinite(space, f), 7.2, 1e-12);
  EXPECT_LT(expected_degree_infinite(space, f), 8.0);
  EXPECT_NEAR(expected_degree_infinite(2, 18, f), 7.2, 1e-12);
}

TEST(ExpectedDegree, ConstantOneCountsEveryOtherVertex) {
  const LatticeSpace space(5, 2);
  EXPECT_DOUBLE_EQ(expected_degree(space, EdgeProbabilityModel::constant(1.0), {2, 2}), 24.0);
  EXPECT_DOUBLE_EQ(expected_degree(space, EdgeProbabilityModel::constant(1.0), {0, 4}), 24.0);
}

TEST(ExpectedDegree, FiniteNeverExceedsInfinite) {
  for (unsigned r = 1; r <= 4; ++r) {
    const std::uint64_t n = r <= 2 ? 12 : 5;
    const LatticeSpace space(n, r);
    for (double beta : {-0.5, 0.0, 0.7, 2.0}) {
      const auto f = EdgeProbabilityModel::inverse_distance(beta, n);
      const double bound = expected_degree_infinite(space, f);
      for (VertexId id = 0; id < space.vertex_count(); id += 3)
        EXPECT_LE(expected_degree(space, f, space.point_of(id)), bound * (1 + 1e-12));
    }
  }
}

// Brute-force shells of Z^r (nested loops over r-1 axes) for r = 3, 4; the
// growth in n should follow n^{r-1-beta}.
TEST(ExpectedDegree, HigherDimensionsAgainstDirectSummation) {
  const double beta = 0.5;
  for (unsigned r : {3u, 4u}) {
    std::vector<double> values;
    const std::vector<std::uint64_t> sides{10, 20};
    for (std::uint64_t n : sides) {
      const auto f = EdgeProbabilityModel::inverse_distance(beta, n);
      const auto cutoff = static_cast<std::int64_t>(r * (n - 1));
      std::vector<std::uint64_t> shells(cutoff + 1, 0);
      std::vector<std::int64_t> p(r - 1, -cutoff);
      for (;;) {
        std::int64_t s = 0;
        for (auto c : p) s += std::llabs(c);
        for (std::int64_t t = 0; s + t <= cutoff; ++t) shells[s + t] += t == 0 ? 1 : 2;
        unsigned i = 0;
        for (; i < p.size(); ++i) {
          if (++p[i] <= cutoff) break;
          p[i] = -cutoff;
        }
        if (i == p.size()) break;
      }
      double direct = 0.0;
      for (std::int64_t d = 1; d <= cutoff; ++d) direct += static_cast<double>(shells[d]) * f(static_cast<double>(d));
      const double computed = expected_degree_infinite(LatticeSpace(n, r), f);
      EXPECT_NEAR(computed, direct, 1e-10 * direct) << "r=" << r << " n=" << n;
      values.push_back(computed);
    }
    const double exponent = std::log(values[1] / values[0]) / std::log(static_cast<double>(sides[1]) / sides[0]);
    EXPECT_NEAR(exponent, r - 1 - beta, 0.35) << "r=" << r;
  }
}

TEST(ExpectedEdgeCount, MatchesPairwiseSum) {
  // Independent value: sum over all 4950 unordered pairs of L_10^2 of 1/(10 d).
  EXPECT_NEAR(expected_edge_count(LatticeSpace(10, 2), EdgeProbabilityModel::inverse_distance(1.0, 10)),
              107.89319324466412, 1e-9);
}
