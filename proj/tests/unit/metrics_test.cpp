#include <gtest/gtest.h>

#include <cmath>

#include "deepvote/error.hpp"
#include "deepvote/metrics.hpp"
#include "deepvote/sampling.hpp"
#include "oracles.hpp"

using namespace deepvote;

namespace {

std::vector<Ranking> all(std::size_t m) {
  return {enumerate_rankings(m).begin(), enumerate_rankings(m).end()};
}

std::vector<DistanceSpec> unweighted_kinds() {
  return {DistanceSpec::kendall(),       DistanceSpec::hamming(),
          DistanceSpec::cayley(),        DistanceSpec::footrule(),
          DistanceSpec::spearman_rho(),  DistanceSpec::minkowski(3.0),
          DistanceSpec::minkowski(1.5),  DistanceSpec::minkowski(kInfiniteOrder)};
}

WeightMatrix random_positive(Sampler& rng, std::size_t m, bool integral) {
  std::vector<std::vector<double>> w(m, std::vector<double>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const double x = integral ? double(rng.between(1, 4)) : 0.25 + double(rng.index(1000)) / 250.0;
      w[a][b] = w[b][a] = x;
    }
  }
  return WeightMatrix(w);
}

}  // namespace

TEST(Metrics, SmallExamples) {
  EXPECT_EQ(kendall(Ranking{1, 2, 3}, Ranking{3, 2, 1}).value, 3);
  EXPECT_EQ(hamming(Ranking{1, 2, 3}, Ranking{2, 1, 3}).value, 2);
  EXPECT_EQ(cayley(Ranking{1, 2, 3}, Ranking{2, 1, 3}).value, 1);
  EXPECT_EQ(minkowski(Ranking{1, 2, 3}, Ranking{2, 1, 3}, 1).value, 2);
  EXPECT_EQ(minkowski(Ranking{1, 2, 3, 4}, Ranking{4, 2, 3, 1}, kInfiniteOrder).value, 3);
  EXPECT_TRUE(kendall(Ranking{1, 2}, Ranking{2, 1}).exact);
  EXPECT_FALSE(minkowski(Ranking{1, 2, 3}, Ranking{2, 1, 3}, 2).exact);
}

TEST(Metrics, KendallCountsDiscordantPairs) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (const auto& a : all(m)) {
      for (const auto& b : all(m)) {
        ASSERT_EQ(kendall(a, b).value, oracle::kendall(oracle::ranks_of(a), oracle::ranks_of(b)));
      }
    }
  }
}

TEST(Metrics, CayleyMatchesGreedyTranspositions) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (const auto& a : all(m)) {
      for (const auto& b : all(m)) {
        ASSERT_EQ(cayley(a, b).value, oracle::cayley(oracle::ranks_of(a), oracle::ranks_of(b)));
      }
    }
  }
}

TEST(Metrics, HammingAndMinkowskiMatchOracle) {
  Sampler rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto m = rng.between(1, 7);
    const auto a = rng.ranking(m), b = rng.ranking(m);
    const auto ra = oracle::ranks_of(a), rb = oracle::ranks_of(b);
    EXPECT_EQ(hamming(a, b).value, oracle::hamming(ra, rb));
    for (double q : {1.0, 2.0, 3.0, 2.5, kInfiniteOrder}) {
      EXPECT_NEAR(minkowski(a, b, q).value, oracle::minkowski(ra, rb, q), 1e-12);
    }
  }
}

TEST(Metrics, SquaredSpearmanIsExactInteger) {
  Sampler rng(4);
  for (int t = 0; t < 300; ++t) {
    const auto m = rng.between(2, 8);
    const auto a = rng.ranking(m), b = rng.ranking(m);
    std::int64_t s = 0;
    for (Candidate c = 0; c < m; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    EXPECT_EQ(kernels::power_sum(a.ranks(), b.ranks(), 2), s);
    EXPECT_EQ(std::round(std::pow(minkowski(a, b, 2).value, 2)), double(s));
  }
}

TEST(Metrics, MetricAxioms) {
  Sampler rng(5);
  for (const auto& spec : unweighted_kinds()) {
    for (int t = 0; t < 300; ++t) {
      const auto m = rng.between(1, 6);
      const auto a = rng.ranking(m), b = rng.ranking(m), c = rng.ranking(m);
      const double ab = distance(spec, a, b).value;
      EXPECT_GE(ab, 0.0);
      EXPECT_EQ(ab == 0.0, a == b) << spec.name();
      EXPECT_DOUBLE_EQ(ab, distance(spec, b, a).value);
      EXPECT_LE(ab, distance(spec, a, c).value + distance(spec, c, b).value + 1e-12) << spec.name();
    }
  }
}

TEST(Metrics, InvariantUnderCandidateRelabeling) {
  Sampler rng(6);
  for (const auto& spec : unweighted_kinds()) {
    for (int t = 0; t < 200; ++t) {
      const auto m = rng.between(1, 6);
      const auto a = rng.ranking(m), b = rng.ranking(m), r = rng.ranking(m);
      EXPECT_DOUBLE_EQ(distance(spec, compose(a, r), compose(b, r)).value, distance(spec, a, b).value)
          << spec.name();
    }
  }
}

TEST(Metrics, WeightedHammingPresets) {
  const auto top = WeightMatrix::plurality(3);
  const auto bottom = WeightMatrix::antiplurality(3);
  EXPECT_EQ(weighted_hamming(Ranking{1, 2, 3}, Ranking{2, 1, 3}, top).value, 2);
  EXPECT_EQ(weighted_hamming(Ranking{1, 2, 3}, Ranking{1, 3, 2}, top).value, 0);
  EXPECT_EQ(weighted_hamming(Ranking{1, 2, 3}, Ranking{1, 3, 2}, bottom).value, -2);
  EXPECT_EQ(weighted_hamming(Ranking{1, 2, 3}, Ranking{2, 1, 3}, bottom).value, 0);
  for (const auto& a : all(4)) EXPECT_EQ(weighted_hamming(a, a, WeightMatrix::antiplurality(4)).value, 0);
}

TEST(Metrics, WeightedAgainstOracle) {
  Sampler rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto m = rng.between(2, 6);
    const auto w = random_positive(rng, m, t % 2 == 0);
    const oracle::Weights ow = [&](int r, int s) { return w(r, s); };
    const auto a = rng.ranking(m), b = rng.ranking(m);
    const auto ra = oracle::ranks_of(a), rb = oracle::ranks_of(b);
    EXPECT_NEAR(weighted_hamming(a, b, w).value, oracle::weighted_hamming(ra, rb, ow), 1e-12);
    for (double q : {1.0, 2.0, 3.5}) {
      EXPECT_NEAR(weighted_minkowski(a, b, q, w).value, oracle::weighted_minkowski(ra, rb, q, ow),
                  1e-12);
    }
  }
  EXPECT_EQ(weighted_minkowski(Ranking{1, 2, 3}, Ranking{2, 1, 3}, 1, WeightMatrix::plurality(3)).value,
            2);
}

TEST(Metrics, UniformWeightsReduceToMinkowski) {
  const auto ones = WeightMatrix::uniform(3);
  for (const auto& a : all(3)) {
    for (const auto& b : all(3)) {
      for (double q : {1.0, 2.0, 3.0}) {
        EXPECT_NEAR(weighted_minkowski(a, b, q, ones).value, minkowski(a, b, q).value, 1e-12);
      }
    }
  }
}

TEST(Metrics, Diameters) {
  EXPECT_EQ(diameter(DistanceSpec::kendall(), 3).value, 3);
  EXPECT_EQ(diameter(DistanceSpec::hamming(), 4).value, 4);
  EXPECT_EQ(diameter(DistanceSpec::cayley(), 5).value, 4);
  EXPECT_NEAR(diameter(DistanceSpec::spearman_rho(), 3).value, std::sqrt(8.0), 1e-12);
  Sampler rng(8);
  for (std::size_t m = 1; m <= 5; ++m) {
    std::vector<DistanceSpec> specs = unweighted_kinds();
    specs.push_back(DistanceSpec::weighted_hamming(random_positive(rng, m, true)));
    specs.push_back(DistanceSpec::weighted_minkowski(2.0, WeightMatrix::top_heavy(m)));
    for (const auto& spec : specs) {
      double brute = 0;
      for (const auto& a : all(m)) {
        for (const auto& b : all(m)) brute = std::max(brute, distance(spec, a, b).value);
      }
      EXPECT_NEAR(diameter(spec, m).value, brute, 1e-12) << spec.name() << " m=" << m;
    }
  }
}

TEST(Metrics, RelaxationConstant) {
  EXPECT_EQ(relaxation_constant(WeightMatrix::uniform(4)), 1.0);
  EXPECT_EQ(relaxation_constant(WeightMatrix({{1, 2}, {2, 1}})), 2.0);
  Sampler rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto w = random_positive(rng, 4, false);
    double rho = 0;
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        for (int c = 1; c <= 4; ++c) rho = std::max(rho, w(a, b) / w(a, c));
      }
    }
    EXPECT_EQ(relaxation_constant(w), rho);
  }
}

TEST(Metrics, RelaxedTriangleInequalityExhaustive) {
  Sampler rng(10);
  for (std::size_t m = 2; m <= 4; ++m) {
    for (int t = 0; t < 3; ++t) {
      const auto w = random_positive(rng, m, false);
      const double rho = relaxation_constant(w);
      const auto perms = all(m);
      for (const auto& a : perms) {
        for (const auto& b : perms) {
          for (const auto& c : perms) {
            ASSERT_LE(weighted_hamming(a, b, w).value,
                      rho * (weighted_hamming(a, c, w).value + weighted_hamming(c, b, w).value) +
                          1e-12);
          }
        }
      }
    }
  }
}

TEST(Metrics, Errors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Empty;
  };
  EXPECT_EQ(code([] { DistanceSpec::minkowski(0.5); }), ErrorCode::InvalidOrder);
  EXPECT_EQ(code([] { DistanceSpec::weighted_minkowski(1, WeightMatrix::antiplurality(3)); }),
            ErrorCode::NegativeWeightUnderRoot);
  EXPECT_EQ(code([] { kendall(Ranking{1, 2}, Ranking{1, 2, 3}); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code([] { weighted_hamming(Ranking{1, 2}, Ranking{2, 1}, WeightMatrix::plurality(3)); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code([] { relaxation_constant(WeightMatrix::plurality(3)); }), ErrorCode::NonPositiveWeight);
  EXPECT_EQ(code([] { WeightMatrix({{1, 2}}); }), ErrorCode::NotRectangular);
  EXPECT_EQ(code([] { diameter(DistanceSpec::footrule(), 10); }), ErrorCode::CapExceeded);
}
