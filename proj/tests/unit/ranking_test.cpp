#include <gtest/gtest.h>

#include <set>

#include "deepvote/error.hpp"
#include "deepvote/ranking.hpp"
#include "deepvote/sampling.hpp"

using namespace deepvote;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no deepvote::Error thrown";
  return ErrorCode::Empty;
}

}  // namespace

TEST(Ranking, RejectsNonPermutations) {
  EXPECT_EQ(code_of([] { Ranking({1, 1, 2}); }), ErrorCode::NotAPermutation);
  EXPECT_EQ(code_of([] { Ranking({0, 1, 2}); }), ErrorCode::NotAPermutation);
  EXPECT_EQ(code_of([] { Ranking({1, 2, 4}); }), ErrorCode::NotAPermutation);
  EXPECT_EQ(code_of([] { Ranking(std::vector<Rank>{}); }), ErrorCode::Empty);
}

TEST(Ranking, CandidateAtInvertsRanks) {
  const Ranking r{3, 1, 2};
  EXPECT_EQ(r.candidate_at(1), 1u);
  EXPECT_EQ(r.candidate_at(3), 0u);
  EXPECT_EQ(r.top(), 1u);
  EXPECT_EQ(r.rank_of(2), 2);
}

TEST(Ranking, InverseAndCompose) {
  Sampler rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto m = rng.between(1, 7);
    const auto a = rng.ranking(m);
    const auto b = rng.ranking(m);
    EXPECT_EQ(compose(a, inverse(a)), Ranking::identity(m));
    EXPECT_EQ(compose(inverse(a), a), Ranking::identity(m));
    const auto ab = compose(a, b);
    for (Candidate c = 0; c < m; ++c) {
      EXPECT_EQ(ab[c], a[static_cast<Candidate>(b[c] - 1)]);
    }
  }
  EXPECT_EQ(code_of([] { compose(Ranking{1, 2}, Ranking{1, 2, 3}); }), ErrorCode::DimensionMismatch);
}

TEST(Ranking, EnumerationIsLexicographicAndComplete) {
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<Ranking> all(enumerate_rankings(m).begin(), enumerate_rankings(m).end());
    ASSERT_EQ(all.size(), factorial(m));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<Ranking>(all.begin(), all.end()).size(), all.size());
    for (std::uint64_t k = 0; k < all.size(); ++k) EXPECT_EQ(nth_ranking(m, k), all[k]);
  }
}

TEST(Ranking, RangeRestarts) {
  const auto range = enumerate_rankings(4);
  std::size_t first = 0, second = 0;
  for (const auto& r : range) first += r.size() > 0;
  for (const auto& r : range) second += r.size() > 0;
  EXPECT_EQ(first, 24u);
  EXPECT_EQ(second, 24u);
}

TEST(Ranking, EnumerationCap) {
  EXPECT_EQ(code_of([] { enumerate_rankings(10); }), ErrorCode::CapExceeded);
  EXPECT_EQ(code_of([] { enumerate_rankings(5, 4); }), ErrorCode::CapExceeded);
  EXPECT_EQ(code_of([] { enumerate_rankings(0); }), ErrorCode::Empty);
  EXPECT_NO_THROW(enumerate_rankings(9));
}

TEST(Profile, FromRowsReadsCandidatesAsRows) {
  const auto f = Profile::from_rows({{1, 2}, {2, 1}, {3, 3}});
  EXPECT_EQ(f.candidates(), 3u);
  EXPECT_EQ(f.voters(), 2u);
  EXPECT_EQ(f.voter(1), (Ranking{2, 1, 3}));
  EXPECT_EQ(f.rank(2, 0), 3);
}

TEST(Profile, BadColumnReportsIndex) {
  try {
    Profile::from_rows({{1, 2, 1}, {2, 1, 1}, {3, 3, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPermutation);
    EXPECT_EQ(e.index(), std::optional<std::size_t>(2));
  }
  EXPECT_EQ(code_of([] { Profile(std::vector<Ranking>{}); }), ErrorCode::Empty);
  EXPECT_EQ(code_of([] { Profile({Ranking{1, 2}, Ranking{1, 2, 3}}); }), ErrorCode::DimensionMismatch);
}

TEST(Profile, RemoveCandidateCompressesRanks) {
  const auto f = Profile::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  const auto g = remove_candidate(f, 1);
  EXPECT_EQ(g, Profile::from_rows({{1, 2, 2}, {2, 1, 1}}));
  EXPECT_EQ(remove_voter(f, 0), Profile::from_rows({{2, 3}, {3, 1}, {1, 2}}));
}

TEST(Profile, PromoteSwapsWithNeighbourAbove) {
  const auto f = Profile::from_rows({{1, 3}, {2, 1}, {3, 2}});
  const auto g = promote_candidate(f, 1, 0);
  EXPECT_EQ(g.voter(1), (Ranking{2, 1, 3}));
  EXPECT_EQ(g.voter(0), f.voter(0));
}

TEST(Profile, PermutationsAndCommonTop) {
  const auto f = Profile::from_rows({{1, 1}, {2, 3}, {3, 2}});
  EXPECT_EQ(common_top(f), std::optional<Candidate>(0));
  const std::vector<Candidate> relabel{2, 0, 1};
  const auto g = permute_candidates(f, relabel);
  EXPECT_EQ(g, Profile::from_rows({{3, 2}, {1, 1}, {2, 3}}));
  EXPECT_EQ(common_top(g), std::optional<Candidate>(1));
  const std::vector<std::size_t> order{1, 0};
  EXPECT_EQ(permute_voters(f, order).voter(0), f.voter(1));
  EXPECT_EQ(common_top(Profile::from_rows({{1, 2}, {2, 1}})), std::nullopt);
}

TEST(Sampler, DeterministicPerSeed) {
  Sampler a(5), b(5);
  EXPECT_EQ(a.profile(4, 9), b.profile(4, 9));
  EXPECT_NE(Sampler::derive(1, 0), Sampler::derive(1, 1));
  Sampler c(8);
  for (int t = 0; t < 100; ++t) {
    const auto top = c.index(5);
    EXPECT_EQ(c.ranking_with_top(5, top).top(), top);
  }
}
