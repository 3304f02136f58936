#include "deepvote/sampling.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace deepvote {

std::uint64_t Sampler::derive(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Sampler::index(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::size_t Sampler::between(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(index(hi - lo + 1));
}

std::vector<std::size_t> Sampler::permutation(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(out[i - 1], out[index(i)]);
  return out;
}

Ranking Sampler::ranking(std::size_t m) {
  const auto perm = permutation(m);
  std::vector<Rank> ranks(m);
  for (std::size_t c = 0; c < m; ++c) ranks[c] = static_cast<Rank>(perm[c] + 1);
  return Ranking(std::move(ranks));
}

Ranking Sampler::ranking_with_top(std::size_t m, Candidate top) {
  const auto perm = permutation(m - 1);
  std::vector<Rank> ranks(m);
  ranks[top] = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < m; ++c) {
    if (c == top) continue;
    ranks[c] = static_cast<Rank>(perm[k++] + 2);
  }
  return Ranking(std::move(ranks));
}

Profile Sampler::profile(std::size_t m, std::size_t n) {
  std::vector<Ranking> cols;
  cols.reserve(n);
  for (std::size_t v = 0; v < n; ++v) cols.push_back(ranking(m));
  return Profile(std::move(cols));
}

}  // namespace deepvote
