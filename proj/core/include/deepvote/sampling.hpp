#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "deepvote/ranking.hpp"

namespace deepvote {

/// Seeded generators with portable output: only the raw mt19937_64 stream is
/// used, never the implementation-defined std distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Sub-seed for trial `index` of a run seeded with `seed` (splitmix64).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

  /// Uniform integer in [0, bound).
  std::uint64_t index(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  std::vector<std::size_t> permutation(std::size_t n);
  Ranking ranking(std::size_t m);
  /// A uniformly random ranking with candidate `top` ranked first.
  Ranking ranking_with_top(std::size_t m, Candidate top);
  Profile profile(std::size_t m, std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace deepvote
