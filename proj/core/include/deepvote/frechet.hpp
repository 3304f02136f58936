#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "deepvote/metrics.hpp"
#include "deepvote/ranking.hpp"

namespace deepvote {

/// Relative tolerance for ties between functional values that cannot be
/// compared exactly.
inline constexpr double kTieTolerance = 1e-9;

struct FrechetParams {
  DistanceSpec spec;
  double p = 1.0;

  /// Throws Error{InvalidParameter} for p < 1, for non-integer p with a
  /// signed weight matrix, and Error{DimensionMismatch} for mismatched weights.
  void validate(std::size_t m) const;
  /// True when U can be summed in exact integer arithmetic for this (d, p).
  bool exact() const;
};

/// U(sigma) = (1/n) sum_v d(sigma, sigma_v)^p. `exact_sum` holds n * U when
/// it was computed without rounding.
struct FunctionalValue {
  double mean = 0.0;
  std::optional<std::int64_t> exact_sum;
  std::size_t voters = 0;

  bool exact() const noexcept { return exact_sum.has_value(); }
};

FunctionalValue frechet_functional(const Ranking& sigma, const Profile& profile,
                                   const FrechetParams& params);

/// diameter^p - U(sigma); nonnegative for distances.
double depth_value(const Ranking& sigma, const Profile& profile, const FrechetParams& params,
                   std::size_t cap = kDefaultEnumerationCap);

struct FunctionalOrdering {
  std::weak_ordering order = std::weak_ordering::equivalent;
  /// Set when the float path with kTieTolerance decided the ordering.
  bool approximate = false;
};

/// Three-way comparison of U(sigma) against U(tau).
FunctionalOrdering compare_functional(const Ranking& sigma, const Ranking& tau,
                                      const Profile& profile, const FrechetParams& params);

struct SearchOptions {
  std::size_t max_m = kDefaultEnumerationCap;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Compute depth_max (needs the diameter, which is costly for weighted kinds).
  bool with_depth = true;
};

struct DeepestResult {
  FrechetParams params;
  /// All minimisers of U, lexicographically ordered.
  std::vector<Ranking> deepest_set;
  /// { c : sigma*(c) = 1 for some sigma* in deepest_set }, ascending.
  std::vector<Candidate> winner_set;
  double u_min = 0.0;
  std::optional<std::int64_t> u_min_sum;
  std::size_t voters = 0;
  std::optional<double> depth_max;
  bool unique_winner = false;
  /// False when ties were resolved with the float tolerance.
  bool exact = true;
};

/// Exact argmin of U over S_m. Ties are kept, never broken. The result does
/// not depend on the thread count.
DeepestResult deepest_set(const Profile& profile, const FrechetParams& params,
                          const SearchOptions& options = {});

/// Top candidates of the given rankings, deduplicated and sorted.
std::vector<Candidate> top_candidates(const std::vector<Ranking>& rankings);

}  // namespace deepvote
