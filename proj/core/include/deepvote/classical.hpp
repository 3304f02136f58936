#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deepvote/ranking.hpp"

namespace deepvote {

/// Outcome of a classical rule. `scores` is the per-candidate statistic the
/// rule optimises (rank sums, medians, first/last-place counts, or for
/// Kemeny the best total disagreement among orders headed by that candidate).
struct RuleOutcome {
  std::string rule;
  std::vector<Candidate> winner_set;
  std::vector<double> scores;
  /// Kemeny only: every optimal social order.
  std::vector<Ranking> optimal_orders;
};

/// pairwise[a][b] = number of voters ranking a above b.
std::vector<std::vector<std::size_t>> pairwise_majority(const Profile& profile);

RuleOutcome borda(const Profile& profile);
/// Lowest median rank; the lower median is used when n is even.
RuleOutcome bucklin(const Profile& profile);
RuleOutcome plurality(const Profile& profile);
/// Candidates least often ranked last.
RuleOutcome antiplurality(const Profile& profile);
/// Exhaustive Kemeny aggregation from the pairwise matrix. Throws
/// Error{CapExceeded} for m > cap.
RuleOutcome kemeny(const Profile& profile, std::size_t cap = kDefaultEnumerationCap);

std::optional<Candidate> condorcet_winner(const Profile& profile);
std::optional<Candidate> condorcet_loser(const Profile& profile);

}  // namespace deepvote
