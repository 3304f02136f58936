#pragma once

#include <cstddef>
#include <vector>

#include "deepvote/ranking.hpp"

namespace deepvote {

/// A point of R^m: ranks read as evaluations, lower is better.
struct EvaluationPoint {
  std::vector<double> coords;
};

/// Product of closed intervals [lower[c], upper[c]].
struct DeepestBox {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// L^q depth 1 / (1 + (1/n) sum_v sum_c |Phi(c,v) - x_c|^q); the inner sum
/// becomes a max over c for q = inf. Value in (0, 1].
double lq_depth(const EvaluationPoint& x, const Profile& profile, double q);

/// Componentwise mean rank: the unique maximiser of the L^2 depth.
EvaluationPoint l2_deepest(const Profile& profile);

/// Componentwise median interval: the set of maximisers of the L^1 depth.
/// Degenerate for odd n; [x_(n/2), x_(n/2+1)] for even n.
DeepestBox l1_deepest_box(const Profile& profile);

/// Argmin coordinates of the point, ties kept.
std::vector<Candidate> continuous_winner_set(const EvaluationPoint& point);

/// c wins iff some point of the box has coordinate c minimal, i.e.
/// lower[c] <= min over c' of upper[c'].
std::vector<Candidate> continuous_winner_set(const DeepestBox& box);

}  // namespace deepvote
