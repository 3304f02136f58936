#include "deepvote/continuous.hpp"

#include <algorithm>
#include <cmath>

#include "deepvote/error.hpp"

namespace deepvote {

namespace {

std::vector<Rank> row_of(const Profile& profile, Candidate c) {
  std::vector<Rank> row;
  row.reserve(profile.voters());
  for (const auto& col : profile.columns()) row.push_back(col[c]);
  return row;
}

}  // namespace

double lq_depth(const EvaluationPoint& x, const Profile& profile, double q) {
  if (x.coords.size() != profile.candidates()) {
    throw Error(ErrorCode::DimensionMismatch, "point and profile have different dimensions");
  }
  if (std::isnan(q) || q < 1.0) throw Error(ErrorCode::InvalidOrder, "q must lie in [1, inf]");
  if (!std::all_of(x.coords.begin(), x.coords.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::InvalidParameter, "evaluation point must be finite");
  }
  double total = 0.0;
  for (const auto& col : profile.columns()) {
    double dev = 0.0;
    for (std::size_t c = 0; c < x.coords.size(); ++c) {
      const double gap = std::abs(static_cast<double>(col[c]) - x.coords[c]);
      dev = std::isinf(q) ? std::max(dev, gap) : dev + std::pow(gap, q);
    }
    total += dev;
  }
  return 1.0 / (1.0 + total / static_cast<double>(profile.voters()));
}

EvaluationPoint l2_deepest(const Profile& profile) {
  EvaluationPoint out;
  out.coords.assign(profile.candidates(), 0.0);
  for (std::size_t c = 0; c < profile.candidates(); ++c) {
    long sum = 0;
    for (const auto& col : profile.columns()) sum += col[c];
    out.coords[c] = static_cast<double>(sum) / static_cast<double>(profile.voters());
  }
  return out;
}

DeepestBox l1_deepest_box(const Profile& profile) {
  const std::size_t n = profile.voters();
  DeepestBox box;
  for (std::size_t c = 0; c < profile.candidates(); ++c) {
    auto row = row_of(profile, c);
    std::sort(row.begin(), row.end());
    if (n % 2 == 1) {
      box.lower.push_back(row[n / 2]);
      box.upper.push_back(row[n / 2]);
    } else {
      box.lower.push_back(row[n / 2 - 1]);
      box.upper.push_back(row[n / 2]);
    }
  }
  return box;
}

std::vector<Candidate> continuous_winner_set(const EvaluationPoint& point) {
  std::vector<Candidate> out;
  if (point.coords.empty()) return out;
  const double best = *std::min_element(point.coords.begin(), point.coords.end());
  for (std::size_t c = 0; c < point.coords.size(); ++c) {
    if (point.coords[c] == best) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> continuous_winner_set(const DeepestBox& box) {
  if (box.lower.size() != box.upper.size()) {
    throw Error(ErrorCode::DimensionMismatch, "box bounds of different lengths");
  }
  std::vector<Candidate> out;
  if (box.upper.empty()) return out;
  const double ceiling = *std::min_element(box.upper.begin(), box.upper.end());
  for (std::size_t c = 0; c < box.lower.size(); ++c) {
    if (box.lower[c] <= ceiling) out.push_back(c);
  }
  return out;
}

}  // namespace deepvote
