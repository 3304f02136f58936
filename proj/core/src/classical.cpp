#include "deepvote/classical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace deepvote {

namespace {

std::vector<Candidate> argmin(const std::vector<double>& scores) {
  const double best = *std::min_element(scores.begin(), scores.end());
  std::vector<Candidate> out;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (scores[c] == best) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> argmax(const std::vector<double>& scores) {
  const double best = *std::max_element(scores.begin(), scores.end());
  std::vector<Candidate> out;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (scores[c] == best) out.push_back(c);
  }
  return out;
}

std::vector<double> count_rank(const Profile& profile, Rank r) {
  std::vector<double> counts(profile.candidates(), 0.0);
  for (const auto& col : profile.columns()) counts[col.candidate_at(r)] += 1.0;
  return counts;
}

}  // namespace

std::vector<std::vector<std::size_t>> pairwise_majority(const Profile& profile) {
  const std::size_t m = profile.candidates();
  std::vector<std::vector<std::size_t>> n(m, std::vector<std::size_t>(m, 0));
  for (const auto& col : profile.columns()) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (col[a] < col[b]) ++n[a][b];
      }
    }
  }
  return n;
}

RuleOutcome borda(const Profile& profile) {
  RuleOutcome out{"borda", {}, std::vector<double>(profile.candidates(), 0.0), {}};
  for (const auto& col : profile.columns()) {
    for (std::size_t c = 0; c < profile.candidates(); ++c) out.scores[c] += col[c];
  }
  out.winner_set = argmin(out.scores);
  return out;
}

RuleOutcome bucklin(const Profile& profile) {
  const std::size_t n = profile.voters();
  RuleOutcome out{"bucklin", {}, {}, {}};
  for (std::size_t c = 0; c < profile.candidates(); ++c) {
    std::vector<Rank> row;
    for (const auto& col : profile.columns()) row.push_back(col[c]);
    std::sort(row.begin(), row.end());
    out.scores.push_back(row[(n - 1) / 2]);
  }
  out.winner_set = argmin(out.scores);
  return out;
}

RuleOutcome plurality(const Profile& profile) {
  RuleOutcome out{"plurality", {}, count_rank(profile, 1), {}};
  out.winner_set = argmax(out.scores);
  return out;
}

RuleOutcome antiplurality(const Profile& profile) {
  const auto m = static_cast<Rank>(profile.candidates());
  RuleOutcome out{"antiplurality", {}, count_rank(profile, m), {}};
  out.winner_set = argmin(out.scores);
  return out;
}

RuleOutcome kemeny(const Profile& profile, std::size_t cap) {
  const std::size_t m = profile.candidates();
  const auto pairs = pairwise_majority(profile);
  RuleOutcome out{"kemeny", {}, std::vector<double>(m, std::numeric_limits<double>::infinity()), {}};
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& order : enumerate_rankings(m, cap)) {
    // Every voter who prefers b to a disagrees with an order placing a above b.
    std::size_t cost = 0;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (order[a] < order[b]) cost += pairs[b][a];
      }
    }
    const Candidate head = order.top();
    out.scores[head] = std::min(out.scores[head], static_cast<double>(cost));
    if (cost < best) {
      best = cost;
      out.optimal_orders.clear();
    }
    if (cost == best) out.optimal_orders.push_back(order);
  }
  for (const auto& order : out.optimal_orders) out.winner_set.push_back(order.top());
  std::sort(out.winner_set.begin(), out.winner_set.end());
  out.winner_set.erase(std::unique(out.winner_set.begin(), out.winner_set.end()),
                       out.winner_set.end());
  return out;
}

std::optional<Candidate> condorcet_winner(const Profile& profile) {
  const auto pairs = pairwise_majority(profile);
  for (std::size_t a = 0; a < profile.candidates(); ++a) {
    bool beats_all = true;
    for (std::size_t b = 0; b < profile.candidates() && beats_all; ++b) {
      if (a != b && pairs[a][b] <= pairs[b][a]) beats_all = false;
    }
    if (beats_all) return a;
  }
  return std::nullopt;
}

std::optional<Candidate> condorcet_loser(const Profile& profile) {
  const auto pairs = pairwise_majority(profile);
  for (std::size_t a = 0; a < profile.candidates(); ++a) {
    bool loses_all = true;
    for (std::size_t b = 0; b < profile.candidates() && loses_all; ++b) {
      if (a != b && pairs[a][b] >= pairs[b][a]) loses_all = false;
    }
    if (loses_all) return a;
  }
  return std::nullopt;
}

}  // namespace deepvote
