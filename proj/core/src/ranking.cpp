#include "deepvote/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "deepvote/error.hpp"

namespace deepvote {

namespace {

void check_permutation(std::span<const Rank> raw) {
  if (raw.empty()) throw Error(ErrorCode::Empty, "ranking has no candidates");
  const auto m = static_cast<Rank>(raw.size());
  std::vector<bool> seen(raw.size(), false);
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const Rank r = raw[c];
    if (r < 1 || r > m) {
      throw Error(ErrorCode::NotAPermutation,
                  "rank " + std::to_string(r) + " outside 1.." + std::to_string(m), c);
    }
    if (seen[r - 1]) {
      throw Error(ErrorCode::NotAPermutation, "duplicate rank " + std::to_string(r), c);
    }
    seen[r - 1] = true;
  }
}

}  // namespace

Ranking::Ranking(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {
  check_permutation(ranks_);
}

Ranking::Ranking(std::initializer_list<Rank> ranks) : Ranking(std::vector<Rank>(ranks)) {}

Ranking Ranking::identity(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::Empty, "ranking has no candidates");
  std::vector<Rank> r(m);
  std::iota(r.begin(), r.end(), 1);
  return Ranking(std::move(r), Unchecked{});
}

Rank Ranking::rank_of(Candidate c) const { return ranks_.at(c); }

Candidate Ranking::candidate_at(Rank r) const {
  const auto it = std::find(ranks_.begin(), ranks_.end(), r);
  if (it == ranks_.end()) {
    throw Error(ErrorCode::InvalidParameter, "rank " + std::to_string(r) + " not present");
  }
  return static_cast<Candidate>(it - ranks_.begin());
}

Ranking validate_ranking(std::span<const Rank> raw) {
  return Ranking(std::vector<Rank>(raw.begin(), raw.end()));
}

Ranking inverse(const Ranking& sigma) {
  std::vector<Rank> out(sigma.size());
  for (std::size_t c = 0; c < sigma.size(); ++c) {
    out[sigma[c] - 1] = static_cast<Rank>(c + 1);
  }
  return Ranking(std::move(out), Ranking::Unchecked{});
}

Ranking compose(const Ranking& sigma, const Ranking& s) {
  if (sigma.size() != s.size()) {
    throw Error(ErrorCode::DimensionMismatch, "compose: rankings of different sizes");
  }
  std::vector<Rank> out(sigma.size());
  for (std::size_t c = 0; c < s.size(); ++c) out[c] = sigma[s[c] - 1];
  return Ranking(std::move(out), Ranking::Unchecked{});
}

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= m; ++k) f *= k;
  return f;
}

void require_within_cap(std::size_t m, std::size_t cap) {
  if (m > cap) {
    throw Error(ErrorCode::CapExceeded, "m = " + std::to_string(m) +
                                            " exceeds the enumeration cap of " +
                                            std::to_string(cap));
  }
}

Ranking nth_ranking(std::size_t m, std::uint64_t k) {
  if (m == 0) throw Error(ErrorCode::Empty, "ranking has no candidates");
  if (k >= factorial(m)) throw Error(ErrorCode::InvalidParameter, "ranking index out of range");
  std::vector<Rank> pool(m);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<Rank> out;
  out.reserve(m);
  for (std::size_t i = m; i > 0; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(k / block);
    k %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Ranking(std::move(out), Ranking::Unchecked{});
}

RankingIterator& RankingIterator::operator++() {
  if (!done_) done_ = !std::next_permutation(current_.ranks_.begin(), current_.ranks_.end());
  return *this;
}

RankingRange enumerate_rankings(std::size_t m, std::size_t cap) {
  if (m == 0) throw Error(ErrorCode::Empty, "cannot enumerate rankings of zero candidates");
  require_within_cap(m, cap);
  return RankingRange(m);
}

Profile::Profile(std::vector<Ranking> voters) : m_(0), columns_(std::move(voters)) {
  if (columns_.empty()) throw Error(ErrorCode::Empty, "profile has no voters");
  m_ = columns_.front().size();
  for (std::size_t v = 0; v < columns_.size(); ++v) {
    if (columns_[v].size() != m_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "voter " + std::to_string(v) + " ranks a different number of candidates", v);
    }
  }
}

Profile Profile::from_rows(const std::vector<std::vector<Rank>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::Empty, "empty matrix");
  const std::size_t n = rows.front().size();
  std::vector<Ranking> columns;
  columns.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rank> col;
    col.reserve(rows.size());
    for (const auto& row : rows) {
      if (row.size() != n) throw Error(ErrorCode::NotRectangular, "ragged matrix rows");
      col.push_back(row[v]);
    }
    try {
      columns.emplace_back(std::move(col));
    } catch (const Error& e) {
      throw Error(e.code(), "column " + std::to_string(v) + ": " + e.what(), v);
    }
  }
  return Profile(std::move(columns));
}

Profile permute_candidates(const Profile& profile, std::span<const Candidate> new_to_old) {
  const std::size_t m = profile.candidates();
  if (new_to_old.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "relabeling has the wrong length");
  }
  std::vector<Ranking> cols;
  cols.reserve(profile.voters());
  for (const auto& col : profile.columns()) {
    std::vector<Rank> r(m);
    for (std::size_t j = 0; j < m; ++j) r[j] = col[new_to_old[j]];
    cols.emplace_back(std::move(r));
  }
  return Profile(std::move(cols));
}

Profile permute_voters(const Profile& profile, std::span<const std::size_t> order) {
  if (order.size() != profile.voters()) {
    throw Error(ErrorCode::DimensionMismatch, "voter order has the wrong length");
  }
  std::vector<Ranking> cols;
  cols.reserve(order.size());
  for (const auto v : order) cols.push_back(profile.voter(v));
  return Profile(std::move(cols));
}

Profile remove_candidate(const Profile& profile, Candidate c) {
  if (profile.candidates() < 2) {
    throw Error(ErrorCode::InvalidParameter, "cannot remove the only candidate");
  }
  if (c >= profile.candidates()) throw Error(ErrorCode::InvalidParameter, "no such candidate");
  std::vector<Ranking> cols;
  cols.reserve(profile.voters());
  for (const auto& col : profile.columns()) {
    const Rank removed = col[c];
    std::vector<Rank> r;
    r.reserve(col.size() - 1);
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (k == c) continue;
      r.push_back(col[k] > removed ? col[k] - 1 : col[k]);
    }
    cols.emplace_back(std::move(r));
  }
  return Profile(std::move(cols));
}

Profile remove_voter(const Profile& profile, std::size_t v) {
  if (profile.voters() < 2) throw Error(ErrorCode::InvalidParameter, "cannot remove the only voter");
  std::vector<Ranking> cols = profile.columns();
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(v));
  return Profile(std::move(cols));
}

Profile promote_candidate(const Profile& profile, std::size_t v, Candidate c) {
  const Ranking& col = profile.voter(v);
  const Rank alpha = col.rank_of(c);
  if (alpha == 1) {
    throw Error(ErrorCode::InvalidParameter, "candidate is already ranked first", v);
  }
  const Candidate displaced = col.candidate_at(alpha - 1);
  std::vector<Rank> r(col.ranks().begin(), col.ranks().end());
  r[c] = alpha - 1;
  r[displaced] = alpha;
  std::vector<Ranking> cols = profile.columns();
  cols[v] = Ranking(std::move(r));
  return Profile(std::move(cols));
}

std::optional<Candidate> common_top(const Profile& profile) {
  const Candidate first = profile.voter(0).top();
  for (const auto& col : profile.columns()) {
    if (col[first] != 1) return std::nullopt;
  }
  return first;
}

}  // namespace deepvote
