#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace deepvote {

/// Candidates are 0-based indices; labels only exist at the I/O boundary.
using Candidate = std::size_t;

/// Rank positions are 1-based: rank 1 is the most preferred candidate.
using Rank = int;

inline constexpr std::size_t kDefaultEnumerationCap = 9;

/// A total order over m candidates, stored as ranks()[c] = rank of c.
class Ranking {
 public:
  /// Validating constructor; throws Error{NotAPermutation} or Error{Empty}.
  explicit Ranking(std::vector<Rank> ranks);
  Ranking(std::initializer_list<Rank> ranks);

  static Ranking identity(std::size_t m);

  std::size_t size() const noexcept { return ranks_.size(); }
  Rank operator[](Candidate c) const noexcept { return ranks_[c]; }
  Rank rank_of(Candidate c) const;
  /// The candidate placed at rank r (1-based).
  Candidate candidate_at(Rank r) const;
  Candidate top() const { return candidate_at(1); }
  std::span<const Rank> ranks() const noexcept { return ranks_; }

  friend bool operator==(const Ranking&, const Ranking&) = default;
  friend auto operator<=>(const Ranking& a, const Ranking& b) {
    return a.ranks_ <=> b.ranks_;
  }

 private:
  struct Unchecked {};
  Ranking(std::vector<Rank> ranks, Unchecked) : ranks_(std::move(ranks)) {}

  std::vector<Rank> ranks_;

  friend Ranking inverse(const Ranking&);
  friend Ranking compose(const Ranking&, const Ranking&);
  friend class RankingIterator;
  friend Ranking nth_ranking(std::size_t, std::uint64_t);
};

Ranking validate_ranking(std::span<const Rank> raw);

/// rho with rho(sigma(c)) = c, as a rank vector (1-based values).
Ranking inverse(const Ranking& sigma);

/// (sigma o s)(c) = sigma(s(c)).
Ranking compose(const Ranking& sigma, const Ranking& s);

std::uint64_t factorial(std::size_t m);

/// Throws Error{CapExceeded} when m > cap.
void require_within_cap(std::size_t m, std::size_t cap);

/// The k-th ranking of S_m in lexicographic order of the rank sequence.
Ranking nth_ranking(std::size_t m, std::uint64_t k);

class RankingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Ranking;
  using difference_type = std::ptrdiff_t;
  using pointer = const Ranking*;
  using reference = const Ranking&;

  RankingIterator() = default;
  explicit RankingIterator(Ranking start) : current_(std::move(start)), done_(false) {}

  reference operator*() const { return current_; }
  pointer operator->() const { return &current_; }
  RankingIterator& operator++();
  RankingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  friend bool operator==(const RankingIterator& a, const RankingIterator& b) {
    return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
  }

 private:
  Ranking current_{Ranking::identity(1)};
  bool done_ = true;
};

/// Restartable view over S_m in lexicographic order; each begin() starts over.
class RankingRange {
 public:
  explicit RankingRange(std::size_t m) : m_(m) {}
  RankingIterator begin() const { return RankingIterator(Ranking::identity(m_)); }
  RankingIterator end() const { return {}; }
  std::size_t size() const { return static_cast<std::size_t>(factorial(m_)); }

 private:
  std::size_t m_;
};

/// All m! rankings; throws Error{CapExceeded} beyond `cap`.
RankingRange enumerate_rankings(std::size_t m, std::size_t cap = kDefaultEnumerationCap);

/// The opinion matrix: m candidates by n voters, one Ranking per voter.
class Profile {
 public:
  explicit Profile(std::vector<Ranking> voters);

  /// rows[c][v] = rank given by voter v to candidate c.
  static Profile from_rows(const std::vector<std::vector<Rank>>& rows);

  std::size_t candidates() const noexcept { return m_; }
  std::size_t voters() const noexcept { return columns_.size(); }
  const Ranking& voter(std::size_t v) const { return columns_.at(v); }
  Rank rank(Candidate c, std::size_t v) const { return columns_.at(v)[c]; }
  const std::vector<Ranking>& columns() const noexcept { return columns_; }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::size_t m_;
  std::vector<Ranking> columns_;
};

/// Row j of the result is row new_to_old[j] of `profile` (candidate relabeling).
Profile permute_candidates(const Profile& profile, std::span<const Candidate> new_to_old);

/// Column k of the result is column order[k] of `profile`.
Profile permute_voters(const Profile& profile, std::span<const std::size_t> order);

/// Drops candidate c and compresses each voter's ranks to 1..m-1, order preserved.
Profile remove_candidate(const Profile& profile, Candidate c);

/// Drops voter v.
Profile remove_voter(const Profile& profile, std::size_t v);

/// Swaps c with the candidate ranked immediately above it by voter v.
/// Requires rank(c, v) > 1.
Profile promote_candidate(const Profile& profile, std::size_t v, Candidate c);

/// Index of the candidate every voter ranks first, if any.
std::optional<Candidate> common_top(const Profile& profile);

}  // namespace deepvote
