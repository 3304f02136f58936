#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deepvote/ranking.hpp"

namespace deepvote {

/// Rank-pair weights w(r, r') with 1-based ranks. Entries must be finite;
/// negative entries are allowed only for weighted Hamming dissimilarities.
class WeightMatrix {
 public:
  explicit WeightMatrix(const std::vector<std::vector<double>>& rows);

  static WeightMatrix uniform(std::size_t m, double value = 1.0);
  /// w = 1 when either rank is 1, else 0. Weighted Hamming with these
  /// weights elects the Plurality winner.
  static WeightMatrix plurality(std::size_t m);
  /// w = -1 when either rank is m, else 0 (Antiplurality).
  static WeightMatrix antiplurality(std::size_t m);
  /// w = 1 / min(r, r'): strictly positive, symmetric, emphasises the top.
  static WeightMatrix top_heavy(std::size_t m);

  std::size_t size() const noexcept { return m_; }
  double operator()(Rank r, Rank r2) const noexcept {
    return w_[static_cast<std::size_t>(r - 1) * m_ + static_cast<std::size_t>(r2 - 1)];
  }

  bool symmetric() const noexcept { return symmetric_; }
  bool nonnegative() const noexcept;
  bool strictly_positive() const noexcept;
  /// True when every entry is an integer (enables exact arithmetic).
  bool integral() const noexcept;

  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<double> w_;
  bool symmetric_ = true;
};

inline constexpr double kInfiniteOrder = std::numeric_limits<double>::infinity();

enum class DistanceKind {
  Kendall,
  Hamming,
  Cayley,
  Minkowski,
  WeightedHamming,
  WeightedMinkowski,
};

/// Tagged choice of permutation distance.
class DistanceSpec {
 public:
  static DistanceSpec kendall();
  static DistanceSpec hamming();
  static DistanceSpec cayley();
  /// q in [1, inf]; throws Error{InvalidOrder}.
  static DistanceSpec minkowski(double q);
  static DistanceSpec footrule() { return minkowski(1.0); }
  static DistanceSpec spearman_rho() { return minkowski(2.0); }
  static DistanceSpec weighted_hamming(WeightMatrix w);
  /// q in [1, inf); w must be nonnegative (Error{NegativeWeightUnderRoot}).
  static DistanceSpec weighted_minkowski(double q, WeightMatrix w);

  DistanceKind kind() const noexcept { return kind_; }
  double order() const noexcept { return q_; }
  const std::optional<WeightMatrix>& weights() const noexcept { return weights_; }
  bool weighted() const noexcept { return weights_.has_value(); }

  /// Throws Error{DimensionMismatch} when the weight matrix does not fit m.
  void check_dimension(std::size_t m) const;

  /// Stable identifier, e.g. "kendall", "minkowski(q=2)", "weighted-hamming".
  std::string name() const;

  friend bool operator==(const DistanceSpec&, const DistanceSpec&) = default;

 private:
  DistanceSpec(DistanceKind kind, double q, std::optional<WeightMatrix> w)
      : kind_(kind), q_(q), weights_(std::move(w)) {}

  DistanceKind kind_;
  double q_;
  std::optional<WeightMatrix> weights_;
};

/// `exact` is set when `value` is an exact integer.
struct DistanceValue {
  double value = 0.0;
  bool exact = true;
};

DistanceValue kendall(const Ranking& sigma, const Ranking& tau);
DistanceValue hamming(const Ranking& sigma, const Ranking& tau);
DistanceValue cayley(const Ranking& sigma, const Ranking& tau);
DistanceValue minkowski(const Ranking& sigma, const Ranking& tau, double q);
DistanceValue weighted_hamming(const Ranking& sigma, const Ranking& tau, const WeightMatrix& w);
DistanceValue weighted_minkowski(const Ranking& sigma, const Ranking& tau, double q,
                                 const WeightMatrix& w);

DistanceValue distance(const DistanceSpec& spec, const Ranking& sigma, const Ranking& tau);

/// Largest distance over S_m x S_m. Closed forms for Kendall, Hamming and
/// Cayley; enumeration otherwise (weighted kinds capped at m <= 7).
DistanceValue diameter(const DistanceSpec& spec, std::size_t m,
                       std::size_t cap = kDefaultEnumerationCap);

inline constexpr std::size_t kWeightedDiameterCap = 7;

/// rho = max over rank triples (a, b, c) of w(a, b) / w(a, c).
double relaxation_constant(const WeightMatrix& w);

/// Span-level integer kernels used on hot paths. Inputs are rank vectors of
/// equal length (not rechecked).
namespace kernels {

std::int64_t kendall_count(std::span<const Rank> a, std::span<const Rank> b);
std::int64_t hamming_count(std::span<const Rank> a, std::span<const Rank> b);
std::int64_t cayley_count(std::span<const Rank> a, std::span<const Rank> b);
std::int64_t max_gap(std::span<const Rank> a, std::span<const Rank> b);
/// sum |a_c - b_c|^q for integer q >= 1; nullopt on overflow.
std::optional<std::int64_t> power_sum(std::span<const Rank> a, std::span<const Rank> b, int q);
double power_sum_real(std::span<const Rank> a, std::span<const Rank> b, double q);
double weighted_hamming_sum(std::span<const Rank> a, std::span<const Rank> b, const WeightMatrix& w);
double weighted_power_sum(std::span<const Rank> a, std::span<const Rank> b, double q,
                          const WeightMatrix& w);

}  // namespace kernels

}  // namespace deepvote
