#include "deepvote/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "deepvote/error.hpp"
#include "exact_math.hpp"

namespace deepvote {

namespace {

void require_same_size(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "rankings of sizes " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
}

void require_order(double q, bool allow_infinite) {
  if (std::isnan(q) || q < 1.0 || (!allow_infinite && std::isinf(q))) {
    std::ostringstream os;
    os << "Minkowski order q = " << q << " must lie in [1, " << (allow_infinite ? "inf]" : "inf)");
    throw Error(ErrorCode::InvalidOrder, os.str());
  }
}

void require_weights_fit(const WeightMatrix& w, std::size_t m) {
  if (w.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "weight matrix is " + std::to_string(w.size()) +
                                                  "x" + std::to_string(w.size()) + " but m = " +
                                                  std::to_string(m));
  }
}

// Small-buffer scratch for per-call permutation work.
class Scratch {
 public:
  explicit Scratch(std::size_t m) : m_(m) {
    if (m > fixed_.size()) heap_.resize(m);
  }
  int* data() { return m_ > fixed_.size() ? heap_.data() : fixed_.data(); }

 private:
  std::size_t m_;
  std::array<int, 64> fixed_{};
  std::vector<int> heap_;
};

}  // namespace

// ---------------------------------------------------------------- WeightMatrix

WeightMatrix::WeightMatrix(const std::vector<std::vector<double>>& rows) : m_(rows.size()) {
  if (m_ == 0) throw Error(ErrorCode::Empty, "weight matrix has no rows");
  w_.reserve(m_ * m_);
  for (std::size_t r = 0; r < m_; ++r) {
    if (rows[r].size() != m_) {
      throw Error(ErrorCode::NotRectangular, "weight matrix is not square", r);
    }
    for (double x : rows[r]) {
      if (!std::isfinite(x)) {
        throw Error(ErrorCode::InvalidParameter, "weight matrix entries must be finite", r);
      }
      w_.push_back(x);
    }
  }
  for (std::size_t r = 0; r < m_ && symmetric_; ++r) {
    for (std::size_t s = r + 1; s < m_; ++s) {
      if (w_[r * m_ + s] != w_[s * m_ + r]) {
        symmetric_ = false;
        break;
      }
    }
  }
}

WeightMatrix WeightMatrix::uniform(std::size_t m, double value) {
  return WeightMatrix(std::vector<std::vector<double>>(m, std::vector<double>(m, value)));
}

WeightMatrix WeightMatrix::plurality(std::size_t m) {
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      if (r == 0 || s == 0) rows[r][s] = 1.0;
    }
  }
  return WeightMatrix(rows);
}

WeightMatrix WeightMatrix::antiplurality(std::size_t m) {
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      if (r == m - 1 || s == m - 1) rows[r][s] = -1.0;
    }
  }
  return WeightMatrix(rows);
}

WeightMatrix WeightMatrix::top_heavy(std::size_t m) {
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      rows[r][s] = 1.0 / static_cast<double>(std::min(r, s) + 1);
    }
  }
  return WeightMatrix(rows);
}

bool WeightMatrix::nonnegative() const noexcept {
  return std::all_of(w_.begin(), w_.end(), [](double x) { return x >= 0.0; });
}

bool WeightMatrix::strictly_positive() const noexcept {
  return std::all_of(w_.begin(), w_.end(), [](double x) { return x > 0.0; });
}

bool WeightMatrix::integral() const noexcept {
  return std::all_of(w_.begin(), w_.end(), [](double x) { return detail::is_integer(x); });
}

std::vector<std::vector<double>> WeightMatrix::rows() const {
  std::vector<std::vector<double>> out(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    out[r].assign(w_.begin() + static_cast<std::ptrdiff_t>(r * m_),
                  w_.begin() + static_cast<std::ptrdiff_t>((r + 1) * m_));
  }
  return out;
}

// ---------------------------------------------------------------- DistanceSpec

DistanceSpec DistanceSpec::kendall() { return {DistanceKind::Kendall, 0.0, std::nullopt}; }
DistanceSpec DistanceSpec::hamming() { return {DistanceKind::Hamming, 0.0, std::nullopt}; }
DistanceSpec DistanceSpec::cayley() { return {DistanceKind::Cayley, 0.0, std::nullopt}; }

DistanceSpec DistanceSpec::minkowski(double q) {
  require_order(q, true);
  return {DistanceKind::Minkowski, q, std::nullopt};
}

DistanceSpec DistanceSpec::weighted_hamming(WeightMatrix w) {
  return {DistanceKind::WeightedHamming, 0.0, std::move(w)};
}

DistanceSpec DistanceSpec::weighted_minkowski(double q, WeightMatrix w) {
  require_order(q, false);
  if (!w.nonnegative()) {
    throw Error(ErrorCode::NegativeWeightUnderRoot,
                "weighted Minkowski requires nonnegative weights");
  }
  return {DistanceKind::WeightedMinkowski, q, std::move(w)};
}

void DistanceSpec::check_dimension(std::size_t m) const {
  if (weights_) require_weights_fit(*weights_, m);
}

std::string DistanceSpec::name() const {
  auto order_text = [this] {
    if (std::isinf(q_)) return std::string("inf");
    std::ostringstream os;
    os << q_;
    return os.str();
  };
  switch (kind_) {
    case DistanceKind::Kendall: return "kendall";
    case DistanceKind::Hamming: return "hamming";
    case DistanceKind::Cayley: return "cayley";
    case DistanceKind::Minkowski: return "minkowski(q=" + order_text() + ")";
    case DistanceKind::WeightedHamming: return "weighted-hamming";
    case DistanceKind::WeightedMinkowski: return "weighted-minkowski(q=" + order_text() + ")";
  }
  return "unknown";
}

// ---------------------------------------------------------------- kernels

namespace kernels {

std::int64_t kendall_count(std::span<const Rank> a, std::span<const Rank> b) {
  std::int64_t count = 0;
  const std::size_t m = a.size();
  for (std::size_t c = 0; c + 1 < m; ++c) {
    for (std::size_t d = c + 1; d < m; ++d) {
      if ((a[c] < a[d]) != (b[c] < b[d])) ++count;
    }
  }
  return count;
}

std::int64_t hamming_count(std::span<const Rank> a, std::span<const Rank> b) {
  std::int64_t count = 0;
  for (std::size_t c = 0; c < a.size(); ++c) count += (a[c] != b[c]);
  return count;
}

std::int64_t cayley_count(std::span<const Rank> a, std::span<const Rank> b) {
  // Cycles of a o b^-1 (on ranks) equal the cycles of b^-1 o a (on candidates).
  const std::size_t m = a.size();
  Scratch inv_b(m);
  Scratch seen(m);
  int* inv = inv_b.data();
  int* mark = seen.data();
  for (std::size_t c = 0; c < m; ++c) {
    inv[b[c] - 1] = static_cast<int>(c);
    mark[c] = 0;
  }
  std::int64_t cycles = 0;
  for (std::size_t start = 0; start < m; ++start) {
    if (mark[start]) continue;
    ++cycles;
    for (std::size_t c = start; !mark[c]; c = static_cast<std::size_t>(inv[a[c] - 1])) {
      mark[c] = 1;
    }
  }
  return static_cast<std::int64_t>(m) - cycles;
}

std::int64_t max_gap(std::span<const Rank> a, std::span<const Rank> b) {
  std::int64_t best = 0;
  for (std::size_t c = 0; c < a.size(); ++c) best = std::max<std::int64_t>(best, std::abs(a[c] - b[c]));
  return best;
}

std::optional<std::int64_t> power_sum(std::span<const Rank> a, std::span<const Rank> b, int q) {
  std::int64_t total = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    auto term = detail::checked_pow(std::abs(a[c] - b[c]), q);
    if (!term) return std::nullopt;
    auto next = detail::checked_add(total, *term);
    if (!next) return std::nullopt;
    total = *next;
  }
  return total;
}

double power_sum_real(std::span<const Rank> a, std::span<const Rank> b, double q) {
  double total = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    total += std::pow(static_cast<double>(std::abs(a[c] - b[c])), q);
  }
  return total;
}

double weighted_hamming_sum(std::span<const Rank> a, std::span<const Rank> b,
                            const WeightMatrix& w) {
  double total = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] != b[c]) total += w(a[c], b[c]);
  }
  return total;
}

double weighted_power_sum(std::span<const Rank> a, std::span<const Rank> b, double q,
                          const WeightMatrix& w) {
  double total = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] != b[c]) total += w(a[c], b[c]) * std::pow(static_cast<double>(std::abs(a[c] - b[c])), q);
  }
  return total;
}

}  // namespace kernels

// ---------------------------------------------------------------- distances

DistanceValue kendall(const Ranking& sigma, const Ranking& tau) {
  require_same_size(sigma, tau);
  return {static_cast<double>(kernels::kendall_count(sigma.ranks(), tau.ranks())), true};
}

DistanceValue hamming(const Ranking& sigma, const Ranking& tau) {
  require_same_size(sigma, tau);
  return {static_cast<double>(kernels::hamming_count(sigma.ranks(), tau.ranks())), true};
}

DistanceValue cayley(const Ranking& sigma, const Ranking& tau) {
  require_same_size(sigma, tau);
  return {static_cast<double>(kernels::cayley_count(sigma.ranks(), tau.ranks())), true};
}

DistanceValue minkowski(const Ranking& sigma, const Ranking& tau, double q) {
  require_same_size(sigma, tau);
  require_order(q, true);
  if (std::isinf(q)) {
    return {static_cast<double>(kernels::max_gap(sigma.ranks(), tau.ranks())), true};
  }
  if (q == 1.0) {
    return {static_cast<double>(*kernels::power_sum(sigma.ranks(), tau.ranks(), 1)), true};
  }
  if (auto qi = detail::as_positive_int(q)) {
    if (auto s = kernels::power_sum(sigma.ranks(), tau.ranks(), *qi)) {
      return {std::pow(static_cast<double>(*s), 1.0 / q), false};
    }
  }
  return {std::pow(kernels::power_sum_real(sigma.ranks(), tau.ranks(), q), 1.0 / q), false};
}

DistanceValue weighted_hamming(const Ranking& sigma, const Ranking& tau, const WeightMatrix& w) {
  require_same_size(sigma, tau);
  require_weights_fit(w, sigma.size());
  return {kernels::weighted_hamming_sum(sigma.ranks(), tau.ranks(), w), w.integral()};
}

DistanceValue weighted_minkowski(const Ranking& sigma, const Ranking& tau, double q,
                                 const WeightMatrix& w) {
  require_same_size(sigma, tau);
  require_order(q, false);
  require_weights_fit(w, sigma.size());
  if (!w.nonnegative()) {
    throw Error(ErrorCode::NegativeWeightUnderRoot,
                "weighted Minkowski requires nonnegative weights");
  }
  const double s = kernels::weighted_power_sum(sigma.ranks(), tau.ranks(), q, w);
  if (q == 1.0) return {s, w.integral()};
  return {std::pow(s, 1.0 / q), false};
}

DistanceValue distance(const DistanceSpec& spec, const Ranking& sigma, const Ranking& tau) {
  switch (spec.kind()) {
    case DistanceKind::Kendall: return kendall(sigma, tau);
    case DistanceKind::Hamming: return hamming(sigma, tau);
    case DistanceKind::Cayley: return cayley(sigma, tau);
    case DistanceKind::Minkowski: return minkowski(sigma, tau, spec.order());
    case DistanceKind::WeightedHamming: return weighted_hamming(sigma, tau, *spec.weights());
    case DistanceKind::WeightedMinkowski:
      return weighted_minkowski(sigma, tau, spec.order(), *spec.weights());
  }
  throw Error(ErrorCode::InvalidParameter, "unknown distance kind");
}

DistanceValue diameter(const DistanceSpec& spec, std::size_t m, std::size_t cap) {
  if (m == 0) throw Error(ErrorCode::Empty, "diameter of S_0");
  spec.check_dimension(m);
  const auto mi = static_cast<double>(m);
  switch (spec.kind()) {
    case DistanceKind::Kendall: return {mi * (mi - 1.0) / 2.0, true};
    case DistanceKind::Hamming: return {m == 1 ? 0.0 : mi, true};
    case DistanceKind::Cayley: return {mi - 1.0, true};
    case DistanceKind::Minkowski: {
      // Right-invariant: d(s, t) = d(s o t^-1, id), so one side can be fixed.
      const Ranking id = Ranking::identity(m);
      DistanceValue best{0.0, true};
      for (const auto& s : enumerate_rankings(m, cap)) {
        const auto d = distance(spec, s, id);
        if (d.value > best.value) best = d;
      }
      return best;
    }
    case DistanceKind::WeightedHamming:
    case DistanceKind::WeightedMinkowski: {
      require_within_cap(m, std::min(cap, kWeightedDiameterCap));
      const std::vector<Ranking> all(enumerate_rankings(m, cap).begin(), RankingIterator{});
      DistanceValue best = distance(spec, all.front(), all.front());
      for (const auto& s : all) {
        for (const auto& t : all) {
          const auto d = distance(spec, s, t);
          if (d.value > best.value) best = d;
        }
      }
      return best;
    }
  }
  throw Error(ErrorCode::InvalidParameter, "unknown distance kind");
}

double relaxation_constant(const WeightMatrix& w) {
  if (!w.strictly_positive()) {
    throw Error(ErrorCode::NonPositiveWeight, "relaxation constant needs strictly positive weights");
  }
  if (!w.symmetric()) {
    throw Error(ErrorCode::InvalidParameter, "relaxation constant needs symmetric weights");
  }
  const auto m = static_cast<Rank>(w.size());
  double rho = 0.0;
  for (Rank a = 1; a <= m; ++a) {
    for (Rank b = 1; b <= m; ++b) {
      for (Rank c = 1; c <= m; ++c) rho = std::max(rho, w(a, b) / w(a, c));
    }
  }
  return rho;
}

}  // namespace deepvote
