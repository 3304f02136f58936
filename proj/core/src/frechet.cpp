#include "deepvote/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "deepvote/error.hpp"
#include "exact_math.hpp"

namespace deepvote {

namespace {

// One d^p term, exact when the (distance, p) pair allows it.
struct Term {
  std::optional<std::int64_t> exact;
  double real = 0.0;
};

// Sum of d^p over voters. Comparison between sums of the same profile is
// equivalent to comparing U since n is shared.
struct Sum {
  std::optional<std::int64_t> exact;
  double real = 0.0;
};

double tolerance_for(double reference) {
  return kTieTolerance * std::max(1.0, std::abs(reference));
}

bool ties_with(const Sum& value, const Sum& minimum) {
  if (value.exact && minimum.exact) return *value.exact == *minimum.exact;
  return value.real <= minimum.real + tolerance_for(minimum.real);
}

bool strictly_below(const Sum& value, const Sum& minimum) {
  if (value.exact && minimum.exact) return *value.exact < *minimum.exact;
  return value.real < minimum.real;
}

// Evaluates d(sigma, tau)^p with the exactness policy fixed once per (d, p).
class TermEvaluator {
 public:
  explicit TermEvaluator(const FrechetParams& params) : spec_(params.spec), p_(params.p) {
    p_int_ = detail::as_positive_int(p_);
    const double q = spec_.order();
    switch (spec_.kind()) {
      case DistanceKind::Kendall:
      case DistanceKind::Hamming:
      case DistanceKind::Cayley:
        mode_ = Mode::IntegerBase;
        break;
      case DistanceKind::Minkowski:
        if (std::isinf(q)) {
          mode_ = Mode::IntegerBase;
        } else {
          q_int_ = detail::as_positive_int(q);
          mode_ = q_int_ ? Mode::PowerSumBase : Mode::Real;
          ratio_ = p_ / q;
          ratio_int_ = detail::as_positive_int(ratio_);
        }
        break;
      case DistanceKind::WeightedHamming:
        mode_ = spec_.weights()->integral() ? Mode::IntegerBase : Mode::Real;
        break;
      case DistanceKind::WeightedMinkowski:
        q_int_ = detail::as_positive_int(q);
        mode_ = (q_int_ && spec_.weights()->integral()) ? Mode::PowerSumBase : Mode::Real;
        ratio_ = p_ / q;
        ratio_int_ = detail::as_positive_int(ratio_);
        break;
    }
  }

  bool exact_capable() const {
    if (mode_ == Mode::IntegerBase) return p_int_.has_value();
    if (mode_ == Mode::PowerSumBase) return ratio_int_.has_value();
    return false;
  }

  Term operator()(std::span<const Rank> a, std::span<const Rank> b) const {
    switch (mode_) {
      case Mode::IntegerBase: {
        const std::int64_t d = integer_base(a, b);
        if (p_int_) {
          if (auto t = detail::checked_pow(d, *p_int_)) return {*t, static_cast<double>(*t)};
        }
        return {std::nullopt, std::pow(static_cast<double>(d), p_)};
      }
      case Mode::PowerSumBase: {
        if (auto s = power_sum(a, b)) {
          if (ratio_int_) {
            if (auto t = detail::checked_pow(*s, *ratio_int_)) return {*t, static_cast<double>(*t)};
          }
          return {std::nullopt, std::pow(static_cast<double>(*s), ratio_)};
        }
        return {std::nullopt, std::pow(real_power_sum(a, b), ratio_)};
      }
      case Mode::Real:
        return {std::nullopt, real_term(a, b)};
    }
    return {};
  }

 private:
  enum class Mode { IntegerBase, PowerSumBase, Real };

  std::int64_t integer_base(std::span<const Rank> a, std::span<const Rank> b) const {
    switch (spec_.kind()) {
      case DistanceKind::Kendall: return kernels::kendall_count(a, b);
      case DistanceKind::Hamming: return kernels::hamming_count(a, b);
      case DistanceKind::Cayley: return kernels::cayley_count(a, b);
      case DistanceKind::Minkowski: return kernels::max_gap(a, b);
      case DistanceKind::WeightedHamming:
        return static_cast<std::int64_t>(kernels::weighted_hamming_sum(a, b, *spec_.weights()));
      default: return 0;
    }
  }

  std::optional<std::int64_t> power_sum(std::span<const Rank> a, std::span<const Rank> b) const {
    if (spec_.kind() == DistanceKind::Minkowski) return kernels::power_sum(a, b, *q_int_);
    const auto& w = *spec_.weights();
    std::int64_t total = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (a[c] == b[c]) continue;
      auto gap = detail::checked_pow(std::abs(a[c] - b[c]), *q_int_);
      if (!gap) return std::nullopt;
      auto term = detail::checked_mul(static_cast<std::int64_t>(w(a[c], b[c])), *gap);
      if (!term) return std::nullopt;
      auto next = detail::checked_add(total, *term);
      if (!next) return std::nullopt;
      total = *next;
    }
    return total;
  }

  double real_power_sum(std::span<const Rank> a, std::span<const Rank> b) const {
    if (spec_.kind() == DistanceKind::Minkowski) return kernels::power_sum_real(a, b, spec_.order());
    return kernels::weighted_power_sum(a, b, spec_.order(), *spec_.weights());
  }

  double real_term(std::span<const Rank> a, std::span<const Rank> b) const {
    switch (spec_.kind()) {
      case DistanceKind::Minkowski:
      case DistanceKind::WeightedMinkowski:
        return std::pow(real_power_sum(a, b), ratio_);
      case DistanceKind::WeightedHamming:
        return std::pow(kernels::weighted_hamming_sum(a, b, *spec_.weights()), p_);
      default:
        return std::pow(static_cast<double>(integer_base(a, b)), p_);
    }
  }

  const DistanceSpec& spec_;
  double p_;
  Mode mode_ = Mode::Real;
  std::optional<int> p_int_;
  std::optional<int> q_int_;
  double ratio_ = 1.0;
  std::optional<int> ratio_int_;
};

Sum sum_terms(const TermEvaluator& eval, std::span<const Rank> sigma, const Profile& profile) {
  Sum s{std::int64_t{0}, 0.0};
  for (const auto& voter : profile.columns()) {
    const Term t = eval(sigma, voter.ranks());
    s.real += t.real;
    if (s.exact) {
      if (t.exact) {
        s.exact = detail::checked_add(*s.exact, *t.exact);
      } else {
        s.exact.reset();
      }
    }
  }
  return s;
}

void check_inputs(const Ranking& sigma, const Profile& profile, const FrechetParams& params) {
  if (sigma.size() != profile.candidates()) {
    throw Error(ErrorCode::DimensionMismatch, "ranking and profile have different candidate counts");
  }
  params.validate(profile.candidates());
}

struct Entry {
  Ranking ranking;
  Sum value;
};

struct ChunkResult {
  std::optional<Sum> minimum;
  std::vector<Entry> near_minimum;
};

ChunkResult scan_chunk(const TermEvaluator& eval, const Profile& profile, std::size_t m,
                       std::uint64_t begin, std::uint64_t end) {
  ChunkResult out;
  if (begin >= end) return out;
  Ranking current = nth_ranking(m, begin);
  std::vector<Rank> ranks(current.ranks().begin(), current.ranks().end());
  for (std::uint64_t k = begin; k < end; ++k) {
    const Sum value = sum_terms(eval, ranks, profile);
    if (!out.minimum || strictly_below(value, *out.minimum)) {
      out.minimum = value;
      std::erase_if(out.near_minimum,
                    [&](const Entry& e) { return !ties_with(e.value, *out.minimum); });
    }
    if (ties_with(value, *out.minimum)) out.near_minimum.push_back({Ranking(ranks), value});
    std::next_permutation(ranks.begin(), ranks.end());
  }
  return out;
}

}  // namespace

void FrechetParams::validate(std::size_t m) const {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidParameter, "Frechet exponent p must be a finite value >= 1");
  }
  spec.check_dimension(m);
  if (spec.kind() == DistanceKind::WeightedHamming && !spec.weights()->nonnegative() &&
      !detail::is_integer(p)) {
    throw Error(ErrorCode::InvalidParameter,
                "signed weights make d negative; p must then be an integer");
  }
}

bool FrechetParams::exact() const { return TermEvaluator(*this).exact_capable(); }

FunctionalValue frechet_functional(const Ranking& sigma, const Profile& profile,
                                   const FrechetParams& params) {
  check_inputs(sigma, profile, params);
  const TermEvaluator eval(params);
  const Sum s = sum_terms(eval, sigma.ranks(), profile);
  const auto n = static_cast<double>(profile.voters());
  FunctionalValue out;
  out.voters = profile.voters();
  out.exact_sum = s.exact;
  out.mean = s.exact ? static_cast<double>(*s.exact) / n : s.real / n;
  return out;
}

double depth_value(const Ranking& sigma, const Profile& profile, const FrechetParams& params,
                   std::size_t cap) {
  const FunctionalValue u = frechet_functional(sigma, profile, params);
  const DistanceValue diam = diameter(params.spec, profile.candidates(), cap);
  return std::pow(diam.value, params.p) - u.mean;
}

FunctionalOrdering compare_functional(const Ranking& sigma, const Ranking& tau,
                                      const Profile& profile, const FrechetParams& params) {
  check_inputs(sigma, profile, params);
  check_inputs(tau, profile, params);
  const TermEvaluator eval(params);
  const Sum a = sum_terms(eval, sigma.ranks(), profile);
  const Sum b = sum_terms(eval, tau.ranks(), profile);
  if (a.exact && b.exact) return {*a.exact <=> *b.exact, false};
  const double tol = tolerance_for(std::min(a.real, b.real));
  if (std::abs(a.real - b.real) <= tol) return {std::weak_ordering::equivalent, true};
  return {a.real < b.real ? std::weak_ordering::less : std::weak_ordering::greater, true};
}

std::vector<Candidate> top_candidates(const std::vector<Ranking>& rankings) {
  std::vector<Candidate> tops;
  for (const auto& r : rankings) tops.push_back(r.top());
  std::sort(tops.begin(), tops.end());
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
  return tops;
}

DeepestResult deepest_set(const Profile& profile, const FrechetParams& params,
                          const SearchOptions& options) {
  const std::size_t m = profile.candidates();
  require_within_cap(m, options.max_m);
  params.validate(m);

  const TermEvaluator eval(params);
  const std::uint64_t total = factorial(m);
  unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 2048)));

  std::vector<ChunkResult> chunks(workers);
  if (workers == 1) {
    chunks[0] = scan_chunk(eval, profile, m, 0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { chunks[w] = scan_chunk(eval, profile, m, begin, end); });
    }
    for (auto& t : pool) t.join();
  }

  // Merge: the global minimum is order independent, and every chunk kept all
  // entries within tolerance of its own (larger or equal) minimum.
  std::optional<Sum> minimum;
  for (const auto& c : chunks) {
    if (c.minimum && (!minimum || strictly_below(*c.minimum, *minimum))) minimum = c.minimum;
  }

  DeepestResult out{params, {}, {}, 0.0, std::nullopt, profile.voters(), std::nullopt, false, true};
  bool all_exact = true;
  for (auto& c : chunks) {
    for (auto& e : c.near_minimum) {
      if (ties_with(e.value, *minimum)) {
        all_exact = all_exact && e.value.exact.has_value();
        out.deepest_set.push_back(std::move(e.ranking));
      }
    }
  }
  std::sort(out.deepest_set.begin(), out.deepest_set.end());
  out.winner_set = top_candidates(out.deepest_set);
  out.unique_winner = out.winner_set.size() == 1;
  out.exact = all_exact && minimum->exact.has_value();
  out.u_min_sum = minimum->exact;
  const auto n = static_cast<double>(profile.voters());
  out.u_min = minimum->exact ? static_cast<double>(*minimum->exact) / n : minimum->real / n;
  if (options.with_depth) {
    const DistanceValue diam = diameter(params.spec, m, options.max_m);
    out.depth_max = std::pow(diam.value, params.p) - out.u_min;
  }
  return out;
}

}  // namespace deepvote
