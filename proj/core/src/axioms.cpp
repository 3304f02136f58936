#include "deepvote/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <mutex>
#include <thread>

#include "deepvote/classical.hpp"
#include "deepvote/error.hpp"
#include "deepvote/sampling.hpp"

namespace deepvote {

namespace {

std::vector<Candidate> winners_of(const VotingRule& rule, const Profile& profile) {
  auto w = rule.winners(profile);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

AxiomVerdict holds(Axiom axiom, const VotingRule& rule, std::size_t trials = 1) {
  AxiomVerdict v;
  v.axiom = axiom;
  v.rule_id = rule.id;
  v.trials = trials;
  return v;
}

AxiomVerdict skipped(Axiom axiom, const VotingRule& rule) {
  AxiomVerdict v = holds(axiom, rule, 0);
  v.skipped = 1;
  return v;
}

AxiomVerdict violated(Axiom axiom, const VotingRule& rule, Witness witness) {
  AxiomVerdict v = holds(axiom, rule, 1);
  v.status = VerdictStatus::Violated;
  v.witness = std::move(witness);
  return v;
}

std::optional<Candidate> unique_winner(const std::vector<Candidate>& w) {
  if (w.size() == 1) return w.front();
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- rules

SearchOptions rule_search_options(std::size_t max_m) {
  SearchOptions o;
  o.max_m = max_m;
  o.threads = 1;
  o.with_depth = false;
  return o;
}

VotingRule deepest_rule(const DistanceSpec& spec, double p, SearchOptions options) {
  std::string id = "deepest[" + spec.name() + ", p=" + std::to_string(p) + "]";
  // std::to_string pads with zeros; trim them for readable ids.
  const auto dot = id.find('.', id.find("p="));
  if (dot != std::string::npos) {
    auto end = id.find(']', dot);
    auto last = id.find_last_not_of('0', end - 1);
    if (last == dot) --last;
    id.erase(last + 1, end - last - 1);
  }
  return {std::move(id), [spec, p, options](const Profile& profile) {
            return deepest_set(profile, FrechetParams{spec, p}, options).winner_set;
          }};
}

VotingRule deepest_rule(std::string id, std::function<DistanceSpec(std::size_t)> family, double p,
                        SearchOptions options) {
  return {std::move(id), [family = std::move(family), p, options](const Profile& profile) {
            return deepest_set(profile, FrechetParams{family(profile.candidates()), p}, options)
                .winner_set;
          }};
}

VotingRule classical_rule(std::string_view name) {
  if (name == "borda") return {"borda", [](const Profile& f) { return borda(f).winner_set; }};
  if (name == "bucklin") return {"bucklin", [](const Profile& f) { return bucklin(f).winner_set; }};
  if (name == "plurality") {
    return {"plurality", [](const Profile& f) { return plurality(f).winner_set; }};
  }
  if (name == "antiplurality") {
    return {"antiplurality", [](const Profile& f) { return antiplurality(f).winner_set; }};
  }
  if (name == "kemeny") return {"kemeny", [](const Profile& f) { return kemeny(f).winner_set; }};
  throw Error(ErrorCode::InvalidParameter, "unknown classical rule '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- names

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Neutrality: return "Neutrality";
    case Axiom::Anonymity: return "Anonymity";
    case Axiom::Universality: return "Universality";
    case Axiom::Unanimity: return "Unanimity";
    case Axiom::Monotonicity: return "Monotonicity";
    case Axiom::IndependenceToLosers: return "IndependenceToLosers";
    case Axiom::CondorcetWinner: return "CondorcetWinner";
    case Axiom::CondorcetLoser: return "CondorcetLoser";
  }
  return "Unknown";
}

Axiom parse_axiom(std::string_view text) {
  std::string key;
  for (char ch : text) {
    if (ch == '-' || ch == '_' || ch == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (Axiom a : {Axiom::Neutrality, Axiom::Anonymity, Axiom::Universality, Axiom::Unanimity,
                  Axiom::Monotonicity, Axiom::IndependenceToLosers, Axiom::CondorcetWinner,
                  Axiom::CondorcetLoser}) {
    std::string name;
    for (char ch : to_string(a)) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (name == key) return a;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown axiom '" + std::string(text) + "'");
}

std::string_view to_string(VerdictStatus status) {
  return status == VerdictStatus::Violated ? "violated" : "holds-on-sample";
}

// ---------------------------------------------------------------- checks

AxiomVerdict check_neutrality(const VotingRule& rule, const Profile& profile,
                              std::span<const Candidate> new_to_old) {
  const Profile relabeled = permute_candidates(profile, new_to_old);
  const auto before = winners_of(rule, profile);
  std::vector<Candidate> expected;
  for (std::size_t j = 0; j < new_to_old.size(); ++j) {
    if (std::binary_search(before.begin(), before.end(), new_to_old[j])) expected.push_back(j);
  }
  auto observed = winners_of(rule, relabeled);
  if (observed == expected) return holds(Axiom::Neutrality, rule);
  return violated(Axiom::Neutrality, rule,
                  {profile, relabeled, expected, observed,
                   std::vector<std::size_t>(new_to_old.begin(), new_to_old.end()),
                   "relabeling the candidates changed the winners beyond the relabeling"});
}

AxiomVerdict check_anonymity(const VotingRule& rule, const Profile& profile,
                             std::span<const std::size_t> voter_order) {
  const Profile shuffled = permute_voters(profile, voter_order);
  auto expected = winners_of(rule, profile);
  auto observed = winners_of(rule, shuffled);
  if (observed == expected) return holds(Axiom::Anonymity, rule);
  return violated(Axiom::Anonymity, rule,
                  {profile, shuffled, expected, observed,
                   std::vector<std::size_t>(voter_order.begin(), voter_order.end()),
                   "reordering the voters changed the winners"});
}

AxiomVerdict check_universality(const VotingRule& rule, const Profile& profile) {
  std::vector<Candidate> observed;
  try {
    observed = rule.winners(profile);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CapExceeded) return skipped(Axiom::Universality, rule);
    return violated(Axiom::Universality, rule,
                    {profile, profile, {}, {}, {}, std::string("rule failed: ") + e.what()});
  } catch (const std::exception& e) {
    return violated(Axiom::Universality, rule,
                    {profile, profile, {}, {}, {}, std::string("rule failed: ") + e.what()});
  }
  const bool in_range = std::all_of(observed.begin(), observed.end(), [&](Candidate c) {
    return c < profile.candidates();
  });
  if (!observed.empty() && in_range) return holds(Axiom::Universality, rule);
  return violated(Axiom::Universality, rule,
                  {profile, profile, {}, observed, {},
                   "rule did not return a nonempty subset of the candidates"});
}

AxiomVerdict check_unanimity(const VotingRule& rule, const Profile& profile) {
  const auto top = common_top(profile);
  if (!top) return skipped(Axiom::Unanimity, rule);
  const std::vector<Candidate> expected{*top};
  auto observed = winners_of(rule, profile);
  if (observed == expected) return holds(Axiom::Unanimity, rule);
  return violated(Axiom::Unanimity, rule,
                  {profile, profile, expected, observed, {},
                   "a candidate ranked first by every voter is not the sole winner"});
}

AxiomVerdict check_monotonicity_at(const VotingRule& rule, const Profile& profile,
                                   std::size_t voter, MonotonicityReading reading) {
  const auto winner = unique_winner(winners_of(rule, profile));
  if (!winner) return skipped(Axiom::Monotonicity, rule);
  if (profile.rank(*winner, voter) == 1) return skipped(Axiom::Monotonicity, rule);
  const Profile upgraded = promote_candidate(profile, voter, *winner);
  auto observed = winners_of(rule, upgraded);
  const bool ok = reading == MonotonicityReading::WinnerRetained
                      ? std::binary_search(observed.begin(), observed.end(), *winner)
                      : observed == std::vector<Candidate>{*winner};
  if (ok) return holds(Axiom::Monotonicity, rule);
  return violated(Axiom::Monotonicity, rule,
                  {profile, upgraded, {*winner}, observed,
                   {voter, static_cast<std::size_t>(reading)},
                   "raising the winner one place for voter " + std::to_string(voter) +
                       " cost it the election"});
}

AxiomVerdict check_monotonicity(const VotingRule& rule, const Profile& profile,
                                MonotonicityReading reading) {
  const auto winner = unique_winner(winners_of(rule, profile));
  if (!winner) return skipped(Axiom::Monotonicity, rule);
  std::size_t checked = 0;
  for (std::size_t v = 0; v < profile.voters(); ++v) {
    if (profile.rank(*winner, v) == 1) continue;
    auto verdict = check_monotonicity_at(rule, profile, v, reading);
    ++checked;
    if (verdict.violated()) {
      verdict.trials = checked;
      return verdict;
    }
  }
  if (checked == 0) {
    throw Error(ErrorCode::NoEligibleVoter, "every voter already ranks the winner first");
  }
  return holds(Axiom::Monotonicity, rule, checked);
}

AxiomVerdict check_independence_losers_at(const VotingRule& rule, const Profile& profile,
                                          Candidate removed) {
  if (profile.candidates() < 3) return skipped(Axiom::IndependenceToLosers, rule);
  const auto winner = unique_winner(winners_of(rule, profile));
  if (!winner || *winner == removed) return skipped(Axiom::IndependenceToLosers, rule);
  const Profile reduced = remove_candidate(profile, removed);
  const std::vector<Candidate> expected{*winner > removed ? *winner - 1 : *winner};
  auto observed = winners_of(rule, reduced);
  if (observed == expected) return holds(Axiom::IndependenceToLosers, rule);
  return violated(Axiom::IndependenceToLosers, rule,
                  {profile, reduced, expected, observed, {removed},
                   "removing losing candidate " + std::to_string(removed) +
                       " changed the winner"});
}

AxiomVerdict check_independence_losers(const VotingRule& rule, const Profile& profile) {
  if (profile.candidates() < 3) return skipped(Axiom::IndependenceToLosers, rule);
  const auto winner = unique_winner(winners_of(rule, profile));
  if (!winner) return skipped(Axiom::IndependenceToLosers, rule);
  std::size_t checked = 0;
  for (Candidate c = 0; c < profile.candidates(); ++c) {
    if (c == *winner) continue;
    auto verdict = check_independence_losers_at(rule, profile, c);
    ++checked;
    if (verdict.violated()) {
      verdict.trials = checked;
      return verdict;
    }
  }
  return holds(Axiom::IndependenceToLosers, rule, checked);
}

AxiomVerdict check_losers_addition(const VotingRule& rule, const Profile& base,
                                   const Profile& extended, Candidate added) {
  if (!(remove_candidate(extended, added) == base)) {
    throw Error(ErrorCode::InvalidParameter,
                "extended profile does not reduce to the base profile when the added candidate "
                "is removed");
  }
  const auto winner = unique_winner(winners_of(rule, base));
  if (!winner) return skipped(Axiom::IndependenceToLosers, rule);
  const std::vector<Candidate> expected{*winner >= added ? *winner + 1 : *winner};
  auto observed = winners_of(rule, extended);
  if (observed == expected) return holds(Axiom::IndependenceToLosers, rule);
  return violated(Axiom::IndependenceToLosers, rule,
                  {base, extended, expected, observed, {added, 1},
                   "adding candidate " + std::to_string(added) + " changed the winner"});
}

AxiomVerdict check_condorcet_winner_property(const VotingRule& rule, const Profile& profile) {
  const auto cw = condorcet_winner(profile);
  if (!cw) return skipped(Axiom::CondorcetWinner, rule);
  const std::vector<Candidate> expected{*cw};
  auto observed = winners_of(rule, profile);
  if (observed == expected) return holds(Axiom::CondorcetWinner, rule);
  return violated(Axiom::CondorcetWinner, rule,
                  {profile, profile, expected, observed, {},
                   "the Condorcet winner is not the sole winner"});
}

AxiomVerdict check_condorcet_loser_property(const VotingRule& rule, const Profile& profile) {
  const auto cl = condorcet_loser(profile);
  if (!cl) return skipped(Axiom::CondorcetLoser, rule);
  auto observed = winners_of(rule, profile);
  if (!std::binary_search(observed.begin(), observed.end(), *cl)) {
    return holds(Axiom::CondorcetLoser, rule);
  }
  std::vector<Candidate> expected;
  std::copy_if(observed.begin(), observed.end(), std::back_inserter(expected),
               [&](Candidate c) { return c != *cl; });
  return violated(Axiom::CondorcetLoser, rule,
                  {profile, profile, expected, observed, {*cl},
                   "the Condorcet loser is among the winners"});
}

bool replay_witness(const VotingRule& rule, const AxiomVerdict& verdict) {
  if (!verdict.violated() || !verdict.witness) return false;
  const Witness& w = *verdict.witness;
  AxiomVerdict again;
  switch (verdict.axiom) {
    case Axiom::Neutrality: again = check_neutrality(rule, w.original, w.parameters); break;
    case Axiom::Anonymity: again = check_anonymity(rule, w.original, w.parameters); break;
    case Axiom::Universality: again = check_universality(rule, w.original); break;
    case Axiom::Unanimity: again = check_unanimity(rule, w.original); break;
    case Axiom::Monotonicity:
      if (w.parameters.size() != 2) return false;
      again = check_monotonicity_at(rule, w.original, w.parameters[0],
                                    static_cast<MonotonicityReading>(w.parameters[1]));
      break;
    case Axiom::IndependenceToLosers:
      if (w.parameters.size() == 2) {
        again = check_losers_addition(rule, w.original, w.transformed, w.parameters[0]);
      } else if (w.parameters.size() == 1) {
        again = check_independence_losers_at(rule, w.original, w.parameters[0]);
      } else {
        return false;
      }
      break;
    case Axiom::CondorcetWinner: again = check_condorcet_winner_property(rule, w.original); break;
    case Axiom::CondorcetLoser: again = check_condorcet_loser_property(rule, w.original); break;
  }
  return again.violated() && again.witness->transformed == w.transformed &&
         again.witness->observed == w.observed;
}

// ---------------------------------------------------------------- search

namespace {

// One randomized trial: the profile plus the transformation it is checked under.
struct Case {
  Profile profile;
  std::vector<std::size_t> parameters;
};

AxiomVerdict evaluate(const VotingRule& rule, Axiom axiom, const Case& c,
                      MonotonicityReading reading) {
  switch (axiom) {
    case Axiom::Neutrality: return check_neutrality(rule, c.profile, c.parameters);
    case Axiom::Anonymity: return check_anonymity(rule, c.profile, c.parameters);
    case Axiom::Universality: return check_universality(rule, c.profile);
    case Axiom::Unanimity: return check_unanimity(rule, c.profile);
    case Axiom::Monotonicity:
      try {
        return check_monotonicity(rule, c.profile, reading);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoEligibleVoter) throw;
        return skipped(axiom, rule);
      }
    case Axiom::IndependenceToLosers: return check_independence_losers(rule, c.profile);
    case Axiom::CondorcetWinner: return check_condorcet_winner_property(rule, c.profile);
    case Axiom::CondorcetLoser: return check_condorcet_loser_property(rule, c.profile);
  }
  return skipped(axiom, rule);
}

Case make_case(Axiom axiom, const CounterexampleSearch& cfg, std::uint64_t trial_seed) {
  Sampler rng(trial_seed);
  const std::size_t lo_m = axiom == Axiom::IndependenceToLosers ? std::max<std::size_t>(3, cfg.min_m)
                                                                : cfg.min_m;
  const std::size_t m = rng.between(lo_m, std::max(lo_m, cfg.max_m));
  const std::size_t n = rng.between(cfg.min_n, std::max(cfg.min_n, cfg.max_n));
  if (axiom == Axiom::Unanimity) {
    const Candidate top = rng.index(m);
    std::vector<Ranking> cols;
    for (std::size_t v = 0; v < n; ++v) cols.push_back(rng.ranking_with_top(m, top));
    return {Profile(std::move(cols)), {}};
  }
  Profile profile = rng.profile(m, n);
  std::vector<std::size_t> params;
  if (axiom == Axiom::Neutrality) params = rng.permutation(m);
  if (axiom == Axiom::Anonymity) params = rng.permutation(n);
  return {std::move(profile), std::move(params)};
}

// Drops `removed` from an index permutation and closes the gap.
std::vector<std::size_t> drop_index(const std::vector<std::size_t>& perm, std::size_t removed) {
  std::vector<std::size_t> out;
  for (auto x : perm) {
    if (x == removed) continue;
    out.push_back(x > removed ? x - 1 : x);
  }
  return out;
}

std::optional<Case> without_voter(Axiom axiom, const Case& c, std::size_t v) {
  if (c.profile.voters() < 2) return std::nullopt;
  Case out{remove_voter(c.profile, v), c.parameters};
  if (axiom == Axiom::Anonymity) out.parameters = drop_index(c.parameters, v);
  return out;
}

std::optional<Case> without_candidate(Axiom axiom, const Case& c, Candidate k) {
  const std::size_t floor = axiom == Axiom::IndependenceToLosers ? 3 : 2;
  if (c.profile.candidates() <= floor) return std::nullopt;
  Case out{remove_candidate(c.profile, k), c.parameters};
  if (axiom == Axiom::Neutrality) out.parameters = drop_index(c.parameters, k);
  return out;
}

AxiomVerdict shrink(const VotingRule& rule, Axiom axiom, Case current, AxiomVerdict verdict,
                    MonotonicityReading reading) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = current.profile.voters(); v-- > 0 && !changed;) {
      if (auto next = without_voter(axiom, current, v)) {
        auto attempt = evaluate(rule, axiom, *next, reading);
        if (attempt.violated()) {
          current = std::move(*next);
          verdict = std::move(attempt);
          changed = true;
        }
      }
    }
    for (std::size_t k = current.profile.candidates(); k-- > 0 && !changed;) {
      if (auto next = without_candidate(axiom, current, k)) {
        auto attempt = evaluate(rule, axiom, *next, reading);
        if (attempt.violated()) {
          current = std::move(*next);
          verdict = std::move(attempt);
          changed = true;
        }
      }
    }
  }
  return verdict;
}

}  // namespace

AxiomVerdict search_counterexample(const VotingRule& rule, Axiom axiom,
                                   const CounterexampleSearch& config) {
  if (config.min_m < 1 || config.min_n < 1 || config.min_m > config.max_m ||
      config.min_n > config.max_n) {
    throw Error(ErrorCode::InvalidParameter, "invalid profile size bounds");
  }
  require_within_cap(config.max_m, config.cap);

  const std::size_t trials = config.trials;
  struct Outcome {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    bool violated = false;
  };
  std::vector<Outcome> outcomes(trials);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_violation{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      if (t > first_violation.load()) continue;
      try {
        const Case c = make_case(axiom, config, Sampler::derive(config.seed, t));
        const AxiomVerdict v = evaluate(rule, axiom, c, config.reading);
        outcomes[t] = {v.trials, v.skipped, v.violated()};
        if (v.violated()) {
          std::size_t cur = first_violation.load();
          while (t < cur && !first_violation.compare_exchange_weak(cur, t)) {
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : config.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, trials)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t stop = first_violation.load();
  AxiomVerdict result;
  result.axiom = axiom;
  result.rule_id = rule.id;
  result.seed = config.seed;
  for (std::size_t t = 0; t < trials && t <= stop; ++t) {
    result.trials += outcomes[t].checked;
    result.skipped += outcomes[t].skipped;
  }
  if (stop < trials) {
    const Case c = make_case(axiom, config, Sampler::derive(config.seed, stop));
    AxiomVerdict found = evaluate(rule, axiom, c, config.reading);
    found = shrink(rule, axiom, c, std::move(found), config.reading);
    result.status = VerdictStatus::Violated;
    result.witness = std::move(found.witness);
  }
  return result;
}

}  // namespace deepvote
