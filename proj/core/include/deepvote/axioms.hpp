#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deepvote/frechet.hpp"
#include "deepvote/ranking.hpp"

namespace deepvote {

/// A voting rule seen as a black box: profile in, winner set out.
struct VotingRule {
  std::string id;
  std::function<std::vector<Candidate>(const Profile&)> winners;
};

/// Search options suited to rules evaluated many times from worker threads.
SearchOptions rule_search_options(std::size_t max_m = kDefaultEnumerationCap);

/// p-Frechet deepest voting with a fixed distance.
VotingRule deepest_rule(const DistanceSpec& spec, double p,
                        SearchOptions options = rule_search_options());

/// Deepest voting whose distance depends on m (weight-matrix families).
VotingRule deepest_rule(std::string id, std::function<DistanceSpec(std::size_t)> family, double p,
                        SearchOptions options = rule_search_options());

/// "borda", "bucklin", "plurality", "antiplurality", "kemeny".
VotingRule classical_rule(std::string_view name);

enum class Axiom {
  Neutrality,
  Anonymity,
  Universality,
  Unanimity,
  Monotonicity,
  IndependenceToLosers,
  CondorcetWinner,
  CondorcetLoser,
};

std::string_view to_string(Axiom axiom);
/// Accepts the to_string spelling or kebab-case ("independence-to-losers").
Axiom parse_axiom(std::string_view text);

enum class VerdictStatus { HoldsOnSample, Violated };

std::string_view to_string(VerdictStatus status);

/// How a monotonicity swap is judged when winner sets may grow through ties.
enum class MonotonicityReading {
  /// The former unique winner must still belong to the new winner set.
  WinnerRetained,
  /// The new winner set must equal the former singleton.
  WinnerSetUnchanged,
};

/// A self-contained violation record. `parameters` depend on the axiom:
/// Neutrality: the relabeling (new_to_old); Anonymity: the voter order;
/// Monotonicity: {voter, reading}; IndependenceToLosers: {removed candidate}
/// or {added candidate, 1} for the addition direction; otherwise empty.
struct Witness {
  Profile original;
  Profile transformed;
  std::vector<Candidate> expected;
  std::vector<Candidate> observed;
  std::vector<std::size_t> parameters;
  std::string description;
};

struct AxiomVerdict {
  Axiom axiom = Axiom::Neutrality;
  std::string rule_id;
  VerdictStatus status = VerdictStatus::HoldsOnSample;
  std::optional<Witness> witness;
  /// Checks whose precondition held.
  std::size_t trials = 0;
  /// Checks whose precondition failed (no Condorcet winner, no unique winner, ...).
  std::size_t skipped = 0;
  std::uint64_t seed = 0;

  bool violated() const noexcept { return status == VerdictStatus::Violated; }
};

AxiomVerdict check_neutrality(const VotingRule& rule, const Profile& profile,
                              std::span<const Candidate> new_to_old);
AxiomVerdict check_anonymity(const VotingRule& rule, const Profile& profile,
                             std::span<const std::size_t> voter_order);
AxiomVerdict check_universality(const VotingRule& rule, const Profile& profile);
/// Skipped unless some candidate is ranked first by every voter.
AxiomVerdict check_unanimity(const VotingRule& rule, const Profile& profile);
/// Adjacent upgrade of the unique winner for one voter.
AxiomVerdict check_monotonicity_at(const VotingRule& rule, const Profile& profile,
                                   std::size_t voter,
                                   MonotonicityReading reading = MonotonicityReading::WinnerRetained);
/// Every eligible voter in turn. Throws Error{NoEligibleVoter} when the unique
/// winner is ranked first by all voters.
AxiomVerdict check_monotonicity(const VotingRule& rule, const Profile& profile,
                                MonotonicityReading reading = MonotonicityReading::WinnerRetained);
/// Removal of one non-winning candidate.
AxiomVerdict check_independence_losers_at(const VotingRule& rule, const Profile& profile,
                                          Candidate removed);
/// Removal of each non-winning candidate (m >= 3, unique winner).
AxiomVerdict check_independence_losers(const VotingRule& rule, const Profile& profile);
/// Addition direction: `base` is `extended` with candidate `added` removed.
AxiomVerdict check_losers_addition(const VotingRule& rule, const Profile& base,
                                   const Profile& extended, Candidate added);
AxiomVerdict check_condorcet_winner_property(const VotingRule& rule, const Profile& profile);
AxiomVerdict check_condorcet_loser_property(const VotingRule& rule, const Profile& profile);

/// Re-runs the check recorded in a violated verdict; true iff it still fails
/// and reproduces the recorded transformed profile and observed winners.
bool replay_witness(const VotingRule& rule, const AxiomVerdict& verdict);

struct CounterexampleSearch {
  std::size_t min_m = 2;
  std::size_t max_m = 5;
  std::size_t min_n = 3;
  std::size_t max_n = 11;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::size_t cap = kDefaultEnumerationCap;
  MonotonicityReading reading = MonotonicityReading::WinnerRetained;
};

/// Seeded random falsification. Unanimity trials plant a common top;
/// Independence-to-Losers trials use m >= 3. The first violating trial (by
/// index) is shrunk greedily: highest-index voter first, then highest-index
/// candidate, while the violation persists. Deterministic in (rule, axiom,
/// seed, bounds) whatever the thread count.
AxiomVerdict search_counterexample(const VotingRule& rule, Axiom axiom,
                                   const CounterexampleSearch& config);

}  // namespace deepvote
