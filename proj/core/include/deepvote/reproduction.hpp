#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deepvote/report.hpp"

namespace deepvote {

/// Result of running one rule-equivalence suite on seeded random profiles.
struct EquivalenceOutcome {
  std::string name;
  std::size_t trials = 0;
  std::size_t mismatches = 0;
  std::optional<Profile> first_mismatch;

  bool passed() const noexcept { return mismatches == 0; }
};

struct EquivalenceConfig {
  std::size_t trials = 500;
  std::uint64_t seed = 7;
  std::size_t min_m = 2;
  std::size_t max_m = 5;
  std::size_t min_n = 3;
  std::size_t max_n = 11;
};

/// Kemeny optimal orders == Kendall consensus deepest set.
EquivalenceOutcome kemeny_equivalence(const EquivalenceConfig& config);
/// Borda winners == Spearman-rho barycenter winners == continuous L2 winners.
EquivalenceOutcome borda_equivalence(const EquivalenceConfig& config);
/// Plurality winners == top-weighted Hamming consensus winners.
EquivalenceOutcome plurality_equivalence(const EquivalenceConfig& config);
/// Antiplurality winners == candidates placed last by the bottom-weighted
/// Hamming consensus permutations.
EquivalenceOutcome antiplurality_equivalence(const EquivalenceConfig& config);
/// Bucklin winners are contained in the continuous L1 winners.
EquivalenceOutcome bucklin_containment(const EquivalenceConfig& config);

struct PinnedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// One row of the distance/weights/p to classical rule correspondence.
struct CorrespondenceRow {
  std::string distance;
  std::string weights;
  std::string p;
  std::string rule;
  EquivalenceOutcome evidence;
};

/// One cell of the axiom status grid. `expected` uses the vocabulary
/// "✓", "N", "." with an optional "for p=1" / "only for p=1" qualifier.
struct AxiomCell {
  std::string row;
  std::string axiom;
  std::string expected;
  std::string observed;
  std::string evidence;
  /// Unresolved cell: reported with its sampled status, never as proven.
  bool open = false;

  bool matches() const { return open || observed == expected; }
};

struct ReproductionOptions {
  std::size_t equivalence_trials = 100;
  std::size_t axiom_trials = 150;
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

struct Reproduction {
  std::vector<PinnedCheck> pinned;
  std::vector<CorrespondenceRow> rules;
  std::vector<AxiomCell> axioms;

  bool passed() const;
  Report report() const;
};

/// Replays every reference profile, the equivalence suites and the axiom grid.
Reproduction reproduce(const ReproductionOptions& options = {});

}  // namespace deepvote
