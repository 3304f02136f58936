#include "deepvote/reproduction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "deepvote/axioms.hpp"
#include "deepvote/classical.hpp"
#include "deepvote/continuous.hpp"
#include "deepvote/reference_profiles.hpp"
#include "deepvote/sampling.hpp"

namespace deepvote {

namespace {

const std::string kHolds = "✓";

Profile random_profile(const EquivalenceConfig& config, std::size_t trial) {
  Sampler rng(Sampler::derive(config.seed, trial));
  const std::size_t m = rng.between(config.min_m, config.max_m);
  const std::size_t n = rng.between(config.min_n, config.max_n);
  return rng.profile(m, n);
}

EquivalenceOutcome run_suite(std::string name, const EquivalenceConfig& config,
                             const std::function<bool(const Profile&)>& agrees) {
  EquivalenceOutcome out;
  out.name = std::move(name);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const Profile profile = random_profile(config, t);
    ++out.trials;
    if (!agrees(profile)) {
      ++out.mismatches;
      if (!out.first_mismatch) out.first_mismatch = profile;
    }
  }
  return out;
}

DeepestResult deepest(const Profile& profile, const DistanceSpec& spec, double p) {
  return deepest_set(profile, FrechetParams{spec, p}, rule_search_options());
}

std::vector<Candidate> last_ranked(const std::vector<Ranking>& rankings) {
  std::vector<Candidate> out;
  for (const auto& sigma : rankings) out.push_back(sigma.candidate_at(static_cast<Rank>(sigma.size())));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

EquivalenceOutcome kemeny_equivalence(const EquivalenceConfig& config) {
  return run_suite("kemeny = kendall p=1", config, [](const Profile& f) {
    const auto k = kemeny(f);
    const auto d = deepest(f, DistanceSpec::kendall(), 1.0);
    return k.optimal_orders == d.deepest_set && k.winner_set == d.winner_set;
  });
}

EquivalenceOutcome borda_equivalence(const EquivalenceConfig& config) {
  return run_suite("borda = spearman-rho p=2 = continuous L2", config, [](const Profile& f) {
    const auto b = borda(f).winner_set;
    return b == deepest(f, DistanceSpec::spearman_rho(), 2.0).winner_set &&
           b == continuous_winner_set(l2_deepest(f));
  });
}

EquivalenceOutcome plurality_equivalence(const EquivalenceConfig& config) {
  return run_suite("plurality = top-weighted hamming p=1", config, [](const Profile& f) {
    const auto spec = DistanceSpec::weighted_hamming(WeightMatrix::plurality(f.candidates()));
    return plurality(f).winner_set == deepest(f, spec, 1.0).winner_set;
  });
}

EquivalenceOutcome antiplurality_equivalence(const EquivalenceConfig& config) {
  return run_suite("antiplurality = last place of bottom-weighted hamming p=1", config,
                   [](const Profile& f) {
                     const auto spec =
                         DistanceSpec::weighted_hamming(WeightMatrix::antiplurality(f.candidates()));
                     return antiplurality(f).winner_set ==
                            last_ranked(deepest(f, spec, 1.0).deepest_set);
                   });
}

EquivalenceOutcome bucklin_containment(const EquivalenceConfig& config) {
  return run_suite("bucklin within continuous L1", config, [](const Profile& f) {
    const auto b = bucklin(f).winner_set;
    const auto box = continuous_winner_set(l1_deepest_box(f));
    return std::includes(box.begin(), box.end(), b.begin(), b.end());
  });
}

// ---------------------------------------------------------------- pinned replays

namespace {

class PinnedRecorder {
 public:
  void expect(std::string name, bool ok, std::string detail) {
    checks_.push_back({std::move(name), ok, std::move(detail)});
  }
  std::vector<PinnedCheck> take() { return std::move(checks_); }

 private:
  std::vector<PinnedCheck> checks_;
};

std::string describe(const std::vector<Candidate>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? ",c" : "c") + std::to_string(set[i] + 1);
  return out + "}";
}

std::string describe(const std::vector<Ranking>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    out += i ? ",(" : "(";
    for (std::size_t c = 0; c < set[i].size(); ++c) out += (c ? "," : "") + std::to_string(set[i][c]);
    out += ")";
  }
  return out + "}";
}

std::optional<std::int64_t> sum_at(const Profile& profile, const DistanceSpec& spec, double p,
                                   const Ranking& sigma) {
  return frechet_functional(sigma, profile, FrechetParams{spec, p}).exact_sum;
}

std::string q_name(double q) { return std::isinf(q) ? "inf" : format_number(q); }

void replay_footrule_vs_bucklin(PinnedRecorder& rec) {
  const auto doc = reference::footrule_vs_bucklin();
  const auto b = bucklin(doc.profile);
  rec.expect("footrule_vs_bucklin: bucklin", b.winner_set == std::vector<Candidate>{1} &&
                                                 b.scores == std::vector<double>{3, 2, 3, 4},
             "winners " + describe(b.winner_set));
  for (double p : {1.0, 2.0}) {
    const auto r = deepest(doc.profile, DistanceSpec::footrule(), p);
    rec.expect("footrule_vs_bucklin: footrule p=" + format_number(p),
               r.deepest_set == std::vector<Ranking>{Ranking{1, 2, 3, 4}} && r.unique_winner &&
                   r.winner_set.front() == 0,
               "deepest " + describe(r.deepest_set));
  }
}

void replay_kendall_power_flip(PinnedRecorder& rec) {
  const auto doc = reference::kendall_power_flip();
  const Ranking a{1, 2, 3}, b{2, 1, 3};
  const auto spec = DistanceSpec::kendall();
  const std::pair<double, std::array<std::int64_t, 3>> cases[] = {{1.0, {4, 5, 0}},
                                                                    {2.0, {10, 7, 1}}};
  for (const auto& [p, want] : cases) {
    const auto r = deepest(doc.profile, spec, p);
    const auto sa = sum_at(doc.profile, spec, p, a), sb = sum_at(doc.profile, spec, p, b);
    const Candidate winner = static_cast<Candidate>(want[2]);
    rec.expect("kendall_power_flip: kendall p=" + format_number(p),
               r.winner_set == std::vector<Candidate>{winner} && sa == want[0] && sb == want[1],
               "winners " + describe(r.winner_set) + ", sums " +
                   (sa ? std::to_string(*sa) : "?") + " and " + (sb ? std::to_string(*sb) : "?"));
  }
}

void replay_condorcet_overruled(PinnedRecorder& rec) {
  const auto doc = reference::condorcet_overruled();
  const auto cw = condorcet_winner(doc.profile);
  rec.expect("condorcet_overruled: condorcet winner", cw == Candidate{0},
             cw ? "c" + std::to_string(*cw + 1) : "none");
  const Ranking challenger{2, 1, 3};
  const std::vector<Candidate> c2{1};
  for (double p : {1.0, 2.0}) {
    const auto h = deepest(doc.profile, DistanceSpec::hamming(), p);
    const bool sum_ok = p != 1.0 || sum_at(doc.profile, DistanceSpec::hamming(), p, challenger) == 10;
    rec.expect("condorcet_overruled: hamming p=" + format_number(p), h.winner_set == c2 && sum_ok,
               "winners " + describe(h.winner_set));
    const auto c = deepest(doc.profile, DistanceSpec::cayley(), p);
    rec.expect("condorcet_overruled: cayley p=" + format_number(p),
               c.winner_set == c2 && c.u_min_sum == 5,
               "winners " + describe(c.winner_set) + ", sum " +
                   (c.u_min_sum ? std::to_string(*c.u_min_sum) : "?"));
  }
  for (double q : {1.0, 2.0, 3.0}) {
    const auto r = deepest(doc.profile, DistanceSpec::minkowski(q), 1.0);
    bool ok = r.winner_set == c2;
    std::string detail = "winners " + describe(r.winner_set);
    if (q == 1.0) {
      const auto s1 = sum_at(doc.profile, DistanceSpec::footrule(), 1.0, Ranking{1, 2, 3});
      const auto s2 = sum_at(doc.profile, DistanceSpec::footrule(), 1.0, challenger);
      ok = ok && s1 == 16 && s2 == 14;
      detail += ", sums " + (s1 ? std::to_string(*s1) : "?") + " vs " +
                (s2 ? std::to_string(*s2) : "?");
    }
    rec.expect("condorcet_overruled: minkowski q=" + q_name(q) + " p=1", ok, detail);
  }
}

void replay_chebyshev_tie(PinnedRecorder& rec) {
  const auto doc = reference::chebyshev_tie();
  const auto spec = DistanceSpec::minkowski(kInfiniteOrder);
  const std::vector<Ranking> three{Ranking{1, 4, 6, 3, 5, 2}, Ranking{1, 5, 6, 3, 4, 2},
                                   Ranking{2, 5, 6, 3, 4, 1}};
  const std::vector<Ranking> two{three[1], three[2]};
  for (double p : {1.0, 2.0, 3.0}) {
    const auto r = deepest(doc.profile, spec, p);
    rec.expect("chebyshev_tie: q=inf p=" + format_number(p),
               r.deepest_set == (p == 1.0 ? three : two) &&
                   r.winner_set == std::vector<Candidate>{0, 5} && !r.unique_winner,
               "deepest " + describe(r.deepest_set));
  }
}

void replay_loser_added(PinnedRecorder& rec) {
  const auto before = reference::two_candidate_majority();
  const auto after = reference::loser_added();
  const Ranking flipped{3, 1, 2};
  std::vector<std::pair<std::string, DistanceSpec>> specs;
  for (double q : {1.0, 2.0, 3.0, kInfiniteOrder}) {
    specs.emplace_back("minkowski q=" + q_name(q), DistanceSpec::minkowski(q));
  }
  specs.emplace_back("hamming", DistanceSpec::hamming());
  specs.emplace_back("kendall", DistanceSpec::kendall());
  specs.emplace_back("cayley", DistanceSpec::cayley());
  for (const auto& [name, spec] : specs) {
    const auto r = deepest(before.profile, spec, 1.0);
    rec.expect("two_candidate_majority: " + name + " p=1",
               r.winner_set == std::vector<Candidate>{0}, "winners " + describe(r.winner_set));
  }
  for (const auto& [name, spec] : specs) {
    const auto r = deepest(after.profile, spec, 1.0);
    // Cayley ties several orders here; c1 stops being the sole winner.
    const bool ok = spec.kind() == DistanceKind::Cayley
                        ? !r.unique_winner && r.winner_set != std::vector<Candidate>{0}
                        : r.deepest_set == std::vector<Ranking>{flipped} &&
                              r.winner_set == std::vector<Candidate>{1};
    rec.expect("loser_added: " + name + " p=1", ok,
               "deepest " + describe(r.deepest_set) + ", winners " + describe(r.winner_set));
  }
}

void replay_median_box(PinnedRecorder& rec) {
  const auto doc = reference::median_box();
  const auto box = l1_deepest_box(doc.profile);
  const auto winners = continuous_winner_set(box);
  rec.expect("median_box: L1 box",
             box.lower == std::vector<double>{1, 1, 2} && box.upper == std::vector<double>{2, 3, 3} &&
                 winners == std::vector<Candidate>{0, 1, 2},
             "winners " + describe(winners));
  const auto b = bucklin(doc.profile).winner_set;
  rec.expect("median_box: bucklin within box", std::includes(winners.begin(), winners.end(),
                                                             b.begin(), b.end()),
             "bucklin " + describe(b));
}

void replay_monotonicity(PinnedRecorder& rec) {
  const auto before = reference::hamming_monotonicity_before();
  const auto after = reference::hamming_monotonicity_after();
  const auto r0 = deepest(before.profile, DistanceSpec::hamming(), 1.0);
  const auto r1 = deepest(after.profile, DistanceSpec::hamming(), 1.0);
  rec.expect("hamming_monotonicity: before", r0.winner_set == std::vector<Candidate>{0},
             "winners " + describe(r0.winner_set));
  rec.expect("hamming_monotonicity: after", r1.winner_set == std::vector<Candidate>{3},
             "winners " + describe(r1.winner_set));
}

// ---------------------------------------------------------------- axiom grid

struct RuleAt {
  VotingRule rule;
  double p;
};

struct GridRow {
  std::string name;
  std::vector<RuleAt> rules;
  std::function<DistanceSpec()> base;  // p=1 witness distance
};

struct Sampled {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first;
};

Sampled sample(const std::vector<RuleAt>& rules, Axiom axiom, bool p1_only,
               const ReproductionOptions& options, std::uint64_t salt) {
  Sampled out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (p1_only && rules[i].p != 1.0) continue;
    CounterexampleSearch cfg;
    cfg.trials = options.axiom_trials;
    cfg.seed = Sampler::derive(options.seed, salt * 64 + i);
    cfg.threads = options.threads;
    const auto v = search_counterexample(rules[i].rule, axiom, cfg);
    out.checked += v.trials;
    if (v.violated()) {
      ++out.violations;
      if (out.first.empty()) out.first = rules[i].rule.id;
    }
  }
  return out;
}

std::string sampled_evidence(const Sampled& s) {
  if (s.violations == 0) {
    return "sampled: no violation in " + std::to_string(s.checked) + " checks";
  }
  return "sampled: violation found for " + s.first;
}

bool witnessed(const VotingRule& rule, const AxiomVerdict& v) {
  return v.violated() && replay_witness(rule, v);
}

}  // namespace

Reproduction reproduce(const ReproductionOptions& options) {
  Reproduction out;

  PinnedRecorder rec;
  replay_footrule_vs_bucklin(rec);
  replay_kendall_power_flip(rec);
  replay_condorcet_overruled(rec);
  replay_chebyshev_tie(rec);
  replay_loser_added(rec);
  replay_median_box(rec);
  replay_monotonicity(rec);
  out.pinned = rec.take();

  EquivalenceConfig eq;
  eq.trials = options.equivalence_trials;
  eq.seed = options.seed;
  out.rules.push_back({"Kendall", "none", "1", "Kemeny", kemeny_equivalence(eq)});
  out.rules.push_back({"Spearman rho", "none", "2", "Borda", borda_equivalence(eq)});
  out.rules.push_back({"Hamming", "W(1,(1))", "1", "Plurality", plurality_equivalence(eq)});
  out.rules.push_back({"Hamming", "W(-1,(m))", "1", "Antiplurality", antiplurality_equivalence(eq)});
  out.rules.push_back({"continuous L1", "none", "-", "Bucklin (contained)", bucklin_containment(eq)});

  // Axiom grid.
  auto rules_for = [](const std::vector<DistanceSpec>& specs) {
    std::vector<RuleAt> rules;
    for (const auto& spec : specs) {
      for (double p : {1.0, 2.0}) rules.push_back({deepest_rule(spec, p), p});
    }
    return rules;
  };
  const std::vector<GridRow> rows{
      {"Hamming", rules_for({DistanceSpec::hamming()}), [] { return DistanceSpec::hamming(); }},
      {"Kendall", rules_for({DistanceSpec::kendall()}), [] { return DistanceSpec::kendall(); }},
      {"Cayley", rules_for({DistanceSpec::cayley()}), [] { return DistanceSpec::cayley(); }},
      {"Minkowski q=1", rules_for({DistanceSpec::footrule()}),
       [] { return DistanceSpec::footrule(); }},
      {"Minkowski q>1", rules_for({DistanceSpec::minkowski(2.0), DistanceSpec::minkowski(3.0)}),
       [] { return DistanceSpec::minkowski(2.0); }},
  };

  const auto mono_before = reference::hamming_monotonicity_before();
  const auto mono_after = reference::hamming_monotonicity_after();
  const auto iil_base = reference::two_candidate_majority();
  const auto iil_ext = reference::loser_added();
  const auto cw_profile = reference::condorcet_overruled();
  const auto kendall_flip = reference::kendall_power_flip();

  std::uint64_t salt = 0;
  auto sampled_cell = [&](const GridRow& row, Axiom axiom, const std::string& expected,
                          bool p1_only) {
    const auto s = sample(row.rules, axiom, p1_only, options, ++salt);
    AxiomCell cell{row.name, std::string(to_string(axiom)), expected, "", sampled_evidence(s)};
    if (expected == ".") {
      cell.open = true;
      cell.observed = ".";
    } else {
      cell.observed = s.violations == 0 ? expected : "N";
    }
    return cell;
  };

  // Witness for the p=1 member of every distance in the row.
  auto witness_cell = [&](const GridRow& row, Axiom axiom, const std::string& expected,
                          const std::function<AxiomVerdict(const VotingRule&)>& check,
                          const std::string& where) {
    std::vector<std::string> confirmed;
    bool all = true;
    for (const auto& r : row.rules) {
      if (r.p != 1.0) continue;
      const auto v = check(r.rule);
      if (witnessed(r.rule, v)) {
        confirmed.push_back(r.rule.id);
      } else {
        all = false;
      }
    }
    std::string evidence = "witness " + where + ":";
    for (const auto& id : confirmed) evidence += " " + id;
    return AxiomCell{row.name, std::string(to_string(axiom)), expected,
                     all && !confirmed.empty() ? expected : "not reproduced", evidence};
  };

  auto iil_check = [&](const VotingRule& rule) {
    if (rule.id.find("cayley") != std::string::npos) {
      return check_losers_addition(rule, iil_base.profile, iil_ext.profile, 2);
    }
    return check_independence_losers_at(rule, iil_ext.profile, 2);
  };
  auto cw_check = [&](const VotingRule& rule) {
    return check_condorcet_winner_property(rule, cw_profile.profile);
  };

  for (const auto& row : rows) {
    out.axioms.push_back(sampled_cell(row, Axiom::Neutrality, kHolds, false));
    out.axioms.push_back(sampled_cell(row, Axiom::Anonymity, kHolds, false));
    out.axioms.push_back(sampled_cell(row, Axiom::Unanimity,
                                      row.name == "Cayley" ? "." : kHolds, false));

    if (row.name == "Hamming") {
      out.axioms.push_back(witness_cell(
          row, Axiom::Monotonicity, "N for p=1",
          [&](const VotingRule& rule) {
            auto v = check_monotonicity_at(rule, mono_before.profile, 4);
            if (v.witness && !(v.witness->transformed == mono_after.profile)) v.status = {};
            return v;
          },
          "hamming_monotonicity"));
    } else if (row.name == "Minkowski q=1") {
      out.axioms.push_back(sampled_cell(row, Axiom::Monotonicity, kHolds + " for p=1", true));
    } else {
      out.axioms.push_back(sampled_cell(row, Axiom::Monotonicity, ".", false));
    }

    out.axioms.push_back(witness_cell(row, Axiom::IndependenceToLosers,
                                      row.name == "Hamming" ? "N for p=1" : "N", iil_check,
                                      "loser_added"));

    if (row.name == "Kendall") {
      auto cell = sampled_cell(row, Axiom::CondorcetWinner, kHolds + " only for p=1", true);
      const auto p2 = row.rules[1].rule;
      const auto v = check_condorcet_winner_property(p2, kendall_flip.profile);
      const bool broken_at_p2 = witnessed(p2, v);
      cell.evidence += broken_at_p2 ? "; witness kendall_power_flip: " + p2.id
                                    : "; p=2 witness not reproduced";
      if (!broken_at_p2) cell.observed = "not reproduced";
      out.axioms.push_back(std::move(cell));
    } else {
      const bool per_p = row.name.rfind("Minkowski", 0) == 0;
      out.axioms.push_back(witness_cell(row, Axiom::CondorcetWinner, per_p ? "N for p=1" : "N",
                                        cw_check, "condorcet_overruled"));
    }
  }
  return out;
}

bool Reproduction::passed() const {
  return std::all_of(pinned.begin(), pinned.end(), [](const auto& c) { return c.passed; }) &&
         std::all_of(rules.begin(), rules.end(), [](const auto& r) { return r.evidence.passed(); }) &&
         std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.matches(); });
}

Report Reproduction::report() const {
  Report report("reproduce-paper");

  Json pinned_json = Json::array();
  std::vector<std::vector<std::string>> pinned_rows{{"check", "result", "detail"}};
  for (const auto& c : pinned) {
    pinned_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    pinned_rows.push_back({c.name, c.passed ? "pass" : "FAIL", c.detail});
  }
  report.add({"pinned", {{"type", "pinned"}, {"checks", pinned_json}},
              "reference profiles\n" + render_table(pinned_rows)});

  Json rule_json = Json::array();
  std::vector<std::vector<std::string>> rule_rows{
      {"distance", "weights", "p", "rule", "trials", "mismatches", "status"}};
  for (const auto& r : rules) {
    Json row{{"distance", r.distance},       {"weights", r.weights},
             {"p", r.p},                     {"rule", r.rule},
             {"suite", r.evidence.name},     {"trials", r.evidence.trials},
             {"mismatches", r.evidence.mismatches},
             {"confirmed", r.evidence.passed()}};
    if (r.evidence.first_mismatch) row["first_mismatch"] = to_json(*r.evidence.first_mismatch);
    rule_json.push_back(std::move(row));
    rule_rows.push_back({r.distance, r.weights, r.p, r.rule, std::to_string(r.evidence.trials),
                         std::to_string(r.evidence.mismatches),
                         r.evidence.passed() ? "confirmed" : "MISMATCH"});
  }
  report.add({"rule-correspondence", {{"type", "rule-correspondence"}, {"rows", rule_json}},
              "rule correspondence\n" + render_table(rule_rows)});

  Json axiom_json = Json::array();
  std::vector<std::string> columns;
  std::vector<std::string> row_names;
  for (const auto& a : axioms) {
    if (std::find(columns.begin(), columns.end(), a.axiom) == columns.end()) columns.push_back(a.axiom);
    if (std::find(row_names.begin(), row_names.end(), a.row) == row_names.end()) row_names.push_back(a.row);
    axiom_json.push_back({{"row", a.row},
                          {"axiom", a.axiom},
                          {"expected", a.expected},
                          {"observed", a.observed},
                          {"evidence", a.evidence},
                          {"open", a.open},
                          {"matches", a.matches()}});
  }
  std::vector<std::vector<std::string>> grid{{"distance"}};
  grid[0].insert(grid[0].end(), columns.begin(), columns.end());
  for (const auto& name : row_names) {
    std::vector<std::string> line{name};
    for (const auto& col : columns) {
      std::string cell;
      for (const auto& a : axioms) {
        if (a.row != name || a.axiom != col) continue;
        cell = a.observed;
        if (a.open) cell += a.evidence.find("violation found") != std::string::npos ? " (open, violated)"
                                                                                     : " (open)";
        if (!a.matches()) cell += " !! expected " + a.expected;
      }
      line.push_back(cell);
    }
    grid.push_back(std::move(line));
  }
  std::ostringstream evidence;
  for (const auto& a : axioms) evidence << "  " << a.row << " / " << a.axiom << ": " << a.evidence << '\n';
  report.add({"axiom-status", {{"type", "axiom-status"}, {"cells", axiom_json}},
              "axiom status\n" + render_table(grid) + "evidence\n" + evidence.str()});

  const auto count = [](const auto& v, auto pred) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), pred));
  };
  Json summary{
      {"pinned_failed", count(pinned, [](const auto& c) { return !c.passed; })},
      {"rules_mismatched", count(rules, [](const auto& r) { return !r.evidence.passed(); })},
      {"axiom_cells_mismatched", count(axioms, [](const auto& a) { return !a.matches(); })},
      {"axiom_cells_open", count(axioms, [](const auto& a) { return a.open; })},
      {"passed", passed()}};
  report.set("summary", summary);
  report.set("passed", passed());
  std::ostringstream text;
  text << "summary: " << (passed() ? "PASS" : "FAIL") << " (" << summary["pinned_failed"].get<std::size_t>()
       << " pinned failures, " << summary["rules_mismatched"].get<std::size_t>()
       << " rule mismatches, " << summary["axiom_cells_mismatched"].get<std::size_t>()
       << " axiom cell mismatches, " << summary["axiom_cells_open"].get<std::size_t>()
       << " open cells)\n";
  report.add({"summary", {{"type", "summary"}, {"passed", passed()}}, text.str()});
  return report;
}

}  // namespace deepvote
