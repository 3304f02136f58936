// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: deepvote_acceptance [path-to-deepvote-cli]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "deepvote/axioms.hpp"
#include "deepvote/classical.hpp"
#include "deepvote/continuous.hpp"
#include "deepvote/frechet.hpp"
#include "deepvote/reference_profiles.hpp"
#include "deepvote/report.hpp"
#include "deepvote/reproduction.hpp"
#include "oracles.hpp"

using namespace deepvote;

namespace {

using Candidates = std::vector<Candidate>;

// Collects failed expectations for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }
  std::string note;

 private:
  std::vector<std::string> failures_;
};

DeepestResult deep(const Profile& f, const DistanceSpec& spec, double p) {
  return deepest_set(f, FrechetParams{spec, p});
}

std::optional<std::int64_t> sum_at(const Profile& f, const DistanceSpec& spec, double p,
                                   const Ranking& sigma) {
  return frechet_functional(sigma, f, FrechetParams{spec, p}).exact_sum;
}

std::string q_name(double q) { return std::isinf(q) ? "inf" : format_number(q); }

void footrule_against_bucklin(Criterion& c) {
  const auto f = reference::footrule_vs_bucklin().profile;
  const auto b = bucklin(f);
  c.expect(b.winner_set == Candidates{1}, "bucklin winner is not c2");
  c.expect(b.scores == std::vector<double>{3, 2, 3, 4}, "bucklin medians differ from (3,2,3,4)");
  for (double p : {1.0, 2.0}) {
    const auto r = deep(f, DistanceSpec::footrule(), p);
    c.expect(r.deepest_set == std::vector<Ranking>{Ranking{1, 2, 3, 4}},
             "footrule p=" + format_number(p) + " deepest set is not {(1,2,3,4)}");
    c.expect(r.winner_set == Candidates{0}, "footrule p=" + format_number(p) + " winner is not c1");
  }
}

void kendall_power(Criterion& c) {
  const auto f = reference::kendall_power_flip().profile;
  const auto k = DistanceSpec::kendall();
  const Ranking a{1, 2, 3}, b{2, 1, 3};
  c.expect(deep(f, k, 1).winner_set == Candidates{0}, "kendall p=1 winner is not c1");
  c.expect(sum_at(f, k, 1, a) == 4 && sum_at(f, k, 1, b) == 5, "kendall p=1 sums are not 4 and 5");
  c.expect(deep(f, k, 2).winner_set == Candidates{1}, "kendall p=2 winner is not c2");
  c.expect(sum_at(f, k, 2, a) == 10 && sum_at(f, k, 2, b) == 7, "kendall p=2 sums are not 10 and 7");
}

void condorcet_overruled(Criterion& c) {
  const auto f = reference::condorcet_overruled().profile;
  const Ranking challenger{2, 1, 3};
  c.expect(condorcet_winner(f) == Candidate{0}, "condorcet winner is not c1");
  c.expect(oracle::condorcet_winner(f) == 0, "oracle condorcet winner is not c1");
  for (double p : {1.0, 2.0}) {
    c.expect(deep(f, DistanceSpec::hamming(), p).winner_set == Candidates{1},
             "hamming p=" + format_number(p) + " winner is not c2");
    const auto cay = deep(f, DistanceSpec::cayley(), p);
    c.expect(cay.winner_set == Candidates{1}, "cayley p=" + format_number(p) + " winner is not c2");
    c.expect(cay.u_min_sum == 5 && sum_at(f, DistanceSpec::cayley(), p, challenger) == 5,
             "cayley p=" + format_number(p) + " sum is not 5");
  }
  c.expect(sum_at(f, DistanceSpec::hamming(), 1, challenger) == 10, "hamming p=1 sum is not 10");
  for (double q : {1.0, 2.0, 3.0}) {
    c.expect(deep(f, DistanceSpec::minkowski(q), 1).winner_set == Candidates{1},
             "minkowski q=" + q_name(q) + " winner is not c2");
  }
  c.expect(sum_at(f, DistanceSpec::footrule(), 1, Ranking{1, 2, 3}) == 16 &&
               sum_at(f, DistanceSpec::footrule(), 1, challenger) == 14,
           "footrule sums are not 16 and 14");
}

void chebyshev(Criterion& c) {
  const auto f = reference::chebyshev_tie().profile;
  const auto spec = DistanceSpec::minkowski(kInfiniteOrder);
  const std::vector<Ranking> three{Ranking{1, 4, 6, 3, 5, 2}, Ranking{1, 5, 6, 3, 4, 2},
                                   Ranking{2, 5, 6, 3, 4, 1}};
  const std::vector<Ranking> two{three[1], three[2]};
  for (double p : {1.0, 2.0, 3.0}) {
    const auto r = deep(f, spec, p);
    c.expect(r.deepest_set == (p == 1.0 ? three : two),
             "q=inf p=" + format_number(p) + " deepest set differs");
    c.expect(r.winner_set == Candidates{0, 5} && !r.unique_winner,
             "q=inf p=" + format_number(p) + " winners are not {c1,c6} (tied)");
  }
}

void monotonicity_replay(Criterion& c) {
  const auto before = reference::hamming_monotonicity_before();
  const auto after = reference::hamming_monotonicity_after();
  c.expect(promote_candidate(before.profile, 4, 0) == after.profile,
           "after-profile is not the A/C swap in voter 5");
  c.expect(deep(before.profile, DistanceSpec::hamming(), 1).winner_set == Candidates{0},
           "winner before is not A");
  c.expect(deep(after.profile, DistanceSpec::hamming(), 1).winner_set == Candidates{3},
           "winner after is not D");
}

void losers(Criterion& c) {
  const auto two = reference::two_candidate_majority().profile;
  const auto three = reference::loser_added().profile;
  const Ranking flipped{3, 1, 2};
  for (double q : {1.0, 2.0, 3.0, kInfiniteOrder}) {
    c.expect(deep(two, DistanceSpec::minkowski(q), 1).winner_set == Candidates{0},
             "two candidates, q=" + q_name(q) + ": winner is not c1");
  }
  std::vector<std::pair<std::string, DistanceSpec>> flips{
      {"q=1", DistanceSpec::minkowski(1)}, {"q=2", DistanceSpec::minkowski(2)},
      {"q=3", DistanceSpec::minkowski(3)}, {"hamming", DistanceSpec::hamming()}};
  for (const auto& [name, spec] : flips) {
    const auto r = deep(three, spec, 1);
    c.expect(deep(two, spec, 1).winner_set == Candidates{0}, name + ": two-candidate winner is not c1");
    c.expect(r.deepest_set == std::vector<Ranking>{flipped}, name + ": deepest is not (3,1,2)");
    c.expect(r.winner_set == Candidates{1}, name + ": winner is not c2");
  }
  const auto cay = deep(three, DistanceSpec::cayley(), 1);
  c.expect(deep(two, DistanceSpec::cayley(), 1).winner_set == Candidates{0},
           "cayley: two-candidate winner is not c1");
  c.expect(cay.winner_set != Candidates{0} && !cay.unique_winner &&
               std::find(cay.winner_set.begin(), cay.winner_set.end(), 1) != cay.winner_set.end(),
           "cayley: c1 still sole winner after adding c3");
  c.note = "cayley flips to a tie {c1,c2,c3}";
}

void box(Criterion& c) {
  const auto f = reference::median_box().profile;
  const auto b = l1_deepest_box(f);
  c.expect(b.lower == std::vector<double>{1, 1, 2} && b.upper == std::vector<double>{2, 3, 3},
           "box is not [1,2]x[1,3]x[2,3]");
  c.expect(continuous_winner_set(b) == Candidates{0, 1, 2}, "winner set is not {c1,c2,c3}");
}

void equivalences(Criterion& c) {
  EquivalenceConfig cfg;
  cfg.trials = 500;
  cfg.seed = 8;
  std::ostringstream note;
  for (const auto& o : {kemeny_equivalence(cfg), borda_equivalence(cfg), plurality_equivalence(cfg),
                        antiplurality_equivalence(cfg), bucklin_containment(cfg)}) {
    c.expect(o.trials == 500 && o.passed(),
             o.name + ": " + std::to_string(o.mismatches) + " mismatches");
    note << (note.tellp() ? ", " : "") << o.mismatches;
  }
  c.note = "mismatches per suite: " + note.str();
}

void theorem_suites(Criterion& c) {
  std::vector<VotingRule> all_rules;
  for (double p : {1.0, 2.0}) {
    for (const auto& spec : {DistanceSpec::kendall(), DistanceSpec::hamming(), DistanceSpec::cayley(),
                             DistanceSpec::minkowski(1), DistanceSpec::minkowski(2),
                             DistanceSpec::minkowski(3), DistanceSpec::minkowski(kInfiniteOrder)}) {
      all_rules.push_back(deepest_rule(spec, p));
    }
    all_rules.push_back(deepest_rule("deepest[weighted-minkowski top-heavy q=1, p=" + format_number(p) + "]",
                                     [](std::size_t m) {
                                       return DistanceSpec::weighted_minkowski(1, WeightMatrix::top_heavy(m));
                                     },
                                     p));
  }
  all_rules.push_back(deepest_rule("deepest[weighted-hamming plurality, p=1]", [](std::size_t m) {
    return DistanceSpec::weighted_hamming(WeightMatrix::plurality(m));
  }, 1));
  all_rules.push_back(deepest_rule("deepest[weighted-hamming antiplurality, p=1]", [](std::size_t m) {
    return DistanceSpec::weighted_hamming(WeightMatrix::antiplurality(m));
  }, 1));
  all_rules.push_back(deepest_rule("deepest[weighted-minkowski plurality q=1, p=1]", [](std::size_t m) {
    return DistanceSpec::weighted_minkowski(1, WeightMatrix::plurality(m));
  }, 1));

  std::size_t suites = 0, checks = 0;
  std::uint64_t seed = 1000;
  auto run = [&](const VotingRule& rule, Axiom axiom) {
    CounterexampleSearch cfg;
    cfg.trials = 2000;
    cfg.seed = ++seed;
    const auto v = search_counterexample(rule, axiom, cfg);
    ++suites;
    checks += v.trials;
    c.expect(!v.violated(), std::string(to_string(axiom)) + " violated by " + rule.id);
  };
  for (const auto& rule : all_rules) {
    for (auto axiom : {Axiom::Neutrality, Axiom::Anonymity, Axiom::Universality}) run(rule, axiom);
  }
  for (double p : {1.0, 2.0}) {
    for (const auto& spec : {DistanceSpec::hamming(), DistanceSpec::kendall(), DistanceSpec::minkowski(1),
                             DistanceSpec::minkowski(2), DistanceSpec::minkowski(3)}) {
      run(deepest_rule(spec, p), Axiom::Unanimity);
    }
  }
  run(deepest_rule(DistanceSpec::kendall(), 1), Axiom::CondorcetWinner);
  run(deepest_rule(DistanceSpec::footrule(), 1), Axiom::Monotonicity);
  c.note = std::to_string(suites) + " suites, " + std::to_string(checks) + " checks";
}

void brute_force_oracle(Criterion& c) {
  struct Kind {
    std::string name;
    std::function<DistanceSpec(std::size_t)> spec;
    std::function<oracle::Distance(std::size_t)> d;
  };
  auto weights = [](WeightMatrix w) { return [w](int a, int b) { return w(a, b); }; };
  const std::vector<Kind> kinds{
      {"kendall", [](std::size_t) { return DistanceSpec::kendall(); },
       [](std::size_t) { return oracle::Distance(oracle::kendall); }},
      {"hamming", [](std::size_t) { return DistanceSpec::hamming(); },
       [](std::size_t) { return oracle::Distance(oracle::hamming); }},
      {"cayley", [](std::size_t) { return DistanceSpec::cayley(); },
       [](std::size_t) { return oracle::Distance(oracle::cayley); }},
      {"minkowski q=1", [](std::size_t) { return DistanceSpec::minkowski(1); },
       [](std::size_t) { return [](auto& a, auto& b) { return oracle::minkowski(a, b, 1); }; }},
      {"minkowski q=2", [](std::size_t) { return DistanceSpec::minkowski(2); },
       [](std::size_t) { return [](auto& a, auto& b) { return oracle::minkowski(a, b, 2); }; }},
      {"minkowski q=3", [](std::size_t) { return DistanceSpec::minkowski(3); },
       [](std::size_t) { return [](auto& a, auto& b) { return oracle::minkowski(a, b, 3); }; }},
      {"minkowski q=inf", [](std::size_t) { return DistanceSpec::minkowski(kInfiniteOrder); },
       [](std::size_t) {
         return [](auto& a, auto& b) { return oracle::minkowski(a, b, kInfiniteOrder); };
       }},
      {"weighted-hamming plurality",
       [](std::size_t m) { return DistanceSpec::weighted_hamming(WeightMatrix::plurality(m)); },
       [&](std::size_t m) {
         return [w = weights(WeightMatrix::plurality(m))](auto& a, auto& b) {
           return oracle::weighted_hamming(a, b, w);
         };
       }},
      {"weighted-hamming antiplurality",
       [](std::size_t m) { return DistanceSpec::weighted_hamming(WeightMatrix::antiplurality(m)); },
       [&](std::size_t m) {
         return [w = weights(WeightMatrix::antiplurality(m))](auto& a, auto& b) {
           return oracle::weighted_hamming(a, b, w);
         };
       }},
      {"weighted-hamming top-heavy",
       [](std::size_t m) { return DistanceSpec::weighted_hamming(WeightMatrix::top_heavy(m)); },
       [&](std::size_t m) {
         return [w = weights(WeightMatrix::top_heavy(m))](auto& a, auto& b) {
           return oracle::weighted_hamming(a, b, w);
         };
       }},
      {"weighted-minkowski top-heavy q=1",
       [](std::size_t m) { return DistanceSpec::weighted_minkowski(1, WeightMatrix::top_heavy(m)); },
       [&](std::size_t m) {
         return [w = weights(WeightMatrix::top_heavy(m))](auto& a, auto& b) {
           return oracle::weighted_minkowski(a, b, 1, w);
         };
       }},
      {"weighted-minkowski top-heavy q=2",
       [](std::size_t m) { return DistanceSpec::weighted_minkowski(2, WeightMatrix::top_heavy(m)); },
       [&](std::size_t m) {
         return [w = weights(WeightMatrix::top_heavy(m))](auto& a, auto& b) {
           return oracle::weighted_minkowski(a, b, 2, w);
         };
       }},
  };
  std::size_t compared = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto f = oracle::random_profile(Sampler::derive(77, t), 2, 4, 1, 11);
    const auto m = f.candidates();
    for (const auto& kind : kinds) {
      for (double p : {1.0, 2.0}) {
        const auto brute = oracle::brute_deepest(f, kind.d(m), p);
        const auto r = deep(f, kind.spec(m), p);
        ++compared;
        c.expect(oracle::as_ranks(r.deepest_set) == brute.argmin && r.winner_set == brute.winners,
                 kind.name + " p=" + format_number(p) + " differs on profile " + std::to_string(t));
      }
    }
  }
  c.note = std::to_string(compared) + " deepest sets compared";
}

struct Command {
  int exit_code = -1;
  std::string out;
};

Command run_command(const std::string& cmd) {
  Command r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void reproduce_command(Criterion& c, const std::string& cli) {
  Json doc;
  if (cli.empty()) {
    const auto r = reproduce();
    c.expect(r.passed(), "reproduction did not pass");
    doc = r.report().json();
  } else {
    const auto r = run_command("'" + cli + "' reproduce-paper --format json");
    c.expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    try {
      doc = Json::parse(r.out);
    } catch (const std::exception& e) {
      c.expect(false, std::string("output is not JSON: ") + e.what());
      return;
    }
  }
  c.expect(doc.value("schema", 0) == 1, "schema is not 1");

  const Json* rules = nullptr;
  const Json* cells = nullptr;
  for (const auto& entry : doc["results"]) {
    if (entry["type"] == "rule-correspondence") rules = &entry["rows"];
    if (entry["type"] == "axiom-status") cells = &entry["cells"];
  }
  if (!rules || !cells) {
    c.expect(false, "report lacks the rule or axiom tables");
    return;
  }

  const std::vector<std::array<std::string, 4>> want_rules{
      {"Kendall", "none", "1", "Kemeny"},
      {"Spearman rho", "none", "2", "Borda"},
      {"Hamming", "W(1,(1))", "1", "Plurality"},
      {"Hamming", "W(-1,(m))", "1", "Antiplurality"}};
  for (const auto& want : want_rules) {
    bool found = false;
    for (const auto& row : *rules) {
      if (row["distance"] == want[0] && row["weights"] == want[1] && row["p"] == want[2] &&
          row["rule"] == want[3]) {
        found = true;
        c.expect(row["confirmed"] == true, want[0] + "/" + want[1] + " -> " + want[3] + " not confirmed");
      }
    }
    c.expect(found, "missing row " + want[0] + "/" + want[1] + " -> " + want[3]);
  }

  const std::string y = "✓";
  const std::vector<std::string> columns{"Neutrality", "Anonymity", "Unanimity", "Monotonicity",
                                         "IndependenceToLosers", "CondorcetWinner"};
  const std::map<std::string, std::vector<std::string>> grid{
      {"Hamming", {y, y, y, "N for p=1", "N for p=1", "N"}},
      {"Kendall", {y, y, y, ".", "N", y + " only for p=1"}},
      {"Cayley", {y, y, ".", ".", "N", "N"}},
      {"Minkowski q=1", {y, y, y, y + " for p=1", "N", "N for p=1"}},
      {"Minkowski q>1", {y, y, y, ".", "N", "N for p=1"}},
  };
  std::size_t matched = 0, open = 0;
  for (const auto& [row, expected] : grid) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const Json* cell = nullptr;
      for (const auto& candidate : *cells) {
        if (candidate["row"] == row && candidate["axiom"] == columns[i]) cell = &candidate;
      }
      const std::string where = row + "/" + columns[i];
      if (!cell) {
        c.expect(false, "missing cell " + where);
        continue;
      }
      c.expect((*cell)["expected"] == expected[i], where + " expected entry differs");
      if (expected[i] == ".") {
        ++open;
        c.expect((*cell)["open"] == true, where + " is not flagged open");
        c.expect((*cell)["evidence"].get<std::string>().rfind("sampled", 0) == 0,
                 where + " carries no sampled status");
      } else {
        c.expect((*cell)["open"] == false, where + " wrongly flagged open");
        c.expect((*cell)["observed"] == expected[i],
                 where + " observed " + (*cell)["observed"].get<std::string>());
        matched += (*cell)["observed"] == expected[i];
      }
    }
  }
  c.note = std::to_string(matched) + " resolved cells matched, " + std::to_string(open) + " open";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"footrule consensus vs Bucklin on the 4x5 profile", footrule_against_bucklin},
      {"Kendall consensus vs barycenter sums", kendall_power},
      {"Condorcet winner overruled by Hamming, Cayley, Minkowski", condorcet_overruled},
      {"Chebyshev deepest sets and tied winners", chebyshev},
      {"Hamming monotonicity counterexample", monotonicity_replay},
      {"independence to losers flip", losers},
      {"L1 median box and continuous winners", box},
      {"classical rule equivalence suites", equivalences},
      {"neutrality/anonymity/universality/unanimity/Condorcet/monotonicity suites", theorem_suites},
      {"deepest_set against brute-force oracle", brute_force_oracle},
      {"reproduce-paper exit status and tables", [&](Criterion& c) { reproduce_command(c, cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    failed += !c.passed();
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << ms << " ms)";
    if (!c.note.empty()) std::cout << " [" << c.note << "]";
    if (!c.passed()) std::cout << " -- " << c.detail();
    std::cout << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
            << std::endl;
  return failed ? 1 : 0;
}
