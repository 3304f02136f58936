// deepvote: command-line front end for depth-based ranking rules.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "deepvote/axioms.hpp"
#include "deepvote/classical.hpp"
#include "deepvote/continuous.hpp"
#include "deepvote/error.hpp"
#include "deepvote/frechet.hpp"
#include "deepvote/io.hpp"
#include "deepvote/report.hpp"
#include "deepvote/reproduction.hpp"
#include "deepvote/sampling.hpp"

namespace dv = deepvote;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

struct DistanceArgs {
  std::string distance = "kendall";
  std::string q = "1";
  double p = 1.0;
  std::string weights;
  std::size_t max_m = dv::kDefaultEnumerationCap;
};

double parse_order(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return dv::kInfiniteOrder;
  try {
    std::size_t used = 0;
    const double q = std::stod(text, &used);
    if (used == text.size()) return q;
  } catch (const std::exception&) {
  }
  throw dv::Error(dv::ErrorCode::InvalidOrder, "--q must be a number >= 1 or 'inf', got '" + text + "'");
}

dv::WeightMatrix make_weights(const std::string& name, std::size_t m) {
  if (name == "plurality") return dv::WeightMatrix::plurality(m);
  if (name == "antiplurality") return dv::WeightMatrix::antiplurality(m);
  if (name == "top-heavy") return dv::WeightMatrix::top_heavy(m);
  if (name == "uniform") return dv::WeightMatrix::uniform(m);
  return dv::parse_weight_csv(dv::read_text_file(name));
}

dv::DistanceSpec make_spec(const DistanceArgs& args, std::size_t m) {
  const std::string& d = args.distance;
  if (d == "kendall") return dv::DistanceSpec::kendall();
  if (d == "hamming") return dv::DistanceSpec::hamming();
  if (d == "cayley") return dv::DistanceSpec::cayley();
  if (d == "footrule") return dv::DistanceSpec::footrule();
  if (d == "spearman" || d == "spearman-rho") return dv::DistanceSpec::spearman_rho();
  if (d == "minkowski") return dv::DistanceSpec::minkowski(parse_order(args.q));
  if (d == "weighted-hamming" || d == "weighted-minkowski") {
    if (args.weights.empty()) {
      throw dv::Error(dv::ErrorCode::InvalidParameter, d + " needs --weights");
    }
    auto w = make_weights(args.weights, m);
    if (d == "weighted-hamming") return dv::DistanceSpec::weighted_hamming(std::move(w));
    return dv::DistanceSpec::weighted_minkowski(parse_order(args.q), std::move(w));
  }
  throw dv::Error(dv::ErrorCode::InvalidParameter, "unknown distance '" + d + "'");
}

dv::ProfileDocument read_profile(const std::string& path) {
  if (path == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return dv::parse_profile(text, "<stdin>");
  }
  return dv::load_profile(path);
}

void add_distance_options(CLI::App* cmd, DistanceArgs& args) {
  cmd->add_option("--distance", args.distance,
                  "kendall, hamming, cayley, minkowski, footrule, spearman, weighted-hamming, "
                  "weighted-minkowski")
      ->capture_default_str();
  cmd->add_option("--q", args.q, "Minkowski order, a number >= 1 or inf")->capture_default_str();
  cmd->add_option("--p", args.p, "power of the Frechet functional")->capture_default_str();
  cmd->add_option("--weights", args.weights,
                  "plurality, antiplurality, top-heavy, uniform, or a CSV file");
  cmd->add_option("--max-m", args.max_m, "largest candidate count to enumerate")
      ->capture_default_str();
}

void emit(const dv::Report& report, const std::string& format) {
  std::cout << report.render(dv::parse_format(format));
}

dv::SearchOptions search_options(const DistanceArgs& args, bool with_depth) {
  dv::SearchOptions o;
  o.max_m = args.max_m;
  o.with_depth = with_depth;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth-based ranking rules: deepest permutations, classical rules, axiom checks"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string profile_path;
  DistanceArgs dist;
  std::string rule_name;
  std::string axiom_name;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::size_t candidates = 4;
  std::size_t voters = 7;
  std::string gen_format = "csv";
  std::string reading = "retained";

  auto* winner = app.add_subcommand("winner", "winner set of the deepest rule on a profile");
  auto* deepest = app.add_subcommand("deepest", "full deepest set with functional and depth");
  auto* compare = app.add_subcommand("compare", "deepest rule against a classical rule");
  auto* axioms = app.add_subcommand("axioms", "seeded counterexample search for one axiom");
  auto* reproduce = app.add_subcommand("reproduce-paper",
                                       "replay reference profiles, rule correspondences and axiom grid");
  auto* gen = app.add_subcommand("gen", "seeded random profile");

  for (auto* cmd : {winner, deepest, compare, axioms}) {
    add_distance_options(cmd, dist);
    cmd->add_option("--format", format, "text or json")->capture_default_str();
  }
  for (auto* cmd : {winner, deepest, compare}) {
    cmd->add_option("profile", profile_path, "matrix CSV or order file, '-' for stdin")->required();
  }
  compare->add_option("--rule", rule_name, "borda, bucklin, plurality, antiplurality, kemeny")
      ->required();
  axioms->add_option("--axiom", axiom_name,
                     "neutrality, anonymity, universality, unanimity, monotonicity, "
                     "independence-to-losers, condorcet-winner, condorcet-loser")
      ->required();
  axioms->add_option("--rule", rule_name, "classical rule to test instead of the deepest rule");
  axioms->add_option("--seed", seed)->capture_default_str();
  axioms->add_option("--trials", trials, "random profiles to try (default 1000)");
  axioms->add_option("--reading", reading, "monotonicity reading: retained or unchanged")
      ->capture_default_str();
  reproduce->add_option("--seed", seed, "seed for the sampled suites");
  reproduce->add_option("--trials", trials, "profiles per equivalence suite (default 100)");
  reproduce->add_option("--format", format, "text or json")->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--candidates,-m", candidates)->capture_default_str();
  gen->add_option("--voters,-n", voters)->capture_default_str();
  gen->add_option("--format", gen_format, "csv or orders")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (winner->parsed() || deepest->parsed()) {
      const auto doc = read_profile(profile_path);
      const dv::FrechetParams params{make_spec(dist, doc.profile.candidates()), dist.p};
      const auto result = dv::deepest_set(doc.profile, params, search_options(dist, deepest->parsed()));
      dv::Report report(winner->parsed() ? "winner" : "deepest");
      if (winner->parsed() && format == "text") {
        std::string line;
        for (auto c : result.winner_set) line += (line.empty() ? "" : " ") + doc.labels[c];
        std::cout << line << (result.unique_winner ? "" : " (no unique winner)") << '\n';
        return kExitPass;
      }
      report.add(dv::make_entry(result, doc.labels));
      emit(report, format);
      return kExitPass;
    }

    if (compare->parsed()) {
      const auto doc = read_profile(profile_path);
      const dv::FrechetParams params{make_spec(dist, doc.profile.candidates()), dist.p};
      const auto result = dv::deepest_set(doc.profile, params, search_options(dist, false));
      dv::RuleOutcome outcome;
      if (rule_name == "borda") outcome = dv::borda(doc.profile);
      else if (rule_name == "bucklin") outcome = dv::bucklin(doc.profile);
      else if (rule_name == "plurality") outcome = dv::plurality(doc.profile);
      else if (rule_name == "antiplurality") outcome = dv::antiplurality(doc.profile);
      else if (rule_name == "kemeny") outcome = dv::kemeny(doc.profile, dist.max_m);
      else throw dv::Error(dv::ErrorCode::InvalidParameter, "unknown rule '" + rule_name + "'");

      // Negative bottom weights single out the candidate to place last.
      std::vector<dv::Candidate> deepest_side = result.winner_set;
      const auto& w = params.spec.weights();
      if (rule_name == "antiplurality" && w && !w->nonnegative()) {
        deepest_side.clear();
        for (const auto& sigma : result.deepest_set) {
          deepest_side.push_back(sigma.candidate_at(static_cast<dv::Rank>(sigma.size())));
        }
        std::sort(deepest_side.begin(), deepest_side.end());
        deepest_side.erase(std::unique(deepest_side.begin(), deepest_side.end()), deepest_side.end());
      }
      const bool agree = deepest_side == outcome.winner_set;
      dv::Report report("compare");
      report.add(dv::make_entry(result, doc.labels));
      report.add(dv::make_entry(outcome, doc.labels));
      report.set("agree", agree);
      std::cout << report.render(dv::parse_format(format));
      if (format != "json") std::cout << (agree ? "agree\n" : "differ\n");
      return agree ? kExitPass : kExitMismatch;
    }

    if (axioms->parsed()) {
      const auto axiom = dv::parse_axiom(axiom_name);
      dv::VotingRule rule;
      if (!rule_name.empty()) {
        rule = dv::classical_rule(rule_name);
      } else {
        const DistanceArgs args = dist;
        // weighted presets are per-m
        rule = dv::deepest_rule(
            "deepest[" + make_spec(args, 3).name() + ", p=" + dv::format_number(args.p) + "]",
            [args](std::size_t m) { return make_spec(args, m); }, args.p,
            dv::rule_search_options(args.max_m));
      }
      dv::CounterexampleSearch cfg;
      cfg.seed = seed;
      if (trials) cfg.trials = trials;
      cfg.max_m = std::min<std::size_t>(cfg.max_m, dist.max_m);
      if (reading == "unchanged") {
        cfg.reading = dv::MonotonicityReading::WinnerSetUnchanged;
      } else if (reading != "retained") {
        throw dv::Error(dv::ErrorCode::InvalidParameter, "unknown reading '" + reading + "'");
      }
      const auto verdict = dv::search_counterexample(rule, axiom, cfg);
      dv::Report report("axioms");
      report.add(dv::make_entry(verdict));
      emit(report, format);
      return verdict.violated() ? kExitMismatch : kExitPass;
    }

    if (reproduce->parsed()) {
      dv::ReproductionOptions options;
      if (reproduce->count("--seed")) options.seed = seed;
      if (trials) options.equivalence_trials = trials;
      const auto result = dv::reproduce(options);
      emit(result.report(), format);
      return result.passed() ? kExitPass : kExitMismatch;
    }

    if (gen->parsed()) {
      if (candidates < 1 || voters < 1) {
        throw dv::Error(dv::ErrorCode::InvalidParameter, "need at least one candidate and one voter");
      }
      dv::Sampler rng(seed);
      const dv::ProfileDocument doc{dv::default_labels(candidates), rng.profile(candidates, voters),
                                    "gen"};
      if (gen_format == "orders") {
        std::cout << dv::to_orders(doc);
      } else if (gen_format == "csv") {
        std::cout << dv::to_matrix_csv(doc);
      } else {
        throw dv::Error(dv::ErrorCode::InvalidParameter, "unknown format '" + gen_format + "'");
      }
      return kExitPass;
    }
  } catch (const dv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
