#include "deepvote/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "deepvote/error.hpp"

namespace deepvote {

namespace {

std::string label_of(const std::vector<std::string>& labels, Candidate c) {
  return c < labels.size() ? labels[c] : "c" + std::to_string(c + 1);
}

Json labels_json(const std::vector<Candidate>& set, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (auto c : set) out.push_back(label_of(labels, c));
  return out;
}

std::string join_labels(const std::vector<Candidate>& set, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + label_of(labels, set[i]);
  return out + "}";
}

Json number_or_inf(double value) {
  if (std::isinf(value)) return "inf";
  return value;
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text" || name == "table" || name == "text-table") return ReportFormat::Text;
  throw Error(ErrorCode::InvalidParameter, "unknown format '" + std::string(name) + "'");
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::nearbyint(value) == value && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

namespace {

// Display width in code points, so cells holding a check mark line up.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

}  // namespace

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) line += "  ";
      line += rows[r][i];
      if (i + 1 < rows[r].size()) line.append(width[i] - display_width(rows[r][i]), ' ');
    }
    out << line << '\n';
    if (r == 0 && rows.size() > 1) {
      std::size_t total = 0;
      for (auto w : width) total += w;
      out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    }
  }
  return out.str();
}

Json to_json(const Ranking& sigma) {
  Json out = Json::array();
  for (auto r : sigma.ranks()) out.push_back(r);
  return out;
}

Json to_json(const Profile& profile) {
  Json rows = Json::array();
  for (Candidate c = 0; c < profile.candidates(); ++c) {
    Json row = Json::array();
    for (std::size_t v = 0; v < profile.voters(); ++v) row.push_back(profile.rank(c, v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ProfileDocument& doc) {
  return {{"labels", doc.labels}, {"profile", to_json(doc.profile)}, {"source", doc.source}};
}

Profile profile_from_json(const Json& rows) {
  try {
    return Profile::from_rows(rows.get<std::vector<std::vector<Rank>>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidParameter, std::string("malformed profile: ") + e.what());
  }
}

Json to_json(const DeepestResult& result, const std::vector<std::string>& labels) {
  const auto& spec = result.params.spec;
  Json out{{"type", "deepest"},
           {"distance", spec.name()},
           {"p", result.params.p},
           {"voters", result.voters},
           {"u_min", result.u_min},
           {"unique_winner", result.unique_winner},
           {"exact", result.exact},
           {"winner_set", labels_json(result.winner_set, labels)},
           {"winner_indices", result.winner_set}};
  if (spec.kind() == DistanceKind::Minkowski || spec.kind() == DistanceKind::WeightedMinkowski) {
    out["q"] = number_or_inf(spec.order());
  }
  if (spec.weights()) out["weights"] = spec.weights()->rows();
  out["winner"] = result.unique_winner ? Json(label_of(labels, result.winner_set.front())) : Json();
  out["u_min_sum"] = result.u_min_sum ? Json(*result.u_min_sum) : Json();
  out["depth_max"] = result.depth_max ? Json(*result.depth_max) : Json();
  Json set = Json::array();
  for (const auto& sigma : result.deepest_set) set.push_back(to_json(sigma));
  out["deepest_set"] = std::move(set);
  return out;
}

Json to_json(const RuleOutcome& outcome, const std::vector<std::string>& labels) {
  Json out{{"type", "rule"},
           {"rule", outcome.rule},
           {"winner_set", labels_json(outcome.winner_set, labels)},
           {"winner_indices", outcome.winner_set},
           {"scores", outcome.scores}};
  if (!outcome.optimal_orders.empty()) {
    Json orders = Json::array();
    for (const auto& sigma : outcome.optimal_orders) orders.push_back(to_json(sigma));
    out["optimal_orders"] = std::move(orders);
  }
  return out;
}

Json to_json(const AxiomVerdict& verdict) {
  Json out{{"type", "axiom"},
           {"axiom", std::string(to_string(verdict.axiom))},
           {"rule", verdict.rule_id},
           {"status", std::string(to_string(verdict.status))},
           {"trials", verdict.trials},
           {"skipped", verdict.skipped},
           {"seed", verdict.seed}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    out["witness"] = {{"original", to_json(w.original)},   {"transformed", to_json(w.transformed)},
                      {"expected", w.expected},            {"observed", w.observed},
                      {"parameters", w.parameters},        {"description", w.description}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Witness witness_from_json(const Json& w) {
  try {
    return {profile_from_json(w.at("original")),
            profile_from_json(w.at("transformed")),
            w.at("expected").get<std::vector<Candidate>>(),
            w.at("observed").get<std::vector<Candidate>>(),
            w.at("parameters").get<std::vector<std::size_t>>(),
            w.at("description").get<std::string>()};
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidParameter, std::string("malformed witness: ") + e.what());
  }
}

Json to_json(const EvaluationPoint& point, const std::vector<std::string>& labels) {
  return {{"type", "l2-point"},
          {"coords", point.coords},
          {"winner_set", labels_json(continuous_winner_set(point), labels)}};
}

Json to_json(const DeepestBox& box, const std::vector<std::string>& labels) {
  return {{"type", "l1-box"},
          {"lower", box.lower},
          {"upper", box.upper},
          {"winner_set", labels_json(continuous_winner_set(box), labels)}};
}

ReportEntry make_entry(const DeepestResult& result, const std::vector<std::string>& labels) {
  std::ostringstream text;
  text << "deepest " << result.params.spec.name() << " p=" << format_number(result.params.p)
       << '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"candidate"});
  for (std::size_t i = 0; i < result.deepest_set.size(); ++i) {
    rows[0].push_back("sigma*" + (result.deepest_set.size() > 1 ? std::to_string(i + 1) : ""));
  }
  const std::size_t m = result.deepest_set.empty() ? 0 : result.deepest_set.front().size();
  for (Candidate c = 0; c < m; ++c) {
    std::vector<std::string> row{label_of(labels, c)};
    for (const auto& sigma : result.deepest_set) row.push_back(std::to_string(sigma[c]));
    rows.push_back(std::move(row));
  }
  text << render_table(rows);
  text << "sum d^p = "
       << (result.u_min_sum ? std::to_string(*result.u_min_sum)
                            : format_number(result.u_min * static_cast<double>(result.voters)))
       << ", U = " << format_number(result.u_min);
  if (result.depth_max) text << ", depth = " << format_number(*result.depth_max);
  text << '\n'
       << "winners " << join_labels(result.winner_set, labels)
       << (result.unique_winner ? "" : " (no unique winner)") << (result.exact ? "" : " [float ties]") << '\n';
  return {"deepest", to_json(result, labels), text.str()};
}

ReportEntry make_entry(const RuleOutcome& outcome, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> rows{{"candidate", "score", "winner"}};
  for (Candidate c = 0; c < outcome.scores.size(); ++c) {
    const bool won = std::binary_search(outcome.winner_set.begin(), outcome.winner_set.end(), c);
    rows.push_back({label_of(labels, c), format_number(outcome.scores[c]), won ? "*" : ""});
  }
  std::string text = outcome.rule + "\n" + render_table(rows) + "winners " +
                     join_labels(outcome.winner_set, labels) + "\n";
  return {"rule", to_json(outcome, labels), std::move(text)};
}

ReportEntry make_entry(const AxiomVerdict& verdict) {
  std::ostringstream text;
  text << to_string(verdict.axiom) << " for " << verdict.rule_id << ": " << to_string(verdict.status)
       << " (" << verdict.trials << " checked, " << verdict.skipped << " skipped, seed "
       << verdict.seed << ")\n";
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    const auto labels = default_labels(w.original.candidates());
    text << w.description << '\n'
         << "original:\n"
         << to_matrix_csv({labels, w.original, ""}) << "transformed:\n"
         << to_matrix_csv({default_labels(w.transformed.candidates()), w.transformed, ""})
         << "expected " << join_labels(w.expected, default_labels(w.transformed.candidates()))
         << ", observed " << join_labels(w.observed, default_labels(w.transformed.candidates()))
         << '\n';
  }
  return {"axiom", to_json(verdict), text.str()};
}

ReportEntry make_entry(const EvaluationPoint& point, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> rows{{"candidate", "mean rank"}};
  for (Candidate c = 0; c < point.coords.size(); ++c) {
    rows.push_back({label_of(labels, c), format_number(point.coords[c])});
  }
  std::string text = "continuous L2 deepest point\n" + render_table(rows) + "winners " +
                     join_labels(continuous_winner_set(point), labels) + "\n";
  return {"l2-point", to_json(point, labels), std::move(text)};
}

ReportEntry make_entry(const DeepestBox& box, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> rows{{"candidate", "median interval"}};
  for (Candidate c = 0; c < box.lower.size(); ++c) {
    rows.push_back({label_of(labels, c),
                    "[" + format_number(box.lower[c]) + "," + format_number(box.upper[c]) + "]"});
  }
  std::string text = "continuous L1 deepest box\n" + render_table(rows) + "winners " +
                     join_labels(continuous_winner_set(box), labels) + "\n";
  return {"l1-box", to_json(box, labels), std::move(text)};
}

Json Report::json() const {
  Json out = extra_;
  out["schema"] = kReportSchema;
  out["command"] = command_;
  Json results = Json::array();
  for (const auto& e : entries_) results.push_back(e.data);
  out["results"] = std::move(results);
  return out;
}

std::string Report::render(ReportFormat format) const {
  if (format == ReportFormat::Json) return json().dump(2) + "\n";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += '\n';
    out += entries_[i].text;
  }
  return out;
}

}  // namespace deepvote
