#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "deepvote/axioms.hpp"
#include "deepvote/classical.hpp"
#include "deepvote/continuous.hpp"
#include "deepvote/frechet.hpp"
#include "deepvote/io.hpp"

namespace deepvote {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

enum class ReportFormat { Json, Text };

/// "json" or "text"; throws Error{InvalidParameter}.
ReportFormat parse_format(std::string_view name);

Json to_json(const Ranking& sigma);
/// Rows are candidates, as in the matrix CSV.
Json to_json(const Profile& profile);
Json to_json(const ProfileDocument& doc);
Json to_json(const DeepestResult& result, const std::vector<std::string>& labels);
Json to_json(const RuleOutcome& outcome, const std::vector<std::string>& labels);
Json to_json(const AxiomVerdict& verdict);
Json to_json(const EvaluationPoint& point, const std::vector<std::string>& labels);
Json to_json(const DeepestBox& box, const std::vector<std::string>& labels);

Profile profile_from_json(const Json& rows);
/// Inverse of the "witness" member of to_json(AxiomVerdict).
Witness witness_from_json(const Json& witness);

/// One result: machine-readable payload plus a plain-text rendering.
struct ReportEntry {
  std::string kind;
  Json data;
  std::string text;
};

ReportEntry make_entry(const DeepestResult& result, const std::vector<std::string>& labels);
ReportEntry make_entry(const RuleOutcome& outcome, const std::vector<std::string>& labels);
ReportEntry make_entry(const AxiomVerdict& verdict);
ReportEntry make_entry(const EvaluationPoint& point, const std::vector<std::string>& labels);
ReportEntry make_entry(const DeepestBox& box, const std::vector<std::string>& labels);

/// Fixed-width text table; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

/// Numbers printed the same way in text and JSON-adjacent contexts.
std::string format_number(double value);

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }
  /// Top-level fields beside schema/command/results.
  void set(const std::string& key, Json value) { extra_[key] = std::move(value); }
  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }

  Json json() const;
  std::string render(ReportFormat format) const;

 private:
  std::string command_;
  std::vector<ReportEntry> entries_;
  Json extra_ = Json::object();
};

}  // namespace deepvote
