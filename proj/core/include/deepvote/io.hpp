#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "deepvote/metrics.hpp"
#include "deepvote/ranking.hpp"

namespace deepvote {

/// A profile together with candidate labels and where it came from.
struct ProfileDocument {
  std::vector<std::string> labels;
  Profile profile;
  std::string source;

  friend bool operator==(const ProfileDocument& a, const ProfileDocument& b) {
    return a.labels == b.labels && a.profile == b.profile;
  }
};

/// c1, c2, ..., cm.
std::vector<std::string> default_labels(std::size_t m);

/// Rows are candidates: a label, then one rank per voter. A first row whose
/// rank cells are not all integers is taken as a header and skipped.
/// Errors: NotRectangular (ragged or empty input), NotAPermutation (column
/// index in Error::index()), DuplicateLabel.
ProfileDocument parse_matrix_csv(std::string_view text, std::string source = "<text>");

/// Ballot classes `k: A > B > C`, one per line or separated by `;`.
/// `#` starts a comment. An optional `candidates: A, B, C` line fixes the
/// label order; otherwise labels follow the first ballot.
/// Errors: BadCount, UnknownLabel, IncompleteOrder, Empty.
ProfileDocument parse_orders(std::string_view text, std::string source = "<text>");

/// Picks the format from the content: order syntax if a non-comment line
/// contains ':' and either '>' or a count/`candidates` before the colon,
/// matrix CSV otherwise.
ProfileDocument parse_profile(std::string_view text, std::string source = "<text>");

/// Reads a file and dispatches to parse_profile.
ProfileDocument load_profile(const std::filesystem::path& path);

/// With a header row `candidate,v1,...,vn`.
std::string to_matrix_csv(const ProfileDocument& doc);

/// A `candidates:` line, then consecutive identical ballots grouped.
std::string to_orders(const ProfileDocument& doc);

/// Square CSV of numbers, no labels, `#` comments allowed.
WeightMatrix parse_weight_csv(std::string_view text);

/// Reads the whole file; throws Error{InvalidParameter} when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace deepvote
