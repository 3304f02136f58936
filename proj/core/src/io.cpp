#include "deepvote/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "deepvote/error.hpp"

namespace deepvote {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    line = strip_comment(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < m; ++c) labels.push_back("c" + std::to_string(c + 1));
  return labels;
}

ProfileDocument parse_matrix_csv(std::string_view text, std::string source) {
  std::vector<std::vector<std::string_view>> rows;
  for (auto line : content_lines(text)) {
    auto cells = split(line, ',');
    for (auto& cell : cells) cell = trim(cell);
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw Error(ErrorCode::NotRectangular, "no rows in matrix input");

  std::string corner(rows.front().front());
  std::transform(corner.begin(), corner.end(), corner.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  const bool header = corner.empty() || corner == "candidate" || corner == "candidates" ||
                      corner == "label" ||
                      std::any_of(rows.front().begin() + 1, rows.front().end(),
                                  [](std::string_view cell) { return !parse_number<int>(cell); });
  if (header) rows.erase(rows.begin());
  if (rows.empty()) throw Error(ErrorCode::NotRectangular, "matrix input has a header but no rows");

  const std::size_t width = rows.front().size();
  if (width < 2) throw Error(ErrorCode::NotRectangular, "rows need a label and at least one rank");
  std::vector<std::string> labels;
  std::vector<std::vector<Rank>> ranks;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw Error(ErrorCode::NotRectangular,
                  "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                      " cells, expected " + std::to_string(width),
                  r);
    }
    std::string label(rows[r].front());
    if (label.empty()) label = "c" + std::to_string(r + 1);
    if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate candidate label '" + label + "'", r);
    }
    labels.push_back(std::move(label));
    std::vector<Rank> row;
    for (std::size_t v = 1; v < width; ++v) {
      const auto value = parse_number<Rank>(rows[r][v]);
      if (!value) {
        throw Error(ErrorCode::NotAPermutation,
                    "column " + std::to_string(v - 1) + " holds a non-integer rank '" +
                        std::string(rows[r][v]) + "'",
                    v - 1);
      }
      row.push_back(*value);
    }
    ranks.push_back(std::move(row));
  }
  return {std::move(labels), Profile::from_rows(ranks), std::move(source)};
}

ProfileDocument parse_orders(std::string_view text, std::string source) {
  std::vector<std::string_view> entries;
  std::vector<std::size_t> entry_line;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    for (auto part : split(strip_comment(line), ';')) {
      part = trim(part);
      if (part.empty()) continue;
      entries.push_back(part);
      entry_line.push_back(line_no);
    }
  }

  std::vector<std::string> labels;
  bool labels_fixed = false;
  std::vector<Ranking> columns;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto entry = entries[e];
    const std::size_t line = entry_line[e];
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::BadCount, "line " + std::to_string(line) + ": missing 'count:' prefix",
                  line);
    }
    const auto head = trim(entry.substr(0, colon));
    const auto body = trim(entry.substr(colon + 1));

    if (head == "candidates") {
      if (labels_fixed || !columns.empty()) {
        throw Error(ErrorCode::InvalidParameter,
                    "line " + std::to_string(line) + ": candidates must be declared once, first",
                    line);
      }
      for (auto name : split(body, ',')) {
        std::string label(trim(name));
        if (label.empty()) continue;
        if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
          throw Error(ErrorCode::DuplicateLabel, "duplicate candidate label '" + label + "'", line);
        }
        labels.push_back(std::move(label));
      }
      if (labels.empty()) throw Error(ErrorCode::Empty, "empty candidates line", line);
      labels_fixed = true;
      continue;
    }

    const auto count = parse_number<long long>(head);
    if (!count || *count <= 0) {
      throw Error(ErrorCode::BadCount,
                  "line " + std::to_string(line) + ": count '" + std::string(head) +
                      "' is not a positive integer",
                  line);
    }

    std::vector<std::string> order;
    for (auto name : split(body, '>')) {
      std::string label(trim(name));
      if (label.empty()) {
        throw Error(ErrorCode::IncompleteOrder,
                    "line " + std::to_string(line) + ": empty position in ballot", line);
      }
      order.push_back(std::move(label));
    }
    if (!labels_fixed) {
      labels_fixed = true;
      for (const auto& label : order) {
        if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
          throw Error(ErrorCode::IncompleteOrder,
                      "line " + std::to_string(line) + ": '" + label + "' appears twice", line);
        }
        labels.push_back(label);
      }
    }

    std::vector<Rank> ranks(labels.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const auto it = std::find(labels.begin(), labels.end(), order[pos]);
      if (it == labels.end()) {
        throw Error(ErrorCode::UnknownLabel,
                    "line " + std::to_string(line) + ": unknown candidate '" + order[pos] + "'",
                    line);
      }
      auto& slot = ranks[static_cast<std::size_t>(it - labels.begin())];
      if (slot != 0) {
        throw Error(ErrorCode::IncompleteOrder,
                    "line " + std::to_string(line) + ": '" + order[pos] + "' appears twice", line);
      }
      slot = static_cast<Rank>(pos + 1);
    }
    if (order.size() != labels.size()) {
      throw Error(ErrorCode::IncompleteOrder,
                  "line " + std::to_string(line) + ": ballot ranks " +
                      std::to_string(order.size()) + " of " + std::to_string(labels.size()) +
                      " candidates",
                  line);
    }
    const Ranking ballot(ranks);
    for (long long k = 0; k < *count; ++k) columns.push_back(ballot);
  }
  if (columns.empty()) throw Error(ErrorCode::Empty, "no ballots in order input");
  return {std::move(labels), Profile(std::move(columns)), std::move(source)};
}

ProfileDocument parse_profile(std::string_view text, std::string source) {
  for (auto line : content_lines(text)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    const auto head = trim(line.substr(0, colon));
    if (line.find('>') != std::string_view::npos || head == "candidates" || parse_number<long long>(head)) {
      return parse_orders(text, std::move(source));
    }
  }
  return parse_matrix_csv(text, std::move(source));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidParameter, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProfileDocument load_profile(const std::filesystem::path& path) {
  return parse_profile(read_text_file(path), path.string());
}

std::string to_matrix_csv(const ProfileDocument& doc) {
  std::ostringstream out;
  out << "candidate";
  for (std::size_t v = 0; v < doc.profile.voters(); ++v) out << ",v" << v + 1;
  out << '\n';
  for (std::size_t c = 0; c < doc.profile.candidates(); ++c) {
    out << doc.labels.at(c);
    for (std::size_t v = 0; v < doc.profile.voters(); ++v) out << ',' << doc.profile.rank(c, v);
    out << '\n';
  }
  return out.str();
}

std::string to_orders(const ProfileDocument& doc) {
  std::ostringstream out;
  out << "candidates: ";
  for (std::size_t c = 0; c < doc.labels.size(); ++c) out << (c ? ", " : "") << doc.labels[c];
  out << '\n';
  const auto& cols = doc.profile.columns();
  for (std::size_t v = 0; v < cols.size();) {
    std::size_t k = v + 1;
    while (k < cols.size() && cols[k] == cols[v]) ++k;
    out << k - v << ": ";
    for (Rank r = 1; r <= static_cast<Rank>(doc.labels.size()); ++r) {
      out << (r > 1 ? " > " : "") << doc.labels.at(cols[v].candidate_at(r));
    }
    out << '\n';
    v = k;
  }
  return out.str();
}

WeightMatrix parse_weight_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  for (auto line : content_lines(text)) {
    std::vector<double> row;
    for (auto cell : split(line, ',')) {
      const auto value = parse_number<double>(cell);
      if (!value || !std::isfinite(*value)) {
        throw Error(ErrorCode::InvalidParameter,
                    "weight '" + std::string(trim(cell)) + "' is not a finite number", rows.size());
      }
      row.push_back(*value);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::Empty, "no rows in weight input");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw Error(ErrorCode::NotRectangular, "weight matrix must be square", r);
    }
  }
  return WeightMatrix(rows);
}

}  // namespace deepvote
