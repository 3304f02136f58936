#include "deepvote/reference_profiles.hpp"

namespace deepvote::reference {

namespace {

ProfileDocument matrix(std::vector<std::vector<Rank>> rows, std::string name) {
  auto profile = Profile::from_rows(rows);
  return {default_labels(profile.candidates()), std::move(profile), "reference:" + std::move(name)};
}

}  // namespace

ProfileDocument footrule_vs_bucklin() {
  return matrix({{1, 1, 4, 4, 3}, {2, 2, 2, 2, 2}, {3, 3, 3, 3, 1}, {4, 4, 1, 1, 4}},
                "footrule_vs_bucklin");
}

ProfileDocument kendall_power_flip() {
  return matrix({{1, 1, 1, 3, 2}, {2, 2, 2, 2, 1}, {3, 3, 3, 1, 3}}, "kendall_power_flip");
}

ProfileDocument condorcet_overruled() {
  return matrix({{1, 1, 2, 2, 2, 2, 3}, {2, 2, 1, 1, 3, 3, 1}, {3, 3, 3, 3, 1, 1, 2}},
                "condorcet_overruled");
}

ProfileDocument chebyshev_tie() {
  return matrix({{1, 1, 1, 1, 1},
                 {4, 6, 4, 2, 6},
                 {6, 4, 6, 4, 5},
                 {3, 5, 3, 6, 4},
                 {5, 2, 5, 5, 3},
                 {2, 3, 2, 3, 2}},
                "chebyshev_tie");
}

ProfileDocument two_candidate_majority() {
  return matrix({{1, 1, 1, 1, 2, 2, 2}, {2, 2, 2, 2, 1, 1, 1}}, "two_candidate_majority");
}

ProfileDocument loser_added() {
  return matrix({{1, 1, 2, 2, 3, 3, 3}, {2, 2, 3, 3, 1, 1, 1}, {3, 3, 1, 1, 2, 2, 2}},
                "loser_added");
}

ProfileDocument median_box() {
  return matrix({{2, 2, 1, 1}, {1, 1, 3, 3}, {3, 3, 2, 2}}, "median_box");
}

ProfileDocument hamming_monotonicity_before() {
  return parse_orders("2: A>B>C>D>E\n2: D>C>A>B>E\n1: E>D>C>A>B\n",
                      "reference:hamming_monotonicity_before");
}

ProfileDocument hamming_monotonicity_after() {
  return parse_orders("2: A>B>C>D>E\n2: D>C>A>B>E\n1: E>D>A>C>B\n",
                      "reference:hamming_monotonicity_after");
}

std::vector<std::pair<std::string, ProfileDocument>> all() {
  std::vector<std::pair<std::string, ProfileDocument>> out;
  out.emplace_back("footrule_vs_bucklin", footrule_vs_bucklin());
  out.emplace_back("kendall_power_flip", kendall_power_flip());
  out.emplace_back("condorcet_overruled", condorcet_overruled());
  out.emplace_back("chebyshev_tie", chebyshev_tie());
  out.emplace_back("two_candidate_majority", two_candidate_majority());
  out.emplace_back("loser_added", loser_added());
  out.emplace_back("median_box", median_box());
  out.emplace_back("hamming_monotonicity_before", hamming_monotonicity_before());
  out.emplace_back("hamming_monotonicity_after", hamming_monotonicity_after());
  return out;
}

}  // namespace deepvote::reference
