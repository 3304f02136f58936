#pragma once

#include <string>
#include <vector>

#include "deepvote/io.hpp"

namespace deepvote::reference {

/// 4 candidates, 5 voters. Bucklin elects c2, footrule consensus elects c1.
ProfileDocument footrule_vs_bucklin();
/// 3 candidates, 5 voters. Kendall consensus elects c1, Kendall barycenter c2.
ProfileDocument kendall_power_flip();
/// 3 candidates, 7 voters. c1 is the Condorcet winner, several distances elect c2.
ProfileDocument condorcet_overruled();
/// 6 candidates, 5 voters. The Chebyshev (q = inf) deepest set mixes two tops.
ProfileDocument chebyshev_tie();
/// 2 candidates, 7 voters: c1 wins 4 to 3.
ProfileDocument two_candidate_majority();
/// two_candidate_majority with a third candidate inserted; c3 is a loser
/// that flips the winner to c2.
ProfileDocument loser_added();
/// 3 candidates, 4 voters whose L1 median box touches every candidate.
ProfileDocument median_box();
/// 5 candidates, 5 voters, labels A..E. Hamming consensus elects A.
ProfileDocument hamming_monotonicity_before();
/// Voter 5 raises A above C; Hamming consensus now elects D.
ProfileDocument hamming_monotonicity_after();

/// Every profile above, keyed by its function name.
std::vector<std::pair<std::string, ProfileDocument>> all();

}  // namespace deepvote::reference
