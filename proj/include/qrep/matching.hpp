#pragma once

#include <cstdint>
#include <vector>

namespace qrep {

// Exact minimum-weight perfect matching on a complete graph with integer
// edge weights, via the primal-dual blossom algorithm. Weights are doubled
// internally so every dual adjustment is integral; all comparisons are
// exact, so the result is certified minimal (no floating-point slop).
//
// n must be even. Returns mate[], with mate[mate[v]] == v for all v.
std::vector<int> min_weight_perfect_matching(int n,
                                             const std::vector<int64_t>& weights);

// Total weight of a matching under the given flat n*n weight matrix.
int64_t matching_weight(const std::vector<int>& mate,
                        const std::vector<int64_t>& weights);

}  // namespace qrep
