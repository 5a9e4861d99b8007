#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dimlab/grid.hpp"

namespace dimlab::dimension {

// Counts of k-adic cells [(j-1)/k^l, j/k^l], j in {1..k^l}, meeting the set,
// for l = 1..ell_max. A point on a shared cell boundary counts for both
// neighbours. set_size records |A| (it bounds every count by 2|A| and drives
// saturation trimming in the estimator).
struct BoxCountProfile {
    int base_k = 2;
    std::size_t set_size = 0;
    std::vector<std::pair<int, std::size_t>> levels;  // (ell, count), counts nondecreasing
};

// Requires base_k >= 2 and k^ell_max <= parent_n - 1 (cells no finer than the
// grid step).
BoxCountProfile box_counts(const GridSubset& a, int base_k, int ell_max);

struct DimensionEstimate {
    double lower_est = 0.0;
    double upper_est = 0.0;
    int fit_ell_min = 0;   // trimmed fitting range
    int fit_ell_max = 0;
    double r_squared = 0.0;
    int n_levels_used = 0;
};

// Windowed log-log regression. Levels saturated from below (count near k^l,
// slope-1 bias) are prefix-trimmed, levels saturated by the point count
// (count near 2|A|, slope-0 bias) suffix-trimmed; if prefix trimming would
// leave fewer than 4 levels the set genuinely fills its cells at all scales
// and the saturated levels are kept. upper_est / lower_est are the max / min
// least-squares slopes over windows of length >= 4 ending at the deepest
// usable level, clamped to [0, 1.05]. Throws if fewer than 4 usable levels
// remain.
DimensionEstimate estimate_dimension(const BoxCountProfile& profile);

}  // namespace dimlab::dimension
