#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace dimlab::detail {

enum class MonotoneKind {
    kNondecreasing,
    kNonincreasing,
    kStrictlyIncreasing,
    kStrictlyDecreasing,
};

// Patience-sorting lengths: len[i] = longest valid subsequence ending at i.
inline std::vector<std::size_t> monotone_len_end(const std::vector<double>& ys, bool strict) {
    std::vector<std::size_t> len(ys.size());
    std::vector<double> tails;
    tails.reserve(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        auto it = strict ? std::lower_bound(tails.begin(), tails.end(), ys[i])
                         : std::upper_bound(tails.begin(), tails.end(), ys[i]);
        const std::size_t pos = static_cast<std::size_t>(it - tails.begin());
        if (it == tails.end())
            tails.push_back(ys[i]);
        else
            *it = ys[i];
        len[i] = pos + 1;
    }
    return len;
}

// Maximum-cardinality monotone subsequence, lexicographically smallest index
// set among the maxima (ties resolved toward smaller indices). O(n log n).
inline std::vector<std::size_t> longest_monotone_indices(const std::vector<double>& ys,
                                                         MonotoneKind kind) {
    const std::size_t n = ys.size();
    if (n == 0) return {};

    const bool flip = kind == MonotoneKind::kNonincreasing || kind == MonotoneKind::kStrictlyDecreasing;
    const bool strict =
        kind == MonotoneKind::kStrictlyIncreasing || kind == MonotoneKind::kStrictlyDecreasing;

    std::vector<double> v(ys);
    if (flip)
        for (double& y : v) y = -y;

    // len_start[i] for the forward sequence equals len_end at the mirrored
    // position of the reversed, negated sequence.
    std::vector<double> rev(n);
    for (std::size_t i = 0; i < n; ++i) rev[i] = -v[n - 1 - i];
    const std::vector<std::size_t> rev_len = monotone_len_end(rev, strict);
    std::vector<std::size_t> len_start(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        len_start[i] = rev_len[n - 1 - i];
        total = std::max(total, len_start[i]);
    }

    // Greedy left-to-right: always take the earliest index that can still
    // head a chain of the required remaining length.
    std::vector<std::size_t> out;
    out.reserve(total);
    std::size_t needed = total;
    double last = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n && needed > 0; ++i) {
        const bool ok = strict ? v[i] > last : v[i] >= last;
        if (ok && len_start[i] >= needed) {
            out.push_back(i);
            last = v[i];
            --needed;
        }
    }
    return out;
}

}  // namespace dimlab::detail
