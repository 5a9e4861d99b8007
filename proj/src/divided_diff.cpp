#include "dimlab/divided_diff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "dimlab/detail/sequence.hpp"

namespace dimlab::divdiff {

namespace {

void check_points(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("divided differences: need equally many xs and ys, at least one");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("divided differences: abscissae must be strictly increasing");
}

double max_abs(const std::vector<double>& ys) {
    double m = 0.0;
    for (double y : ys) m = std::max(m, std::abs(y));
    return m;
}

// Consecutive order-th divided differences, i.e. the order-th table row.
std::vector<double> dd_row(const std::vector<double>& xs, const std::vector<double>& ys,
                           std::size_t order) {
    std::vector<double> row(ys);
    for (std::size_t r = 1; r <= order; ++r) {
        std::vector<double> next(row.size() - 1);
        for (std::size_t i = 0; i + r < xs.size(); ++i)
            next[i] = (row[i + 1] - row[i]) / (xs[i + r] - xs[i]);
        row = std::move(next);
    }
    return row;
}

}  // namespace

DividedDifferenceTable build_table(const std::vector<double>& xs, const std::vector<double>& ys) {
    check_points(xs, ys);
    DividedDifferenceTable t;
    t.xs = xs;
    t.rows.resize(xs.size());
    t.rows[0] = ys;
    for (std::size_t r = 1; r < xs.size(); ++r) {
        t.rows[r].resize(xs.size() - r);
        for (std::size_t i = 0; i + r < xs.size(); ++i)
            t.rows[r][i] = (t.rows[r - 1][i + 1] - t.rows[r - 1][i]) / (xs[i + r] - xs[i]);
    }
    return t;
}

double second_divided_difference(double x1, double y1, double x2, double y2, double x3,
                                 double y3) {
    const double s12 = (y2 - y1) / (x2 - x1);
    const double s23 = (y3 - y2) / (x3 - x2);
    return (s23 - s12) / (x3 - x1);
}

double dd_tolerance(std::size_t order, double max_abs_y, double spread) {
    return 1e-10 * (1.0 + max_abs_y) / std::pow(spread, static_cast<double>(order));
}

bool is_n_convex(const std::vector<double>& xs, const std::vector<double>& ys,
                 std::size_t order, Sign sign) {
    check_points(xs, ys);
    if (order < 1) throw std::invalid_argument("is_n_convex: order must be >= 1");
    if (xs.size() < order + 1)
        throw std::invalid_argument("is_n_convex: need at least order + 1 points");
    const double tol = dd_tolerance(order, max_abs(ys), xs.back() - xs.front());
    for (double d : dd_row(xs, ys, order)) {
        if (sign == Sign::kPos && !(d > tol)) return false;
        if (sign == Sign::kNeg && !(d < -tol)) return false;
    }
    return true;
}

namespace {

// Red/blue coloring of a single consecutive window: red iff dd > tol.
bool window_is_red(double dd, double tol) { return dd > tol; }

// Order-th divided difference of one (order+1)-point window; reduces wy in
// place, so callers refill the scratch buffers per window.
double window_dd(std::vector<double>& wx, std::vector<double>& wy, std::size_t order) {
    for (std::size_t r = 1; r <= order; ++r)
        for (std::size_t i = 0; i + r <= order; ++i)
            wy[i] = (wy[i + 1] - wy[i]) / (wx[i + r] - wx[i]);
    return wy[0];
}

// Exhaustive search over all subsets (m <= 20 guarded by the caller): a
// subset is homogeneous if every consecutive window of its own points has
// one color.
HomogeneousResult exact_homogeneous(const std::vector<double>& xs, const std::vector<double>& ys,
                                    std::size_t order, double tol) {
    const std::size_t m = xs.size();
    std::vector<std::size_t> best;
    Sign best_sign = Sign::kPos;

    std::vector<std::size_t> idx;
    std::vector<double> wx(order + 1), wy(order + 1);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        idx.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (idx.size() < best.size()) continue;

        bool red_ok = true, blue_ok = true;
        for (std::size_t w = 0; w + order < idx.size() && (red_ok || blue_ok); ++w) {
            for (std::size_t t = 0; t <= order; ++t) {
                wx[t] = xs[idx[w + t]];
                wy[t] = ys[idx[w + t]];
            }
            if (window_is_red(window_dd(wx, wy, order), tol))
                blue_ok = false;
            else
                red_ok = false;
        }
        if (!red_ok && !blue_ok) continue;

        if (idx.size() > best.size() || (idx.size() == best.size() && idx < best)) {
            best = idx;
            best_sign = red_ok ? Sign::kPos : Sign::kNeg;
        }
    }
    return {best, best_sign, true};
}

// One-pass greedy: keep appending points whose newest consecutive window has
// the wanted color. No optimality claim.
std::vector<std::size_t> greedy_homogeneous(const std::vector<double>& xs,
                                            const std::vector<double>& ys, std::size_t order,
                                            double tol, Sign sign) {
    std::vector<std::size_t> chosen;
    std::vector<double> wx(order + 1), wy(order + 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        chosen.push_back(i);
        if (chosen.size() >= order + 1) {
            const std::size_t base = chosen.size() - order - 1;
            for (std::size_t t = 0; t <= order; ++t) {
                wx[t] = xs[chosen[base + t]];
                wy[t] = ys[chosen[base + t]];
            }
            const bool red = window_is_red(window_dd(wx, wy, order), tol);
            if ((sign == Sign::kPos) != red) chosen.pop_back();
        }
    }
    return chosen;
}

}  // namespace

HomogeneousResult largest_homogeneous_subset(const std::vector<double>& xs,
                                             const std::vector<double>& ys, std::size_t order,
                                             std::size_t max_exact) {
    check_points(xs, ys);
    if (order < 1) throw std::invalid_argument("largest_homogeneous_subset: order must be >= 1");
    if (xs.size() < order + 1)
        throw std::invalid_argument("largest_homogeneous_subset: need at least order + 1 points");
    if (max_exact > 20)
        throw std::invalid_argument("largest_homogeneous_subset: max_exact capped at 20");

    const double tol = dd_tolerance(order, max_abs(ys), xs.back() - xs.front());

    if (xs.size() <= max_exact) return exact_homogeneous(xs, ys, order, tol);

    if (order == 1) {
        // red = strictly increasing, blue = nonincreasing (zero slopes are blue)
        auto pos = detail::longest_monotone_indices(ys, detail::MonotoneKind::kStrictlyIncreasing);
        auto neg = detail::longest_monotone_indices(ys, detail::MonotoneKind::kNonincreasing);
        if (pos.size() >= neg.size()) return {pos, Sign::kPos, true};
        return {neg, Sign::kNeg, true};
    }
    if (order == 2) {
        auto pos = longest_chain_min_dd2(xs, ys, tol);
        std::vector<double> neg_ys(ys.size());
        for (std::size_t i = 0; i < ys.size(); ++i) neg_ys[i] = -ys[i];
        auto neg = longest_chain_min_dd2(xs, neg_ys, -tol);
        if (pos.size() >= neg.size()) return {pos, Sign::kPos, true};
        return {neg, Sign::kNeg, true};
    }

    auto pos = greedy_homogeneous(xs, ys, order, tol, Sign::kPos);
    auto neg = greedy_homogeneous(xs, ys, order, tol, Sign::kNeg);
    if (pos.size() >= neg.size()) return {pos, Sign::kPos, false};
    return {neg, Sign::kNeg, false};
}

std::vector<std::size_t> longest_chain_min_dd2(const std::vector<double>& xs,
                                               const std::vector<double>& ys, double min_dd) {
    check_points(xs, ys);
    const std::size_t m = xs.size();
    if (m <= 2) {
        std::vector<std::size_t> all(m);
        std::iota(all.begin(), all.end(), std::size_t{0});
        return all;
    }
    if (m > 4096) throw std::invalid_argument("longest_chain_min_dd2: window capped at 4096 points");

    const auto at = [m](std::size_t i, std::size_t j) { return i * m + j; };
    std::vector<std::uint16_t> dp(m * m, 0);
    std::vector<std::int16_t> parent(m * m, -1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) dp[at(i, j)] = 2;

    const auto slope = [&](std::size_t i, std::size_t j) {
        return (ys[j] - ys[i]) / (xs[j] - xs[i]);
    };

    // Middle-point sweep: for each j, predecessors sorted by slope(i,j) are
    // merged into successors sorted by slope(j,k). A triple (i,j,k) is valid
    // iff slope(j,k) - slope(i,j) >= min_dd * (x_k - x_i); with |min_dd| at
    // rounding scale the admissible predecessor frontier is monotone in the
    // successor slope up to a min_dd * diameter sliver.
    std::vector<std::size_t> preds, succs;
    for (std::size_t j = 1; j + 1 < m; ++j) {
        preds.clear();
        succs.clear();
        for (std::size_t i = 0; i < j; ++i) preds.push_back(i);
        for (std::size_t k = j + 1; k < m; ++k) succs.push_back(k);
        std::stable_sort(preds.begin(), preds.end(),
                         [&](std::size_t a, std::size_t b) { return slope(a, j) < slope(b, j); });
        std::stable_sort(succs.begin(), succs.end(),
                         [&](std::size_t a, std::size_t b) { return slope(j, a) < slope(j, b); });

        std::size_t t = 0;
        std::uint16_t best = 0;
        std::int16_t best_i = -1;
        for (std::size_t k : succs) {
            const double sk = slope(j, k);
            while (t < preds.size() &&
                   slope(preds[t], j) <= sk - min_dd * (xs[k] - xs[preds[t]])) {
                if (dp[at(preds[t], j)] > best) {
                    best = dp[at(preds[t], j)];
                    best_i = static_cast<std::int16_t>(preds[t]);
                }
                ++t;
            }
            if (best > 0 && best + 1 > dp[at(j, k)]) {
                dp[at(j, k)] = static_cast<std::uint16_t>(best + 1);
                parent[at(j, k)] = best_i;
            }
        }
    }

    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (dp[at(i, j)] > dp[at(bi, bj)]) {
                bi = i;
                bj = j;
            }

    std::vector<std::size_t> chain{bj, bi};
    while (parent[at(bi, bj)] >= 0) {
        const std::size_t pi = static_cast<std::size_t>(parent[at(bi, bj)]);
        chain.push_back(pi);
        bj = bi;
        bi = pi;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace dimlab::divdiff
