#pragma once

#include <cstddef>
#include <vector>

namespace dimlab::divdiff {

// Triangular table of divided differences over strictly increasing abscissae;
// rows[r][i] = f[x_i, ..., x_{i+r}], rows[0] = the sampled values.
struct DividedDifferenceTable {
    std::vector<double> xs;
    std::vector<std::vector<double>> rows;

    std::size_t size() const { return xs.size(); }
    double entry(std::size_t i, std::size_t r) const { return rows[r][i]; }
};

DividedDifferenceTable build_table(const std::vector<double>& xs, const std::vector<double>& ys);

// Single divided difference f[x_i, ..., x_{i+r}] of three points, used all
// over the certifiers.
double second_divided_difference(double x1, double y1, double x2, double y2, double x3, double y3);

// Order-n differences amplify value noise by spread^-n, so the neutral band
// around zero has to scale the same way.
double dd_tolerance(std::size_t order, double max_abs_y, double spread);

enum class Sign { kPos, kNeg };

// True iff every consecutive (order+1)-window has its order-th divided
// difference strictly above +tol (kPos) or below -tol (kNeg); values inside
// the tolerance band are neutral and defeat both verdicts.
bool is_n_convex(const std::vector<double>& xs, const std::vector<double>& ys,
                 std::size_t order, Sign sign);

struct HomogeneousResult {
    std::vector<std::size_t> indices;
    Sign sign = Sign::kPos;
    bool exact = true;
};

// Largest subset on which consecutive order-th divided differences are all
// one color: kPos means dd > tol, kNeg means dd <= tol (zeros count as kNeg,
// mirroring the red/blue dichotomy). Exact by enumeration up to max_exact
// points; above that, exact DPs for orders 1 and 2 and a greedy extension
// (exact = false) for order >= 3.
HomogeneousResult largest_homogeneous_subset(const std::vector<double>& xs,
                                             const std::vector<double>& ys,
                                             std::size_t order,
                                             std::size_t max_exact = 16);

// Maximum-cardinality subsequence whose consecutive second divided
// differences are all >= min_dd. min_dd = -tol gives convex chains, +tol
// strictly 2-convex ones; run on -ys for the concave versions.
// O(m^2 log m) time, O(m^2) memory; the only consumers work on windows.
std::vector<std::size_t> longest_chain_min_dd2(const std::vector<double>& xs,
                                               const std::vector<double>& ys,
                                               double min_dd);

}  // namespace dimlab::divdiff
