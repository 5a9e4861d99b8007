#pragma once

#include <cstddef>
#include <vector>

#include "dimlab/grid.hpp"

namespace dimlab::restrictions {

// Relative tolerances for running-max and hull-contact detection.
double record_tolerance(const SampledFunction& f);   // 1e-9 * (1 + max|f|)
double contact_tolerance(const SampledFunction& f);  // 1e-9 * (1 + max|f|)

// Indices where f attains its running maximum (within record_tolerance);
// index 0 is always a record.
GridSubset record_set(const SampledFunction& f);

enum class HullMode { kLowerConvex, kUpperConcave };

// g: the minorant/majorant sampled on the same grid; contact: the grid points
// within contact_tolerance of g (hull vertices included by construction);
// max_gap: the largest spacing between consecutive contact abscissae.
struct MinorantResult {
    SampledFunction g;
    GridSubset contact;
    double max_gap = 0.0;
};

// Lower convex hull (resp. upper concave hull) of {(x_i, f(x_i))} by a
// monotone-chain sweep; g is affine between consecutive hull vertices.
MinorantResult convex_minorant(const SampledFunction& f, HullMode mode = HullMode::kLowerConvex);

// Discrete mean-value construction: one pick per gap between consecutive
// points of A, the grid index whose finite-difference derivative is closest
// to the gap's chord slope (ties toward smaller index). Requires f|_A convex
// within the contact-aware tolerance; the returned B has f' nondecreasing
// along it up to grid granularity.
GridSubset convex_to_monotone(const SampledFunction& f, const GridSubset& a);

enum class Direction { kIncreasing, kDecreasing };

// Maximum-cardinality subset with f nondecreasing (kIncreasing) or
// nonincreasing (kDecreasing) along it; patience DP, O(n log n), ties broken
// toward smaller indices. kDecreasing is evaluated as kIncreasing on -f.
GridSubset longest_monotone_subset(const SampledFunction& f, Direction dir);

enum class CurvMode { kConvex, kConcave };

// Maximum-cardinality subset of the index window [lo, hi] whose consecutive
// second divided differences are >= -tol (kConvex) or <= +tol (kConcave).
// Window capped at 4096 points (quadratic DP).
GridSubset longest_convex_subset(const SampledFunction& f, std::size_t lo, std::size_t hi,
                                 CurvMode mode);

// True iff f[x_p1, x_p2, x_p3] < 0, i.e. the middle point lies strictly above
// the chord; equivalent to the parallel-line test through (p2, f(p2)).
bool three_point_concavity_witness(const SampledFunction& f, std::size_t p1, std::size_t p2,
                                   std::size_t p3);

}  // namespace dimlab::restrictions
