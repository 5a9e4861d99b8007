#include "dimlab/restrictions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dimlab/detail/sequence.hpp"
#include "dimlab/divided_diff.hpp"

namespace dimlab::restrictions {

double record_tolerance(const SampledFunction& f) { return 1e-9 * (1.0 + max_abs(f)); }
double contact_tolerance(const SampledFunction& f) { return 1e-9 * (1.0 + max_abs(f)); }

GridSubset record_set(const SampledFunction& f) {
    validate(f);
    const double tol = record_tolerance(f);
    GridSubset a;
    a.parent_n = f.n_points;
    double run_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.n_points; ++i) {
        run_max = std::max(run_max, f.values[i]);
        if (f.values[i] >= run_max - tol) a.indices.push_back(i);
    }
    return a;
}

namespace {

// Lower-hull vertex indices of {(x_i, v_i)} via monotone chain. The cross
// test is the exact sign (pop on <= 0): collinear points are dropped from the
// vertex list but recovered by the contact tolerance afterwards, and g never
// rises above f by more than interpolation rounding.
std::vector<std::size_t> lower_hull(const SampledFunction& f, const std::vector<double>& v) {
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < f.n_points; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            const double cross = (f.x(b) - f.x(a)) * (v[i] - v[a]) -
                                 (f.x(i) - f.x(a)) * (v[b] - v[a]);
            if (cross <= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    return hull;
}

}  // namespace

MinorantResult convex_minorant(const SampledFunction& f, HullMode mode) {
    validate(f);
    const bool flip = mode == HullMode::kUpperConcave;

    std::vector<double> v(f.values);
    if (flip)
        for (double& y : v) y = -y;

    const std::vector<std::size_t> hull = lower_hull(f, v);

    MinorantResult out;
    out.g.n_points = f.n_points;
    out.g.values.resize(f.n_points);
    out.g.meta.generator = flip ? "concave_majorant" : "convex_minorant";
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const std::size_t a = hull[h];
        const std::size_t b = hull[h + 1];
        const double slope = (v[b] - v[a]) / (f.x(b) - f.x(a));
        for (std::size_t i = a; i < b; ++i)
            out.g.values[i] = v[a] + slope * (f.x(i) - f.x(a));
    }
    out.g.values[f.n_points - 1] = v[f.n_points - 1];

    const double tol = contact_tolerance(f);
    out.contact.parent_n = f.n_points;
    for (std::size_t i = 0; i < f.n_points; ++i)
        if (std::abs(v[i] - out.g.values[i]) <= tol) out.contact.indices.push_back(i);

    if (flip)
        for (double& y : out.g.values) y = -y;

    out.max_gap = 0.0;
    for (std::size_t k = 1; k < out.contact.indices.size(); ++k)
        out.max_gap = std::max(
            out.max_gap, f.x(out.contact.indices[k]) - f.x(out.contact.indices[k - 1]));
    return out;
}

GridSubset convex_to_monotone(const SampledFunction& f, const GridSubset& a) {
    validate(f);
    validate(a);
    if (a.parent_n != f.n_points)
        throw std::invalid_argument("convex_to_monotone: subset parent size does not match grid");

    if (a.indices.size() <= 1) return a;

    // Convexity pre-check of f|_A. Contact sets deliver f within
    // contact_tolerance of a truly convex function, which can shift a second
    // divided difference by up to 2*eps/(d1*d2); the acceptance band has to
    // absorb exactly that.
    const double eps = contact_tolerance(f);
    const RestrictedValues r = restrict_values(f, a);
    const double tol_dd = divdiff::dd_tolerance(2, max_abs(f), r.xs.back() - r.xs.front());
    for (std::size_t w = 0; w + 2 < r.xs.size(); ++w) {
        const double d1 = r.xs[w + 1] - r.xs[w];
        const double d2 = r.xs[w + 2] - r.xs[w + 1];
        const double dd = divdiff::second_divided_difference(r.xs[w], r.ys[w], r.xs[w + 1],
                                                             r.ys[w + 1], r.xs[w + 2], r.ys[w + 2]);
        if (dd < -(tol_dd + 2.0 * eps / (d1 * d2)))
            throw std::invalid_argument("convex_to_monotone: f restricted to A is not convex");
    }

    const SampledFunction fd = finite_diff_derivative(f);

    GridSubset b;
    b.parent_n = f.n_points;
    for (std::size_t k = 0; k + 1 < a.indices.size(); ++k) {
        const std::size_t p = a.indices[k];
        const std::size_t q = a.indices[k + 1];
        const double chord = (f.values[q] - f.values[p]) / (f.x(q) - f.x(p));
        std::size_t best = p;
        double best_err = std::abs(fd.values[p] - chord);
        for (std::size_t j = p + 1; j <= q; ++j) {
            const double err = std::abs(fd.values[j] - chord);
            if (err < best_err) {
                best = j;
                best_err = err;
            }
        }
        if (b.indices.empty() || b.indices.back() != best) b.indices.push_back(best);
    }
    return b;
}

GridSubset longest_monotone_subset(const SampledFunction& f, Direction dir) {
    validate(f);
    const auto kind = dir == Direction::kIncreasing ? detail::MonotoneKind::kNondecreasing
                                                    : detail::MonotoneKind::kNonincreasing;
    GridSubset a;
    a.parent_n = f.n_points;
    a.indices = detail::longest_monotone_indices(f.values, kind);
    return a;
}

GridSubset longest_convex_subset(const SampledFunction& f, std::size_t lo, std::size_t hi,
                                 CurvMode mode) {
    validate(f);
    if (lo > hi || hi >= f.n_points)
        throw std::invalid_argument("longest_convex_subset: bad window");
    if (hi - lo + 1 > 4096)
        throw std::invalid_argument("longest_convex_subset: window capped at 4096 points");

    std::vector<double> xs, ys;
    xs.reserve(hi - lo + 1);
    ys.reserve(hi - lo + 1);
    const double sgn = mode == CurvMode::kConvex ? 1.0 : -1.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        xs.push_back(f.x(i));
        ys.push_back(sgn * f.values[i]);
    }
    const double tol = divdiff::dd_tolerance(2, max_abs(f), std::max(xs.back() - xs.front(),
                                                                     f.step()));
    const std::vector<std::size_t> chain = divdiff::longest_chain_min_dd2(xs, ys, -tol);

    GridSubset a;
    a.parent_n = f.n_points;
    a.indices.reserve(chain.size());
    for (std::size_t c : chain) a.indices.push_back(lo + c);
    return a;
}

bool three_point_concavity_witness(const SampledFunction& f, std::size_t p1, std::size_t p2,
                                   std::size_t p3) {
    validate(f);
    if (!(p1 < p2 && p2 < p3 && p3 < f.n_points))
        throw std::invalid_argument("three_point_concavity_witness: need p1 < p2 < p3 in range");
    const double dd = divdiff::second_divided_difference(f.x(p1), f.values[p1], f.x(p2),
                                                         f.values[p2], f.x(p3), f.values[p3]);
    return dd < 0.0;
}

}  // namespace dimlab::restrictions
