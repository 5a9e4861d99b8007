#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dimlab {

// Provenance carried alongside sampled values.
struct Meta {
    std::string generator;
    std::optional<std::uint64_t> seed;
    std::optional<double> holder_alpha;
};

// Values of a real function sampled on the uniform grid x_i = i/(n-1), [0,1].
struct SampledFunction {
    std::size_t n_points = 0;
    std::vector<double> values;
    Meta meta;

    double x(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(n_points - 1); }
    double step() const { return 1.0 / static_cast<double>(n_points - 1); }
};

// Strictly increasing grid indices representing a subset of the parent grid.
// The empty subset is valid.
struct GridSubset {
    std::size_t parent_n = 0;
    std::vector<std::size_t> indices;

    std::size_t size() const { return indices.size(); }
    bool empty() const { return indices.empty(); }
};

// Throw std::invalid_argument on violated invariants (n >= 2, finite values;
// indices strictly increasing and in range).
void validate(const SampledFunction& f);
void validate(const GridSubset& a);

SampledFunction make_sampled(std::vector<double> values, Meta meta = {});
GridSubset make_subset(std::size_t parent_n, std::vector<std::size_t> indices);

double max_abs(const SampledFunction& f);

// Discrete sup over grid pairs of |f(x)-f(y)| / |x-y|^alpha, alpha in (0,1].
// An under-estimate of the true seminorm (sampled pairs only). When
// `subsample` is set and n > 2^13, pairs are restricted to a strided subgrid
// (always containing both endpoints) chosen so the pair count stays <= 2^26;
// the strided value is a further under-estimate.
double holder_seminorm(const SampledFunction& f, double alpha, bool subsample = false);

// Cumulative trapezoid with F(0) = 0; exact on piecewise-affine integrands
// whose breakpoints are grid points. meta.holder_alpha gains one if present.
SampledFunction antiderivative(const SampledFunction& f);

// Central differences in the interior, one-sided at the endpoints; n >= 3.
SampledFunction finite_diff_derivative(const SampledFunction& f);

struct RestrictedValues {
    std::vector<double> xs;
    std::vector<double> ys;
};

// Materialize f|_A as parallel (abscissa, value) arrays, order preserved.
RestrictedValues restrict_values(const SampledFunction& f, const GridSubset& a);

}  // namespace dimlab
