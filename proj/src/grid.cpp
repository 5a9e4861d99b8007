#include "dimlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dimlab {

void validate(const SampledFunction& f) {
    if (f.n_points < 2) throw std::invalid_argument("SampledFunction: n_points must be >= 2");
    if (f.values.size() != f.n_points)
        throw std::invalid_argument("SampledFunction: values length must equal n_points");
    for (double v : f.values)
        if (!std::isfinite(v)) throw std::invalid_argument("SampledFunction: values must be finite");
}

void validate(const GridSubset& a) {
    if (a.parent_n < 2) throw std::invalid_argument("GridSubset: parent_n must be >= 2");
    for (std::size_t k = 0; k < a.indices.size(); ++k) {
        if (a.indices[k] >= a.parent_n)
            throw std::invalid_argument("GridSubset: index out of range");
        if (k > 0 && a.indices[k] <= a.indices[k - 1])
            throw std::invalid_argument("GridSubset: indices must be strictly increasing");
    }
}

SampledFunction make_sampled(std::vector<double> values, Meta meta) {
    SampledFunction f;
    f.n_points = values.size();
    f.values = std::move(values);
    f.meta = std::move(meta);
    validate(f);
    return f;
}

GridSubset make_subset(std::size_t parent_n, std::vector<std::size_t> indices) {
    GridSubset a;
    a.parent_n = parent_n;
    a.indices = std::move(indices);
    validate(a);
    return a;
}

double max_abs(const SampledFunction& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double holder_seminorm(const SampledFunction& f, double alpha, bool subsample) {
    validate(f);
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("holder_seminorm: alpha must lie in (0,1]");

    const std::size_t n = f.n_points;

    // stride such that the subsampled grid has at most ~2^13.5 points,
    // i.e. at most 2^26 pairs
    std::size_t stride = 1;
    if (subsample && n > (1u << 13)) {
        const std::size_t target = 11585;  // floor(2^13.5)
        stride = (n + target - 1) / target;
    }

    std::vector<std::size_t> idx;
    idx.reserve(n / stride + 2);
    for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
    if (idx.back() != n - 1) idx.push_back(n - 1);

    double best = 0.0;
    for (std::size_t a = 0; a + 1 < idx.size(); ++a) {
        const double xa = f.x(idx[a]);
        const double va = f.values[idx[a]];
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const double dx = f.x(idx[b]) - xa;
            const double q = std::abs(f.values[idx[b]] - va) / std::pow(dx, alpha);
            if (q > best) best = q;
        }
    }
    return best;
}

SampledFunction antiderivative(const SampledFunction& f) {
    validate(f);
    const double h = f.step();
    SampledFunction out;
    out.n_points = f.n_points;
    out.values.resize(f.n_points);
    out.values[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 1; i < f.n_points; ++i) {
        acc += 0.5 * h * (f.values[i - 1] + f.values[i]);
        out.values[i] = acc;
    }
    out.meta = f.meta;
    if (!f.meta.generator.empty()) out.meta.generator = "antiderivative(" + f.meta.generator + ")";
    if (f.meta.holder_alpha) out.meta.holder_alpha = *f.meta.holder_alpha + 1.0;
    return out;
}

SampledFunction finite_diff_derivative(const SampledFunction& f) {
    validate(f);
    if (f.n_points < 3)
        throw std::invalid_argument("finite_diff_derivative: n_points must be >= 3");
    const double h = f.step();
    const std::size_t n = f.n_points;
    SampledFunction out;
    out.n_points = n;
    out.values.resize(n);
    out.values[0] = (f.values[1] - f.values[0]) / h;
    out.values[n - 1] = (f.values[n - 1] - f.values[n - 2]) / h;
    for (std::size_t i = 1; i + 1 < n; ++i)
        out.values[i] = (f.values[i + 1] - f.values[i - 1]) / (2.0 * h);
    out.meta = f.meta;
    if (!f.meta.generator.empty()) out.meta.generator = "derivative(" + f.meta.generator + ")";
    if (f.meta.holder_alpha && *f.meta.holder_alpha > 1.0)
        out.meta.holder_alpha = *f.meta.holder_alpha - 1.0;
    else
        out.meta.holder_alpha.reset();
    return out;
}

RestrictedValues restrict_values(const SampledFunction& f, const GridSubset& a) {
    validate(f);
    validate(a);
    if (a.parent_n != f.n_points)
        throw std::invalid_argument("restrict_values: subset parent size does not match function grid");
    RestrictedValues out;
    out.xs.reserve(a.indices.size());
    out.ys.reserve(a.indices.size());
    for (std::size_t i : a.indices) {
        out.xs.push_back(f.x(i));
        out.ys.push_back(f.values[i]);
    }
    return out;
}

}  // namespace dimlab
