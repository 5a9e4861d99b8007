#include "dimlab/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace dimlab::dimension {

BoxCountProfile box_counts(const GridSubset& a, int base_k, int ell_max) {
    validate(a);
    if (base_k < 2) throw std::invalid_argument("box_counts: base_k must be >= 2");
    if (ell_max < 1) throw std::invalid_argument("box_counts: ell_max must be >= 1");

    const std::uint64_t m = a.parent_n - 1;
    std::uint64_t cells = 1;
    for (int l = 0; l < ell_max; ++l) {
        if (cells > m / static_cast<std::uint64_t>(base_k))
            throw std::invalid_argument("box_counts: k^ell_max exceeds the grid resolution");
        cells *= static_cast<std::uint64_t>(base_k);
    }

    BoxCountProfile p;
    p.base_k = base_k;
    p.set_size = a.indices.size();
    p.levels.reserve(static_cast<std::size_t>(ell_max));

    std::uint64_t kl = 1;
    for (int ell = 1; ell <= ell_max; ++ell) {
        kl *= static_cast<std::uint64_t>(base_k);
        // x_i = i/m lies in cell ceil(i*kl/m); a point exactly on a grid line
        // q/kl (other than 0 and 1) also meets cell q+1. Indices ascend, so
        // the touched-cell ids ascend too and distinct ids can be counted on
        // the fly.
        std::size_t count = 0;
        std::uint64_t last = 0;  // cell ids start at 1
        for (std::size_t i : a.indices) {
            const std::uint64_t u = static_cast<std::uint64_t>(i) * kl;
            const std::uint64_t q = u / m;
            const std::uint64_t r = u % m;
            if (r != 0) {
                const std::uint64_t cell = q + 1;
                if (cell != last) {
                    ++count;
                    last = cell;
                }
            } else {
                if (q >= 1 && q != last) {
                    ++count;
                    last = q;
                }
                if (q + 1 <= kl && q + 1 != last) {
                    ++count;
                    last = q + 1;
                }
            }
        }
        p.levels.emplace_back(ell, count);
    }

    for (std::size_t t = 1; t < p.levels.size(); ++t)
        if (p.levels[t].second < p.levels[t - 1].second)
            throw std::logic_error("box_counts: counts must be nondecreasing in ell");
    return p;
}

namespace {

struct Fit {
    double slope = 0.0;
    double r_squared = 1.0;
};

Fit least_squares(const std::vector<double>& u, const std::vector<double>& v, std::size_t lo,
                  std::size_t hi) {
    const std::size_t n = hi - lo + 1;
    double mu = 0.0, mv = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        mu += u[i];
        mv += v[i];
    }
    mu /= static_cast<double>(n);
    mv /= static_cast<double>(n);
    double suu = 0.0, suv = 0.0, svv = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        suu += (u[i] - mu) * (u[i] - mu);
        suv += (u[i] - mu) * (v[i] - mv);
        svv += (v[i] - mv) * (v[i] - mv);
    }
    Fit f;
    f.slope = suu > 0.0 ? suv / suu : 0.0;
    f.r_squared = (suu > 0.0 && svv > 0.0) ? (suv * suv) / (suu * svv) : 1.0;
    return f;
}

}  // namespace

DimensionEstimate estimate_dimension(const BoxCountProfile& profile) {
    const std::size_t n = profile.levels.size();
    if (profile.base_k < 2) throw std::invalid_argument("estimate_dimension: bad base");
    if (n < 4) throw std::invalid_argument("estimate_dimension: need at least 4 levels");

    const double m2 = 2.0 * static_cast<double>(std::max<std::size_t>(profile.set_size, 1));

    // suffix trim: levels where the count has hit ~2|A| carry no scaling;
    // if that covers the whole profile the set resolves completely at every
    // level, which is honest dimension-0 behaviour, so keep the levels
    std::size_t hi = n;
    while (hi > 0) {
        const double c = static_cast<double>(profile.levels[hi - 1].second);
        if (c >= 0.9 * m2)
            --hi;
        else
            break;
    }
    if (hi < 4) hi = n;

    // prefix trim: levels where every cell is hit force slope 1; keep them
    // only if dropping them starves the fit (the set then genuinely fills
    // its cells at all scales)
    std::size_t lo = 0;
    {
        std::size_t first_ok = 0;
        for (std::size_t t = 0; t < hi; ++t) {
            const double kl =
                std::pow(static_cast<double>(profile.base_k), profile.levels[t].first);
            if (static_cast<double>(profile.levels[t].second) >= 0.9 * kl)
                first_ok = t + 1;
            else
                break;
        }
        if (hi - first_ok >= 4) lo = first_ok;
    }

    const std::size_t usable = hi - lo;
    if (usable < 4) throw std::invalid_argument("estimate_dimension: too few usable levels");

    const double logk = std::log(static_cast<double>(profile.base_k));
    std::vector<double> u(n), v(n);
    for (std::size_t t = 0; t < n; ++t) {
        u[t] = static_cast<double>(profile.levels[t].first) * logk;
        v[t] = std::log(static_cast<double>(std::max<std::size_t>(profile.levels[t].second, 1)));
    }

    // limsup/liminf at finite scale: extreme slopes over the windows of
    // length >= 4 that end at the deepest usable level
    double smax = -1e300, smin = 1e300;
    for (std::size_t a = lo; a + 3 < hi; ++a) {
        const double s = least_squares(u, v, a, hi - 1).slope;
        smax = std::max(smax, s);
        smin = std::min(smin, s);
    }

    DimensionEstimate est;
    est.upper_est = std::clamp(smax, 0.0, 1.05);
    est.lower_est = std::clamp(smin, 0.0, 1.05);
    if (est.lower_est > est.upper_est) est.lower_est = est.upper_est;
    est.fit_ell_min = profile.levels[lo].first;
    est.fit_ell_max = profile.levels[hi - 1].first;
    est.r_squared = least_squares(u, v, lo, hi - 1).r_squared;
    est.n_levels_used = static_cast<int>(usable);
    return est;
}

}  // namespace dimlab::dimension
