#pragma once

#include <cstdint>

#include "dimlab/grid.hpp"

namespace dimlab::gen {

struct FbmParams {
    double hurst = 0.5;        // in (0,1)
    std::size_t n_points = 1025;  // must be 2^k + 1
    std::uint64_t seed = 0;
};

// Fractional Brownian motion path with B(0) = 0 and exact grid covariance
// Cov(B(s), B(t)) = (s^2H + t^2H - |t-s|^2H) / 2, synthesized by circulant
// embedding of the increment covariance (spectral method). Deterministic per
// seed. meta.holder_alpha = hurst.
SampledFunction fbm_path(const FbmParams& p);

// Cholesky-factor sampler for the same increment process. O(n^3) setup, so
// restricted to n_points <= 2^11 + 1. Serves as an independent route for
// cross-checking the spectral sampler in tests.
SampledFunction fbm_path_cholesky(const FbmParams& p);

// antiderivative(fbm_path(p)); meta.holder_alpha = 1 + hurst.
SampledFunction integrated_fbm(const FbmParams& p);

enum class SawtoothMode { kMonotoneKiller, kConvexityKiller };

// Periodic piecewise-linear tooth: period 2^-period_exp, zero at period
// multiples, value -depth at (period - 2^-tooth_exp), linear in between.
// kConvexityKiller returns the running integral of that profile instead
// (continuous, piecewise quadratic, concave on the long pieces).
struct SawtoothParams {
    int period_exp = 2;  // M': period 2^-M'
    int tooth_exp = 4;   // M: tooth width 2^-M; must exceed period_exp
    double depth = 1.0;
    SawtoothMode mode = SawtoothMode::kMonotoneKiller;
};

// Requires 2^tooth_exp | (n_points - 1) so all corners land on grid points,
// which makes the sampling (and the trapezoid integral) exact.
SampledFunction sawtooth(const SawtoothParams& p, std::size_t n_points);

// f plus smooth noise of sup-norm 0.9*delta (< delta), built from a handful
// of random low-frequency Gaussian bumps. Deterministic per seed.
SampledFunction perturb_within(const SampledFunction& f, double delta, std::uint64_t seed);

// Grid points interior to the 2^level intervals kept by `level` rounds of
// middle-third removal. Interval endpoints (triadic points j/3^l, l <= level)
// are excluded, so the set meets exactly 2^l triadic cells at every level
// l <= level even under the closed-cell counting convention.
// Requires 3^level | (n_points - 1) and (n_points - 1)/3^level >= 2.
GridSubset cantor_prefix(int level, std::size_t n_points);

// f(x) = (xi/2) x^2, xi > 0; constant second derivative xi.
SampledFunction quadratic(double xi, std::size_t n_points);

}  // namespace dimlab::gen
