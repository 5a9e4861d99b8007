#include "dimlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "dimlab/rng.hpp"

namespace dimlab::gen {

namespace {

bool is_pow2_plus_1(std::size_t n) {
    if (n < 3) return false;
    const std::size_t m = n - 1;
    return (m & (m - 1)) == 0;
}

// Autocovariance of standard (unit-spacing) fractional Gaussian noise.
double fgn_autocov(double hurst, std::size_t lag) {
    const double k = static_cast<double>(lag);
    const double h2 = 2.0 * hurst;
    return 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) +
                  std::pow(std::abs(k - 1.0), h2));
}

void check_fbm_params(const FbmParams& p) {
    if (!(p.hurst > 0.0 && p.hurst < 1.0))
        throw std::invalid_argument("fbm: hurst must lie in (0,1)");
    if (!is_pow2_plus_1(p.n_points))
        throw std::invalid_argument("fbm: n_points must be a power of two plus 1");
}

// Scale standard fGn partial sums onto the unit grid: B(i/n) = n^-H sum X_j.
SampledFunction sums_to_path(const std::vector<double>& incr, const FbmParams& p) {
    const std::size_t n = p.n_points - 1;
    const double scale = std::pow(static_cast<double>(n), -p.hurst);
    SampledFunction f;
    f.n_points = p.n_points;
    f.values.resize(p.n_points);
    f.values[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += incr[i];
        f.values[i + 1] = acc * scale;
    }
    f.meta.generator = "fbm";
    f.meta.seed = p.seed;
    f.meta.holder_alpha = p.hurst;
    return f;
}

}  // namespace

SampledFunction fbm_path(const FbmParams& p) {
    check_fbm_params(p);
    const std::size_t n = p.n_points - 1;
    const std::size_t m = 2 * n;

    // First row of the circulant embedding of the fGn covariance matrix.
    std::vector<std::complex<double>> row(m);
    for (std::size_t j = 0; j <= n; ++j) row[j] = fgn_autocov(p.hurst, j);
    for (std::size_t j = n + 1; j < m; ++j) row[j] = row[m - j];

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> lambda(m);
    fft.fwd(lambda, row);

    // The minimal embedding is provably nonnegative definite for fGn; treat
    // anything below a rounding margin as failure rather than clamping it.
    std::vector<double> lam(m);
    double min_l = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        lam[k] = lambda[k].real();
        min_l = std::min(min_l, lam[k]);
    }
    if (min_l < -1e-9 * std::abs(lam[0]))
        throw std::runtime_error("fbm: circulant embedding produced a negative eigenvalue");
    for (double& l : lam) l = std::max(l, 0.0);

    // Hermitian-symmetric Gaussian spectrum; one unnormalized transform then
    // a 1/sqrt(m) scale yields increments with covariance gamma(|i-j|).
    Rng rng(p.seed);
    std::vector<std::complex<double>> w(m);
    w[0] = std::sqrt(lam[0]) * rng.gaussian();
    w[n] = std::sqrt(lam[n]) * rng.gaussian();
    for (std::size_t k = 1; k < n; ++k) {
        const double a = rng.gaussian();
        const double b = rng.gaussian();
        const double s = std::sqrt(lam[k] / 2.0);
        w[k] = std::complex<double>(s * a, s * b);
        w[m - k] = std::conj(w[k]);
    }

    std::vector<std::complex<double>> z(m);
    fft.fwd(z, w);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> incr(n);
    for (std::size_t i = 0; i < n; ++i) incr[i] = z[i].real() * norm;

    return sums_to_path(incr, p);
}

SampledFunction fbm_path_cholesky(const FbmParams& p) {
    check_fbm_params(p);
    const std::size_t n = p.n_points - 1;
    if (n > (1u << 11))
        throw std::invalid_argument("fbm_path_cholesky: n_points - 1 must be <= 2^11");

    // Dense lower Cholesky factor of the fGn covariance (Toeplitz, SPD).
    std::vector<std::vector<double>> chol(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = fgn_autocov(p.hurst, i - j);
            for (std::size_t k = 0; k < j; ++k) s -= chol[i][k] * chol[j][k];
            if (i == j) {
                if (s <= 0.0) throw std::runtime_error("fbm_path_cholesky: factorization failed");
                chol[i][i] = std::sqrt(s);
            } else {
                chol[i][j] = s / chol[j][j];
            }
        }
    }

    Rng rng(p.seed);
    std::vector<double> g(n);
    for (double& v : g) v = rng.gaussian();
    std::vector<double> incr(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) incr[i] += chol[i][j] * g[j];

    SampledFunction f = sums_to_path(incr, p);
    f.meta.generator = "fbm_cholesky";
    return f;
}

SampledFunction integrated_fbm(const FbmParams& p) {
    SampledFunction f = antiderivative(fbm_path(p));
    f.meta.generator = "integrated_fbm";
    f.meta.seed = p.seed;
    f.meta.holder_alpha = 1.0 + p.hurst;
    return f;
}

SampledFunction sawtooth(const SawtoothParams& p, std::size_t n_points) {
    if (p.period_exp < 1 || p.tooth_exp <= p.period_exp)
        throw std::invalid_argument("sawtooth: need tooth_exp > period_exp >= 1");
    if (!(p.depth > 0.0)) throw std::invalid_argument("sawtooth: depth must be positive");
    if (n_points < 2) throw std::invalid_argument("sawtooth: n_points must be >= 2");
    const std::size_t m = n_points - 1;
    const std::size_t tooth_cells = std::size_t{1} << p.tooth_exp;
    if (m % tooth_cells != 0)
        throw std::invalid_argument("sawtooth: 2^tooth_exp must divide n_points - 1");

    const std::size_t period_len = m >> p.period_exp;           // grid steps per period
    const std::size_t tooth_len = m >> p.tooth_exp;             // grid steps per tooth
    const std::size_t corner = period_len - tooth_len;          // descending piece length

    SampledFunction f;
    f.n_points = n_points;
    f.values.resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const std::size_t loc = i % period_len;
        if (loc <= corner)
            f.values[i] = -p.depth * static_cast<double>(loc) / static_cast<double>(corner);
        else
            f.values[i] = -p.depth * static_cast<double>(period_len - loc) / static_cast<double>(tooth_len);
    }
    f.meta.generator = p.mode == SawtoothMode::kMonotoneKiller ? "sawtooth" : "sawtooth_integrated";

    if (p.mode == SawtoothMode::kConvexityKiller) {
        // Corners sit on grid points, so the trapezoid integral is exact.
        SampledFunction g = antiderivative(f);
        g.meta = f.meta;
        return g;
    }
    return f;
}

SampledFunction perturb_within(const SampledFunction& f, double delta, std::uint64_t seed) {
    validate(f);
    if (!(delta > 0.0)) throw std::invalid_argument("perturb_within: delta must be positive");

    constexpr int kBumps = 8;
    Rng rng(seed);
    struct Bump {
        double amp, center, width;
    };
    std::vector<Bump> bumps(kBumps);
    for (Bump& b : bumps) {
        b.amp = rng.uniform(-1.0, 1.0);
        b.center = rng.uniform01();
        b.width = rng.uniform(0.05, 0.3);
    }

    std::vector<double> noise(f.n_points, 0.0);
    double sup = 0.0;
    for (std::size_t i = 0; i < f.n_points; ++i) {
        const double x = f.x(i);
        double v = 0.0;
        for (const Bump& b : bumps) {
            const double t = (x - b.center) / b.width;
            v += b.amp * std::exp(-t * t);
        }
        noise[i] = v;
        sup = std::max(sup, std::abs(v));
    }
    const double scale = sup > 0.0 ? 0.9 * delta / sup : 0.0;

    SampledFunction out = f;
    for (std::size_t i = 0; i < f.n_points; ++i) out.values[i] += scale * noise[i];
    out.meta.generator = f.meta.generator.empty() ? "perturbed" : "perturbed(" + f.meta.generator + ")";
    out.meta.seed = seed;
    return out;
}

GridSubset cantor_prefix(int level, std::size_t n_points) {
    if (level < 1) throw std::invalid_argument("cantor_prefix: level must be >= 1");
    if (n_points < 2) throw std::invalid_argument("cantor_prefix: n_points must be >= 2");
    const std::size_t m = n_points - 1;
    std::size_t p3 = 1;
    for (int l = 0; l < level; ++l) {
        if (p3 > m / 3) throw std::invalid_argument("cantor_prefix: 3^level exceeds grid resolution");
        p3 *= 3;
    }
    if (m % p3 != 0)
        throw std::invalid_argument("cantor_prefix: 3^level must divide n_points - 1");
    const std::size_t block = m / p3;  // grid steps per level-`level` interval
    if (block < 2)
        throw std::invalid_argument("cantor_prefix: need (n_points - 1)/3^level >= 2");

    // Kept interval start offsets in units of 3^-level, built level by level.
    std::vector<std::size_t> starts{0};
    std::size_t width = p3;
    for (int l = 0; l < level; ++l) {
        width /= 3;
        std::vector<std::size_t> next;
        next.reserve(starts.size() * 2);
        for (std::size_t s : starts) {
            next.push_back(s);
            next.push_back(s + 2 * width);
        }
        starts = std::move(next);
    }

    GridSubset a;
    a.parent_n = n_points;
    a.indices.reserve(starts.size() * (block - 1));
    for (std::size_t s : starts) {
        const std::size_t lo = s * block;
        for (std::size_t i = lo + 1; i < lo + block; ++i) a.indices.push_back(i);
    }
    std::sort(a.indices.begin(), a.indices.end());
    validate(a);
    return a;
}

SampledFunction quadratic(double xi, std::size_t n_points) {
    if (!(xi > 0.0)) throw std::invalid_argument("quadratic: xi must be positive");
    if (n_points < 2) throw std::invalid_argument("quadratic: n_points must be >= 2");
    SampledFunction f;
    f.n_points = n_points;
    f.values.resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = f.x(i);
        f.values[i] = 0.5 * xi * x * x;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "quadratic(xi=%.17g)", xi);
    f.meta.generator = buf;
    return f;
}

}  // namespace dimlab::gen
