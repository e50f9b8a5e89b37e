#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace quadmatch {

// Failure of a numerical procedure (quadrature non-convergence, missing
// root bracket, simulation time cap). Mapped to exit code 2 by the CLI.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Simpson quadrature with interval-splitting tolerance `tol`.
// Throws numeric_error if the recursion cannot reach the tolerance within
// `max_depth` levels.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 60);

// Order-independent pairwise sum: the input is sorted before the pairwise
// reduction, so any permutation of the same multiset gives identical bits.
double pairwise_sum(std::vector<double> values);

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;  // sqrt of (sample variance / n); 0 for n < 2
};

// Mean and standard error with the pairwise reduction above.
MeanStderr mean_stderr(std::span<const double> samples);

// Unbiased sample variance (n-1 denominator), pairwise-summed.
double sample_variance(std::span<const double> samples);

// Pearson correlation coefficient.
double correlation(std::span<const double> xs, std::span<const double> ys);

// Linearly interpolated quantile (sorted copy taken internally), q in [0,1].
double quantile(std::span<const double> samples, double q);

// Two-sample Kolmogorov-Smirnov test. Returns the statistic D and the
// asymptotic p-value (Kolmogorov distribution with the standard
// small-sample correction).
struct KsResult {
    double d = 0.0;
    double p_value = 1.0;
};
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

// --- implementation ---

namespace detail {

template <typename F>
double simpson_rec(F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw numeric_error("adaptive_simpson: tolerance not reached at maximum depth");
    }
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth) {
    if (a == b) {
        return 0.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace quadmatch
