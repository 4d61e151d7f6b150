#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

// Small numeric building blocks shared across the library: stable sums of
// exponentials, sequence extrapolation, line fits and bracketed maximization.

namespace bgls {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// log(sum(exp(x_i))). Empty input yields -inf. +inf terms dominate.
inline double log_sum_exp(std::span<const double> xs) {
    double m = -kInf;
    for (double x : xs) m = std::max(m, x);
    if (std::isinf(m)) return m;  // all -inf, or one +inf
    double s = 0.0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

inline double log_sum_exp(double x, double y) {
    const double xs[2] = {x, y};
    return log_sum_exp(std::span<const double>(xs, 2));
}

// Neville polynomial extrapolation of (h_i, y_i) to h = 0.
// The h_i must be distinct. Used to take limits of slope sequences whose
// error expands in powers of h.
inline double neville_at_zero(std::span<const double> hs, std::span<const double> ys) {
    if (hs.size() != ys.size() || hs.empty())
        throw std::invalid_argument("neville_at_zero: bad input sizes");
    std::vector<double> t(ys.begin(), ys.end());
    const std::size_t n = t.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i) {
            const double denom = hs[i] - hs[i + k];
            t[i] = (0.0 - hs[i + k]) / denom * t[i] + (hs[i] - 0.0) / denom * t[i + 1];
        }
    return t[0];
}

struct LineFit {
    double slope = kNaN;
    double intercept = kNaN;
    double residual = kNaN;  // rms of fit residuals
};

inline LineFit least_squares_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("least_squares_line: need at least two points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LineFit f;
    const double det = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (f.slope * xs[i] + f.intercept);
        rss += r * r;
    }
    f.residual = std::sqrt(rss / n);
    return f;
}

// Limit of the slope d(y)/d(x) as the sequence runs out, from samples
// (x_m, y_m), m = 1..n along a geometric schedule in x. Two-point slopes
// between consecutive samples typically converge like a series in 1/m;
// Neville extrapolation against h = 1/m removes the leading terms. A
// least-squares fit over the last four points provides the residual
// diagnostic.
struct SlopeLimit {
    double value = kNaN;           // extrapolated limiting slope
    double last = kNaN;            // last raw two-point slope
    double fit_slope = kNaN;       // least-squares slope over last 4 samples
    double fit_residual = kNaN;
    std::vector<double> two_point;
};

inline SlopeLimit slope_limit(std::span<const double> xs, std::span<const double> ys,
                              std::size_t use_last = 6) {
    if (xs.size() != ys.size() || xs.size() < 3)
        throw std::invalid_argument("slope_limit: need at least three samples");
    SlopeLimit out;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        out.two_point.push_back((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]));
    out.last = out.two_point.back();

    const std::size_t n = out.two_point.size();
    const std::size_t k = std::min(use_last, n);
    std::vector<double> hs, vs;
    for (std::size_t i = n - k; i < n; ++i) {
        hs.push_back(1.0 / static_cast<double>(i + 1));  // slope i sits between levels i+1, i+2
        vs.push_back(out.two_point[i]);
    }
    out.value = neville_at_zero(hs, vs);

    const std::size_t m = std::min<std::size_t>(4, xs.size());
    LineFit f = least_squares_line(xs.subspan(xs.size() - m), ys.subspan(ys.size() - m));
    out.fit_slope = f.slope;
    out.fit_residual = f.residual;
    return out;
}

// Golden-section search for the maximum of g on [lo, hi].
// Returns the abscissa; assumes g is unimodal on the bracket (otherwise the
// result is still a local refinement of the best grid point).
template <class G>
double golden_max(G&& g, double lo, double hi, int iters = 120) {
    constexpr double phi = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int i = 0; i < iters && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = g(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace bgls
