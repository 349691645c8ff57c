#pragma once

#include <cstddef>
#include <span>

namespace jitterdisc {

/// x^e by repeated multiplication, e >= 0.
inline double pow_int(double x, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}

/// v / m^e by repeated division; never forms m^e, so it stays in range for
/// any exponent and is exact when m is a power of two.
inline double div_pow_int(double v, double m, int e) {
    for (int k = 0; k < e; ++k) v /= m;
    return v;
}

/// Binomial coefficient as a double (exact for n <= 56).
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / j;
    return r;
}

/// Deterministic tree reduction of term(lo), ..., term(hi-1). Rounding error
/// grows like log(n) instead of n for same-sign terms.
template <class Term>
double pairwise_sum(std::size_t lo, std::size_t hi, const Term& term) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t k = lo; k < hi; ++k) s += term(k);
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

inline double pairwise_sum(std::span<const double> values) {
    return pairwise_sum(std::size_t{0}, values.size(),
                        [&](std::size_t k) { return values[k]; });
}

/// Slope of the least-squares line through (x[k], y[k]).
inline double least_squares_slope(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sxy += (x[k] - mx) * (y[k] - my);
        sxx += (x[k] - mx) * (x[k] - mx);
    }
    return sxy / sxx;
}

}  // namespace jitterdisc
