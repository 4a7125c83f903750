#pragma once

// Shared summation machinery for the analytic module (not installed).

#include "gwp1/analytic/analytic.hpp"

#include <cmath>

namespace gwp1::analytic::detail {

using mp::prec_t;

struct RawSum {
    Complex sum;
    Real max_abs;
    Real last_abs;
    long terms = 0;
};

inline Real tiny(long bits, prec_t p) { return Real::two_pow(-bits, p); }

// Bits lost to cancellation: log2(max |term| / |sum|), measured against 2^-target for a vanishing sum.
inline double loss_bits(const RawSum& r, long target) {
    double top = mp::log2_abs(r.max_abs);
    double bottom = std::max(mp::log2_abs(mp::abs(r.sum)), -static_cast<double>(target));
    return std::max(0.0, top - bottom);
}

// t_0 = first, t_(n+1) = t_n * ratio(n). Stops once |t| < 2^(-target-10) |partial sum|
// for three consecutive terms that are also decreasing.
template <class Ratio>
RawSum sum_ratio(const Complex& first, Ratio&& ratio, long target, long max_terms, const char* what) {
    prec_t w = first.prec();
    RawSum r{first, mp::abs(first), mp::abs(first), 1};
    Complex t = first;
    if (t.is_zero()) return r;
    Real one(1L, w);
    int quiet = 0;
    for (long n = 0;; ++n) {
        if (n >= max_terms) throw ConvergenceError(std::string(what) + ": no convergence within the term budget");
        Complex q = ratio(n);
        t *= q;
        r.sum += t;
        ++r.terms;
        Real at = mp::abs(t);
        if (at > r.max_abs) r.max_abs = at;
        r.last_abs = at;
        if (t.is_zero()) return r;
        bool small = at < mp::abs(r.sum) * tiny(target + 10, w);
        quiet = small && mp::abs(q) < one ? quiet + 1 : 0;
        if (quiet >= 3) return r;
    }
}

// Runs f(w) at increasing working precision until the cancellation it reports
// leaves at least target + 8 good bits.
template <class F>
SeriesValue adaptive(F&& f, long target, prec_t w0) {
    prec_t w = std::max<prec_t>(w0, target + 16);
    for (int attempt = 0; attempt < 8; ++attempt) {
        RawSum r = f(w);
        double loss = loss_bits(r, target);
        if (static_cast<double>(w) - loss >= static_cast<double>(target + 8)) {
            Real err = r.max_abs * tiny(static_cast<long>(w), w) * (r.terms + 1) + r.last_abs * 2L;
            return SeriesValue{std::move(r.sum), std::move(err), r.terms, static_cast<long>(w)};
        }
        w = std::max<prec_t>(w + 64, static_cast<prec_t>(target + std::ceil(loss) + 48));
    }
    throw ConvergenceError("cancellation exceeds the precision budget");
}

}  // namespace gwp1::analytic::detail
