#include "functions.hpp"

#include <cmath>

namespace gwp1::analytic {

using detail::adaptive;
using detail::RawSum;
using detail::sum_ratio;
using mp::prec_t;

Complex make_complex(double re, double im, const EvalOptions& opt) {
    return Complex(re, im, static_cast<prec_t>(opt.precision_bits));
}

Complex make_complex(const std::string& re, const std::string& im, const EvalOptions& opt) {
    prec_t p = static_cast<prec_t>(opt.precision_bits);
    return {Real::parse(re, p), Real::parse(im, p)};
}

void require_regular(const Complex& z, const EvalOptions& opt, const char* what) {
    if (mp::distance_to_half_integers(z).to_double() < opt.delta_min)
        throw SingularityError(std::string(what) + ": point within delta_min of Z + 1/2");
}

long working_bits(const EvalOptions& opt, const Complex& s) {
    if (opt.precision_bits < 53) throw ValidationError("precision must be at least 53 bits");
    // partial sums of the s-series reach e^(4|s|) before settling
    return opt.precision_bits + 32 + static_cast<long>(std::ceil(5.8 * mp::abs(s).to_double()));
}

namespace detail {

SeriesValue G_raw(const Complex& z0, const Complex& s0, long target, prec_t w0, long max_terms) {
    return adaptive(
        [&](prec_t w) {
            Complex z = z0.with_prec(w), s2 = s0.with_prec(w) * s0.with_prec(w);
            Real half(0.5, w);
            // t_(m+1)/t_m = 2(2m+1) s^2 / ((m+1)(z-m-1/2)(z+m+1/2))
            return sum_ratio(Complex(Real(1L, w)), [&](long m) {
                Complex d = (z - half - m) * (z + half + m) * (m + 1);
                return s2 * (2 * (2 * m + 1)) / d;
            }, target, max_terms, "G");
        },
        target, w0);
}

SeriesValue Gt_raw(const Complex& z0, const Complex& s0, long target, prec_t w0, long max_terms) {
    return adaptive(
        [&](prec_t w) {
            Complex z = z0.with_prec(w), s2 = s0.with_prec(w) * s0.with_prec(w);
            Real half(0.5, w);
            // t_0 = 1, t_(m+1)/t_m = 2(2m+1) s^2 / ((m+1)(z-m-1/2)(z+m+3/2))
            return sum_ratio(Complex(Real(1L, w)), [&](long m) {
                Complex d = (z - half - m) * (z + half + (m + 1)) * (m + 1);
                return s2 * (2 * (2 * m + 1)) / d;
            }, target, max_terms, "G~");
        },
        target, w0);
}

SeriesValue j_raw(const Complex& a0, const Complex& X0, long target, prec_t w0, long max_terms) {
    return adaptive(
        [&](prec_t w) {
            Complex a = a0.with_prec(w), X = X0.with_prec(w);
            Real half(0.5, w);
            // t_(n+1)/t_n = -X / ((n+1)(a+1/2+n))
            return sum_ratio(Complex(Real(1L, w)), [&](long n) {
                return -X / ((a + half + n) * (n + 1));
            }, target, max_terms, "j");
        },
        target, w0);
}

void require_j_regular(const Complex& a, const EvalOptions& opt) {
    // (a + 1/2)_n vanishes for a in -1/2 - N
    Complex c = a + Real(0.5, a.prec());
    Real n = mp::floor(c.re() + Real(0.5, a.prec()));
    if (n.sign() <= 0 && mp::abs(c - Complex(n)).to_double() < opt.delta_min)
        throw SingularityError("j_a: a + 1/2 is a non-positive integer");
}

Complex J_raw(const Complex& nu, const Complex& y, long target, prec_t w, long max_terms) {
    Complex n = nu.with_prec(w), yy = y.with_prec(w);
    Complex half_y = yy / 2L;
    Complex a = n + Real(0.5, w);
    SeriesValue j = j_raw(a, half_y * half_y, target, w, max_terms);
    // (y/2)^nu / Gamma(nu+1) in log form
    Complex scale = mp::exp(n * mp::log(half_y) - mp::lgamma(n + 1L));
    return scale * j.value;
}

}  // namespace detail

SeriesValue hyper_G(const Complex& z, const Complex& s, const EvalOptions& opt) {
    require_regular(z, opt, "G");
    long p = opt.precision_bits;
    SeriesValue r = detail::G_raw(z, s, p + 16, working_bits(opt, s), opt.max_terms);
    r.value = r.value.with_prec(p);
    r.err_bound = r.err_bound.with_prec(p);
    return r;
}

SeriesValue hyper_Gt(const Complex& z, const Complex& s, const EvalOptions& opt) {
    require_regular(z, opt, "G~");
    require_regular(z + 1L, opt, "G~");
    long p = opt.precision_bits;
    SeriesValue r = detail::Gt_raw(z, s, p + 16, working_bits(opt, s), opt.max_terms);
    r.value = r.value.with_prec(p);
    r.err_bound = r.err_bound.with_prec(p);
    return r;
}

SeriesValue bessel_j_mod(const Complex& a, const Complex& X, const EvalOptions& opt) {
    detail::require_j_regular(a, opt);
    long p = opt.precision_bits;
    SeriesValue r = detail::j_raw(a, X, p + 16, working_bits(opt, mp::sqrt(X)), opt.max_terms);
    r.value = r.value.with_prec(p);
    r.err_bound = r.err_bound.with_prec(p);
    return r;
}

Complex bessel_J(const Complex& nu, const Complex& y, const EvalOptions& opt) {
    if (y.is_zero()) throw SingularityError("J_nu: y = 0 (principal power undefined)");
    detail::require_j_regular(nu + Real(0.5, nu.prec()), opt);
    long p = opt.precision_bits;
    Complex s = y / 2L;
    return detail::J_raw(nu, y, p + 16, working_bits(opt, s), opt.max_terms).with_prec(p);
}

Complex bessel_J_direct(const Complex& nu, const Complex& y, const EvalOptions& opt) {
    if (y.is_zero()) throw SingularityError("J_nu: y = 0 (principal power undefined)");
    long p = opt.precision_bits;
    prec_t w = working_bits(opt, y / 2L);
    Complex n = nu.with_prec(w), half_y = y.with_prec(w) / 2L;
    Complex lh = mp::log(half_y);
    Complex sum(w);
    Real maxa(w);
    Real lf(0L, w);  // log n!
    int quiet = 0;
    for (long k = 0; k < opt.max_terms; ++k) {
        if (k > 0) lf += mp::log(Real(k, w));
        Complex nk = n + (k + 1);
        Complex t = mp::exp((n + 2 * k) * lh - mp::lgamma(nk) - Complex(lf)) * (k % 2 ? -1L : 1L);
        sum += t;
        Real at = mp::abs(t);
        if (at > maxa) maxa = at;
        quiet = at < mp::abs(sum) * detail::tiny(p + 26, w) ? quiet + 1 : 0;
        if (quiet >= 3 && k > mp::abs(half_y).to_double()) return sum.with_prec(p);
    }
    throw ConvergenceError("J_nu direct series: no convergence within the term budget");
}

}  // namespace gwp1::analytic
