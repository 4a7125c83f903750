#include "functions.hpp"

namespace gwp1::analytic {

using mp::prec_t;

namespace detail {

CMat B_raw(const Complex& z0, const Complex& s0, long target, prec_t w, long max_terms) {
    Complex z = z0.with_prec(w), s = s0.with_prec(w);
    Complex G = G_raw(z, s, target, w, max_terms).value;
    Complex Gt0 = Gt_raw(z, s, target, w, max_terms).value;
    Complex Gtm = Gt_raw(z - 1L, s, target, w, max_terms).value;
    Complex one(Real(1L, w));
    Complex b11 = (one + G) / 2L;
    Complex b12 = s * 2L * Gtm / (one - z * 2L);
    Complex b21 = s * 2L * Gt0 / (one + z * 2L);
    return {b11, b12, b21, one - b11};
}

}  // namespace detail

namespace {

CMat round_to(const CMat& m, prec_t p) {
    return m.map([&](const Complex& x) { return x.with_prec(p); });
}

}  // namespace

CMat matrix_B(const Complex& z, const Complex& s, const EvalOptions& opt) {
    require_regular(z, opt, "B");
    prec_t p = static_cast<prec_t>(opt.precision_bits);
    CMat B = round_to(detail::B_raw(z, s, p + 24, static_cast<prec_t>(working_bits(opt, s)), opt.max_terms), p);
    // B22 = 1 - B11 exactly, so B11 + B22 rounds to exactly 1 at any precision
    B.d = Complex(B.a.re().one_minus_exact(), -B.a.im());
    return B;
}

CVec vector_u(const Complex& z, const Complex& s, const EvalOptions& opt) {
    require_regular(z, opt, "u");
    prec_t p = static_cast<prec_t>(opt.precision_bits);
    prec_t w = static_cast<prec_t>(working_bits(opt, s));
    Complex zw = z.with_prec(w), sw = s.with_prec(w);
    Complex X = sw * sw;
    Complex j0 = detail::j_raw(zw, X, p + 24, w, opt.max_terms).value;
    Complex j1 = detail::j_raw(zw + 1L, X, p + 24, w, opt.max_terms).value;
    Complex u2 = sw * j1 / (zw + Real(0.5, w));
    return {j0.with_prec(p), u2.with_prec(p)};
}

CVec vector_V(const Complex& z, const Complex& s, const EvalOptions& opt) {
    require_regular(z, opt, "V");
    prec_t p = static_cast<prec_t>(opt.precision_bits);
    prec_t w = static_cast<prec_t>(working_bits(opt, s));
    Complex zw = z.with_prec(w), y = s.with_prec(w) * 2L;
    Real half(0.5, w);
    Complex v1 = detail::J_raw(zw - half, y, p + 24, w, opt.max_terms);
    Complex v2 = detail::J_raw(zw + half, y, p + 24, w, opt.max_terms);
    return {v1.with_prec(p), v2.with_prec(p)};
}

namespace {

CMat outer(const CVec& x, const CVec& y) { return {x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]}; }

EvalOptions raised(const EvalOptions& opt, long extra) {
    EvalOptions o = opt;
    o.precision_bits += extra;
    return o;
}

}  // namespace

CMat matrix_B_from_u(const Complex& z, const Complex& s, const EvalOptions& opt) {
    EvalOptions o = raised(opt, 24);
    CMat B = outer(vector_u(z, s, o), vector_u(-z, s, o));
    return round_to(B, static_cast<prec_t>(opt.precision_bits));
}

CMat matrix_B_from_V(const Complex& z, const Complex& s, const EvalOptions& opt) {
    EvalOptions o = raised(opt, 24);
    prec_t w = static_cast<prec_t>(o.precision_bits);
    Complex sw = s.with_prec(w);
    Complex pref = sw * Real::pi(w) / mp::cos(z.with_prec(w) * Real::pi(w));
    CMat B = outer(vector_V(z, s, o), vector_V(-z, s, o));
    B = B.map([&](const Complex& x) { return x * pref; });
    return round_to(B, static_cast<prec_t>(opt.precision_bits));
}

}  // namespace gwp1::analytic
