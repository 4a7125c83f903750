#include "gwp1/analytic/mp.hpp"

#include "gwp1/errors.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

namespace gwp1::mp {

Real::Real(prec_t p) { mpfr_init2(v_, p); mpfr_set_zero(v_, 1); }
Real::Real(long v, prec_t p) { mpfr_init2(v_, p); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(double v, prec_t p) { mpfr_init2(v_, p); mpfr_set_d(v_, v, MPFR_RNDN); }
Real::Real(const Rational& v, prec_t p) { mpfr_init2(v_, p); mpfr_set_q(v_, v.raw().get_mpq_t(), MPFR_RNDN); }

Real Real::parse(const std::string& text, prec_t p) {
    Real r(p);
    if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw ValidationError("cannot parse real number '" + text + "'");
    return r;
}

Real Real::pi(prec_t p) {
    Real r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::two_pow(long e, prec_t p) {
    Real r(1L, p);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

Real::Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::with_prec(prec_t p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    auto digits_of = [&](size_t n) {
        std::unique_ptr<char, void (*)(char*)> s(mpfr_get_str(nullptr, &e, 10, n, v_, MPFR_RNDN), mpfr_free_str);
        return std::string(s.get());
    };
    std::string m;
    if (digits > 0) {
        m = digits_of(static_cast<size_t>(digits));
    } else {
        // fewest digits that read back to the same value
        size_t full = mpfr_get_str_ndigits(10, prec());
        for (size_t n = 2; n <= full; ++n) {
            m = digits_of(n);
            Real back(prec());
            std::string sci = m + "e" + std::to_string(static_cast<long>(e) - static_cast<long>(n));
            if (mpfr_set_str(back.v_, sci.c_str(), 10, MPFR_RNDN) == 0 && mpfr_equal_p(back.v_, v_)) break;
        }
    }
    bool neg = m[0] == '-';
    if (neg) m.erase(0, 1);
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    std::string out = neg ? "-" : "";
    out += m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

long Real::exponent() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {

template <class Op>
void binop(Real& a, const Real& b, Op op) {
    prec_t p = std::min(a.prec(), b.prec());
    if (p == a.prec()) {
        op(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
    } else {
        Real r(p);
        op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
        a = std::move(r);
    }
}

}  // namespace

Real& Real::operator+=(const Real& o) { binop(*this, o, mpfr_add); return *this; }
Real& Real::operator-=(const Real& o) { binop(*this, o, mpfr_sub); return *this; }
Real& Real::operator*=(const Real& o) { binop(*this, o, mpfr_mul); return *this; }
Real& Real::operator/=(const Real& o) { binop(*this, o, mpfr_div); return *this; }

Real Real::operator*(long n) const { Real r(prec()); mpfr_mul_si(r.v_, v_, n, MPFR_RNDN); return r; }
Real Real::operator/(long n) const { Real r(prec()); mpfr_div_si(r.v_, v_, n, MPFR_RNDN); return r; }
Real Real::operator+(long n) const { Real r(prec()); mpfr_add_si(r.v_, v_, n, MPFR_RNDN); return r; }
Real Real::operator-(long n) const { Real r(prec()); mpfr_sub_si(r.v_, v_, n, MPFR_RNDN); return r; }

Real Real::one_minus_exact() const {
    if (is_zero()) return Real(1L, prec());
    // bits from the top of max(|x|, 1) down to the last bit of x
    long top = std::max<long>(exponent(), 1);
    long bottom = std::min<long>(exponent() - static_cast<long>(prec()), 0);
    Real r(static_cast<prec_t>(top - bottom + 2));
    int inexact = mpfr_ui_sub(r.v_, 1, v_, MPFR_RNDN);
    if (inexact != 0) throw std::logic_error("one_minus_exact rounded");
    return r;
}

#define GWP1_MP_UNARY(name, fn)              \
    Real name(const Real& x) {               \
        Real r(x.prec());                    \
        fn(r.raw(), x.raw(), MPFR_RNDN);     \
        return r;                            \
    }
GWP1_MP_UNARY(abs, mpfr_abs)
GWP1_MP_UNARY(sqrt, mpfr_sqrt)
GWP1_MP_UNARY(exp, mpfr_exp)
GWP1_MP_UNARY(log, mpfr_log)
GWP1_MP_UNARY(sin, mpfr_sin)
GWP1_MP_UNARY(cos, mpfr_cos)
GWP1_MP_UNARY(sinh, mpfr_sinh)
GWP1_MP_UNARY(cosh, mpfr_cosh)
#undef GWP1_MP_UNARY

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(std::min(x.prec(), y.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(std::min(x.prec(), y.prec()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

double log2_abs(const Real& x) {
    if (x.is_zero()) return -1e300;
    long e;
    double m = mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Complex& Complex::operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
Complex& Complex::operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
Complex& Complex::operator*=(const Complex& o) {
    Real r = re_ * o.re_ - im_ * o.im_;
    Real i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}
Complex& Complex::operator/=(const Complex& o) {
    if (o.is_zero()) throw SingularityError("complex division by zero");
    Real d = o.re_ * o.re_ + o.im_ * o.im_;
    Real r = (re_ * o.re_ + im_ * o.im_) / d;
    Real i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

Complex log(const Complex& z) {
    if (z.is_zero()) throw SingularityError("log of zero");
    return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
    if (z.is_zero()) return z;
    Real r = abs(z);
    if (z.re().sign() >= 0) {
        Real t = sqrt((r + z.re()) / 2L);
        return {t, z.im() / (t * 2L)};
    }
    Real t = sqrt((r - z.re()) / 2L);
    Real re = abs(z.im()) / (t * 2L);
    return {re, z.im().sign() < 0 ? -t : t};
}

Complex pow(const Complex& z, const Complex& w) {
    if (z.is_zero()) {
        if (w.re().sign() > 0) return Complex(z.prec());
        throw SingularityError("zero to a non-positive power");
    }
    return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
    if (n < 0) {
        Complex one(Real(1L, z.prec()));
        return one / pow(z, -n);
    }
    Complex r(Real(1L, z.prec()));
    Complex b = z;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Complex sin(const Complex& z) { return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())}; }
Complex cos(const Complex& z) { return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))}; }

namespace {

// B_2k as an exact rational, from sum_{j<=m} C(m+1, j) B_j = 0; the table grows on demand.
Rational even_bernoulli(size_t k) {
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    for (long m = static_cast<long>(table.size()); m <= static_cast<long>(2 * k); ++m) {
        Rational s(0);
        for (long j = 0; j < m; ++j)
            if (j == 1 || j % 2 == 0) s += binomial(m + 1, j) * table[static_cast<size_t>(j)];
        table.push_back(m > 1 && m % 2 ? Rational(0) : -s / Rational(m + 1));
    }
    return table[2 * k];
}

// Shift count n so that Re(z + n) >= R, with R large enough for the asymptotic
// series below to reach 2^-p in a few dozen terms.
long shift_for(const Complex& z, prec_t p) {
    double R = static_cast<double>(p) / 2.0 + 16.0;
    double x = z.re().to_double();
    return x >= R ? 0 : static_cast<long>(std::ceil(R - x));
}

void check_pole(const Complex& z) {
    Real n = floor(z.re() + Real(0.5, z.prec()));
    if (n.sign() <= 0 && (abs(z - Complex(n)) < Real::two_pow(-static_cast<long>(z.prec()) / 2, z.prec())))
        throw SingularityError("Gamma function pole at a non-positive integer");
}

}  // namespace

Complex lgamma(const Complex& z0) {
    check_pole(z0);
    prec_t p = z0.prec();
    prec_t wp = p + 32;
    Complex z = z0.with_prec(wp);
    long n = shift_for(z, p);
    // Gamma(z) = Gamma(z + n) / prod_{k<n} (z + k)
    Complex prod(Real(1L, wp));
    Complex logsum(wp);
    for (long k = 0; k < n; ++k) {
        prod *= z + k;
        // keep the running product in range; logs of pieces only shift Im by 2 pi multiples
        if (prod.re().exponent() > 4096 || prod.im().exponent() > 4096) {
            logsum += log(prod);
            prod = Complex(Real(1L, wp));
        }
    }
    logsum += log(prod);
    Complex w = z + n;
    // log Gamma(w) ~ (w - 1/2) log w - w + log(2 pi)/2 + sum B_2k / (2k (2k-1) w^(2k-1))
    Real half(0.5, wp);
    Complex lw = log(w);
    Complex acc = (w - half) * lw - w + Complex(log(Real::pi(wp) * 2L) / 2L);
    Complex winv = Complex(Real(1L, wp)) / w;
    Complex w2 = winv * winv;
    Complex pw = winv;
    Real tol = Real::two_pow(-static_cast<long>(wp), wp) * max(abs(acc), Real(1L, wp));
    for (size_t k = 1;; ++k) {
        Complex t = pw * Real(even_bernoulli(k) / Rational(static_cast<long>(2 * k * (2 * k - 1))), wp);
        acc += t;
        if (abs(t) < tol) break;
        if (k > 400) throw ConvergenceError("log-Gamma asymptotic series did not converge");
        pw *= w2;
    }
    return (acc - logsum).with_prec(p);
}

Complex gamma(const Complex& z) { return exp(lgamma(z)); }

Complex rgamma(const Complex& z) {
    // 1/Gamma vanishes at the poles
    Real n = floor(z.re() + Real(0.5, z.prec()));
    if (n.sign() <= 0 && (z - Complex(n)).is_zero()) return Complex(z.prec());
    return exp(-lgamma(z));
}

Complex digamma(const Complex& z0) {
    check_pole(z0);
    prec_t p = z0.prec();
    prec_t wp = p + 32;
    Complex z = z0.with_prec(wp);
    long n = shift_for(z, p);
    Complex corr(wp);
    Complex one(Real(1L, wp));
    for (long k = 0; k < n; ++k) corr += one / (z + k);
    Complex w = z + n;
    // psi(w) ~ log w - 1/(2w) - sum B_2k / (2k w^2k)
    Complex winv = one / w;
    Complex acc = log(w) - winv / 2L;
    Complex w2 = winv * winv;
    Complex pw = w2;
    Real tol = Real::two_pow(-static_cast<long>(wp), wp) * max(abs(acc), Real(1L, wp));
    for (size_t k = 1;; ++k) {
        Complex t = pw * Real(even_bernoulli(k) / Rational(static_cast<long>(2 * k)), wp);
        acc -= t;
        if (abs(t) < tol) break;
        if (k > 400) throw ConvergenceError("digamma asymptotic series did not converge");
        pw *= w2;
    }
    return (acc - corr).with_prec(p);
}

Real distance_to_half_integers(const Complex& z) {
    Real h(0.5, z.prec());
    Real n = floor(z.re());  // nearest half-integer is n + 1/2
    return abs(z - Complex(n + h));
}

Real rel_diff(const Complex& a, const Complex& b) {
    prec_t p = std::min(a.prec(), b.prec());
    Real scale = max(abs(a), abs(b));
    Real d = abs(a - b);
    if (scale.is_zero()) return d;
    return d / max(scale, Real::two_pow(-static_cast<long>(p), p));
}

}  // namespace gwp1::mp
