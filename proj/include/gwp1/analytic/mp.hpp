#pragma once

#include "gwp1/ring/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <string>

namespace gwp1::mp {

using prec_t = mpfr_prec_t;

// MPFR real with its own precision. Binary operations round to the smaller
// precision of the two operands; operations with plain integers/doubles use
// the precision of the MPFR operand.
class Real {
public:
    explicit Real(prec_t p = 128);
    Real(long v, prec_t p);
    Real(int v, prec_t p) : Real(static_cast<long>(v), p) {}
    Real(double v, prec_t p);
    Real(const Rational& v, prec_t p);
    // Decimal or scientific notation, e.g. "-1.25e-3".
    static Real parse(const std::string& text, prec_t p);
    static Real pi(prec_t p);
    static Real two_pow(long e, prec_t p);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    prec_t prec() const { return mpfr_get_prec(v_); }
    // Same value rounded (or exactly extended) to precision p.
    Real with_prec(prec_t p) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Shortest decimal string that rounds back to the value at this precision
    // when digits == 0, otherwise exactly that many significant digits.
    std::string str(int digits = 0) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
    long exponent() const;

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    Real operator*(long n) const;
    Real operator/(long n) const;
    Real operator+(long n) const;
    Real operator-(long n) const;

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    // 1 - x computed exactly (the result precision grows as needed).
    Real one_minus_exact() const;

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
// log2 |x|, roughly; -infinity-like large negative for zero.
double log2_abs(const Real& x);

class Complex {
public:
    explicit Complex(prec_t p = 128) : re_(p), im_(p) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(re), im_(0L, re.prec()) {}
    Complex(double re, double im, prec_t p) : re_(re, p), im_(im, p) {}
    Complex(const Rational& re, prec_t p) : re_(re, p), im_(0L, p) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }
    prec_t prec() const { return std::min(re_.prec(), im_.prec()); }
    Complex with_prec(prec_t p) const { return {re_.with_prec(p), im_.with_prec(p)}; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    Complex operator-() const { return {-re_, -im_}; }
    Complex conj() const { return {re_, -im_}; }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    Complex operator*(const Real& r) const { return {re_ * r, im_ * r}; }
    Complex operator/(const Real& r) const { return {re_ / r, im_ / r}; }
    Complex operator*(long n) const { return {re_ * n, im_ * n}; }
    Complex operator/(long n) const { return {re_ / n, im_ / n}; }
    Complex operator+(long n) const { return {re_ + n, im_}; }
    Complex operator-(long n) const { return {re_ - n, im_}; }
    Complex operator+(const Real& r) const { return {re_ + r, im_}; }
    Complex operator-(const Real& r) const { return {re_ - r, im_}; }

private:
    Real re_, im_;
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
// Principal branch.
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
// log Gamma(z); the imaginary part is only defined modulo 2 pi.
Complex lgamma(const Complex& z);
Complex rgamma(const Complex& z);
Complex gamma(const Complex& z);
Complex digamma(const Complex& z);
// Distance from z to the nearest point of Z + 1/2.
Real distance_to_half_integers(const Complex& z);
// Relative difference |a - b| / max(|a|, |b|, tiny); absolute when both vanish.
Real rel_diff(const Complex& a, const Complex& b);

}  // namespace gwp1::mp
