#include "gwp1/analytic/analytic.hpp"

#include <doctest.h>

#include <cmath>

using namespace gwp1;
using namespace gwp1::analytic;
using mp::Real;

namespace {

EvalOptions P(long bits) {
    EvalOptions o;
    o.precision_bits = bits;
    return o;
}

Complex C(double re, double im = 0, long bits = 128) { return Complex(re, im, bits); }

double rel(const Complex& a, const Complex& b) { return mp::rel_diff(a, b).to_double(); }
double absd(const Complex& a) { return mp::abs(a).to_double(); }

double max_rel(const CMat& x, const CMat& y) {
    Real scale = mp::max(mp::max(mp::abs(y.a), mp::abs(y.b)), mp::max(mp::abs(y.c), mp::abs(y.d)));
    CMat d = x - y;
    Real m = mp::max(mp::max(mp::abs(d.a), mp::abs(d.b)), mp::max(mp::abs(d.c), mp::abs(d.d)));
    return (m / scale).to_double();
}

}  // namespace

TEST_CASE("complex Gamma and digamma against classical values") {
    long p = 128;
    Real pi = Real::pi(p);
    CHECK(rel(mp::gamma(C(5)), C(24)) < 1e-36);
    CHECK(rel(mp::gamma(C(0.5)), Complex(mp::sqrt(pi))) < 1e-36);
    // reflection Gamma(z) Gamma(1-z) = pi / sin(pi z) at a complex point
    Complex z = C(0.3, 1.7);
    Complex lhs = mp::gamma(z) * mp::gamma(C(1) - z);
    CHECK(rel(lhs, Complex(pi) / mp::sin(z * pi)) < 1e-35);
    // |Gamma(1+i)|^2 = pi / sinh(pi)
    Complex g = mp::gamma(C(1, 1));
    CHECK(rel(g * g.conj(), Complex(pi / mp::sinh(pi))) < 1e-35);
    // negative real part goes through the shift
    Complex zn = C(-3.3, 0.4);
    CHECK(rel(mp::gamma(zn + 1L), mp::gamma(zn) * zn) < 1e-34);
    // psi(1) = -Euler gamma, psi(z+1) - psi(z) = 1/z
    Real euler(p);
    mpfr_const_euler(euler.raw(), MPFR_RNDN);
    CHECK(rel(mp::digamma(C(1)), Complex(-euler)) < 1e-36);
    Complex w = C(-1.2, 2.5);
    CHECK(rel(mp::digamma(w + 1L) - mp::digamma(w), C(1) / w) < 1e-33);
    CHECK(mp::rgamma(C(-2)).is_zero());
    CHECK_THROWS_AS(mp::lgamma(C(-2)), SingularityError);
}

TEST_CASE("real wrapper precision rules and exact complement") {
    Real a(1.0 / 3.0, 200), b(0.25, 64);
    CHECK((a + b).prec() == 64);
    Real x = Real::parse("123456.789", 128);
    Real y = x.one_minus_exact();
    Real t = x + y;
    CHECK(t == Real(1L, 128));
    Real tiny = Real::two_pow(-300, 128) * 3L;
    CHECK((tiny + tiny.one_minus_exact()) == Real(1L, 128));
    CHECK(Real::parse("-1.25e-3", 64).str() == "-1.25e-3");
    CHECK_THROWS_AS(Real::parse("abc", 64), ValidationError);
}

TEST_CASE("hypergeometric G and G~ identities") {
    auto opt = P(128);
    Complex z = C(0.3, 0.2);
    CHECK(rel(hyper_G(z, C(0), opt).value, C(1)) == 0.0);
    CHECK(rel(hyper_Gt(z, C(0), opt).value, C(1)) == 0.0);
    for (double sv : {0.4, 1.3, 2.7}) {
        Complex s = C(sv, 0.1);
        // G~(z) = (G(z) + G(z+1)) / 2
        Complex lhs = hyper_Gt(z, s, opt).value;
        Complex rhs = (hyper_G(z, s, opt).value + hyper_G(z + 1L, s, opt).value) / 2L;
        CHECK(rel(lhs, rhs) < 1e-34);
        // G~(z+1/2)/(z+1) - G~(z-3/2)/(z-1) = z/(2 s^2) [G(z+1/2) - G(z-1/2)]
        Real h(0.5, 128);
        Complex l2 = hyper_Gt(z + h, s, opt).value / (z + 1L) - hyper_Gt(z - h - 1L, s, opt).value / (z - 1L);
        Complex r2 = z / (s * s * 2L) * (hyper_G(z + h, s, opt).value - hyper_G(z - h, s, opt).value);
        CHECK(rel(l2, r2) < 1e-32);
    }
    SeriesValue g = hyper_G(z, C(1.1), opt);
    CHECK(g.err_bound.to_double() < 1e-36);
    CHECK(g.terms > 5);
}

TEST_CASE("series evaluators reject points near the half-integers") {
    auto opt = P(128);
    CHECK_THROWS_AS(hyper_G(C(0.5), C(1), opt), SingularityError);
    CHECK_THROWS_AS(hyper_G(C(-1.5 + 1e-8), C(1), opt), SingularityError);
    CHECK_NOTHROW(hyper_G(C(-1.5 + 1e-5), C(1), opt));
    CHECK_THROWS_AS(matrix_B(C(2.5), C(1), opt), SingularityError);
    CHECK_THROWS_AS(bessel_j_mod(C(-0.5), C(1), opt), SingularityError);
    CHECK_THROWS_AS(kernel_D(C(0.3), C(0.3), C(1), opt), SingularityError);
    CHECK_THROWS_AS(working_bits(P(40), C(1)), ValidationError);
    EvalOptions few = opt;
    few.max_terms = 3;
    CHECK_THROWS_AS(hyper_G(C(0.2), C(3), few), ConvergenceError);
}

TEST_CASE("Bessel functions") {
    auto opt = P(128);
    CHECK(rel(bessel_j_mod(C(0.7, 0.2), C(0), opt).value, C(1)) == 0.0);
    Real pi = Real::pi(128);
    for (double yv : {0.7, 3.1}) {
        Complex y = C(yv);
        Complex oracle = Complex(mp::sqrt(Real(2L, 128) / (pi * Real(yv, 128))) * mp::sin(Real(yv, 128)));
        CHECK(rel(bessel_J(C(0.5), y, opt), oracle) < 1e-35);
    }
    CHECK(rel(bessel_J(C(0.3), C(1.2), opt), bessel_J_direct(C(0.3), C(1.2), opt)) < 1e-34);
    CHECK(rel(bessel_J(C(-1.7, 0.4), C(2.2, -0.3), opt), bessel_J_direct(C(-1.7, 0.4), C(2.2, -0.3), opt)) < 1e-33);
    // J_(-1/2)(y) = sqrt(2/(pi y)) cos y
    Complex oc = Complex(mp::sqrt(Real(2L, 128) / (pi * Real(1.9, 128))) * mp::cos(Real(1.9, 128)));
    CHECK(rel(bessel_J(C(-0.5), C(1.9), opt), oc) < 1e-35);
}

TEST_CASE("matrix B: unit trace, rank one, both factorizations, Bessel-product identities") {
    auto opt = P(128);
    for (double zr : {-1.3, 0.2, 1.7})
        for (double zi : {-0.5, 0.0, 0.8})
            for (double sv : {0.7, 1.9}) {
                Complex z = C(zr, zi), s = C(sv);
                CMat B = matrix_B(z, s, opt);
                Complex tr = B.trace();
                CHECK(tr.re() == Real(1L, 128));
                CHECK(tr.im().is_zero());
                CHECK(absd(B.det()) < 1e-30);
                CHECK(max_rel(matrix_B_from_u(z, s, opt), B) < 1e-30);
                CHECK(max_rel(matrix_B_from_V(z, s, opt), B) < 1e-30);
                // (1+G)/2, (1-G)/2 and s G~/(z+1/2) as pi s / cos(pi z) times Bessel products
                Real h(0.5, 128), pi = Real::pi(128);
                Complex y = s * 2L;
                Complex pref = s * pi / mp::cos(z * pi);
                Complex G = hyper_G(z, s, opt).value, Gt = hyper_Gt(z, s, opt).value;
                Complex one = C(1);
                CHECK(rel((one + G) / 2L, pref * bessel_J(z - h, y, opt) * bessel_J(-z - h, y, opt)) < 1e-30);
                CHECK(rel((one - G) / 2L, pref * bessel_J(z + h, y, opt) * bessel_J(-z + h, y, opt)) < 1e-30);
                CHECK(rel(s * Gt / (z + h), pref * bessel_J(z + h, y, opt) * bessel_J(-z - h, y, opt)) < 1e-30);
            }
}

TEST_CASE("kernel D: two routes, s = 0 value, D* rescaling") {
    auto opt = P(128);
    Complex a = C(0.3), b = C(-0.45);
    CHECK(rel(kernel_D_series(a, b, C(0), opt).value, C(1) / (a - b)) == 0.0);
    CHECK(rel(kernel_D_products(a, b, C(0), opt), C(1) / (a - b)) < 1e-37);
    {
        auto o64 = P(64);
        Complex a64 = C(0.3, 0, 64), b64 = C(-0.45, 0, 64), s64 = C(1.1, 0, 64);
        CHECK(rel(kernel_D_series(a64, b64, s64, o64).value, kernel_D_products(a64, b64, s64, o64)) < 1e-12);
    }
    for (auto [ar, ai, br, bi, sv] : {std::tuple{0.3, 0.0, -0.45, 0.0, 1.1}, {0.3, 0.2, -1.7, 0.5, 1.1},
                                      {2.2, -0.4, 3.1, 0.6, 0.6}, {-4.1, 0.0, 5.3, 0.0, 2.3}}) {
        Complex A = C(ar, ai), Bv = C(br, bi), s = C(sv);
        CHECK(rel(kernel_D_series(A, Bv, s, opt).value, kernel_D_products(A, Bv, s, opt)) < 1e-30);
        CHECK(rel(kernel_Dstar(A, Bv, s, opt), kernel_Dstar_rescaled(A, Bv, s, opt)) < 1e-30);
        CHECK_NOTHROW(kernel_D(A, Bv, s, opt));
    }
    // integer a - b exercises the Pochhammer factor through zero
    CHECK(rel(kernel_D_series(C(2.3), C(-0.7), C(0.9), opt).value, kernel_D_products(C(2.3), C(-0.7), C(0.9), opt)) < 1e-30);
}

TEST_CASE("H_k: trace, factorized, factorized D*, commutator and difference forms agree") {
    auto opt = P(128);
    Complex s = C(0.8);
    std::vector<Complex> z{C(0.2), C(1.7, -0.3), C(-2.6), C(0.4, 0.9)};
    // two-point example
    Complex h2 = h_k({z[0], z[1]}, s, HRoute::trace, opt);
    Complex ex = -(kernel_D(z[0], z[1], s, opt) * kernel_D(z[1], z[0], s, opt)) - C(1) / ((z[0] - z[1]) * (z[0] - z[1]));
    CHECK(rel(h2, ex) < 1e-30);
    CHECK(rel(h2, h_2_difference_form(z[0], z[1], s, opt)) < 1e-30);
    for (size_t k = 2; k <= 4; ++k) {
        std::vector<Complex> pts(z.begin(), z.begin() + static_cast<long>(k));
        Complex t = h_k(pts, s, HRoute::trace, opt);
        CHECK(rel(t, h_k(pts, s, HRoute::factorized, opt)) < 1e-28);
        CHECK(rel(t, h_k(pts, s, HRoute::factorized_star, opt)) < 1e-28);
        CHECK(rel(t, h_k(pts, s, HRoute::commutator, opt)) < 1e-28);
    }
    // symmetric in the points
    std::vector<Complex> perm{z[2], z[0], z[1]};
    CHECK(rel(h_k({z[0], z[1], z[2]}, s, HRoute::trace, opt), h_k(perm, s, HRoute::trace, opt)) < 1e-30);
    CHECK(parse_route("factorized_star") == HRoute::factorized_star);
    CHECK_THROWS_AS(parse_route("nope"), ValidationError);
}

TEST_CASE("H_2 is regular along the diagonal") {
    auto opt = P(128);
    Complex z = C(0.37, 0.21), s = C(1.3);
    auto H = [&](double d) { return h_k({z, z + C(d)}, s, HRoute::trace, opt); };
    double coarse = absd(H(1e-4) - H(2e-4));
    double fine = absd(H(1e-5) - H(2e-5));
    double Cest = coarse / 1e-4;
    CHECK(Cest < 1e3);
    CHECK(fine <= 1.5 * Cest * 1e-5);
    // near-diagonal trace (commutator switch) against the factorized route
    std::vector<Complex> pts{z, z + C(3e-6, 1e-6), C(-1.1, 0.3)};
    CHECK(rel(h_k(pts, s, HRoute::trace, opt), h_k(pts, s, HRoute::factorized, opt)) < 1e-28);
}

TEST_CASE("one-point functions H_1 and H_1*") {
    auto opt = P(128);
    Complex z = C(0.35, 0.4);
    CHECK(h_1(z, C(0), opt).value.is_zero());
    // s dH_1/ds = G - 1 by a central difference in s
    Complex s = C(1.2, 0.1);
    Real h = Real::two_pow(-40, 128);
    Complex d = (h_1(z, s + h, opt).value - h_1(z, s - h, opt).value) / (h * 2L);
    CHECK(rel(s * d, hyper_G(z, s, opt).value - C(1)) < 1e-20);
    // H_1* = H_1 + log s - psi(1/2 + z)
    for (auto [zr, zi, sv] : {std::tuple{0.35, 0.4, 1.2}, {-1.8, 0.0, 0.6}, {2.9, -0.7, 2.1}}) {
        Complex zz = C(zr, zi), ss = C(sv);
        Complex star = h_1_star(zz, ss, opt);
        Complex rhs = h_1(zz, ss, opt).value + mp::log(ss) - mp::digamma(zz + Real(0.5, 128));
        CHECK(rel(star, rhs) < 1e-30);
    }
}

TEST_CASE("D against its large-(a,b) expansion") {
    // D - 1/(a-b) ~ sum_(p,q) c_pq / (a^(p+1) b^(q+1)) with
    // c_pq = (-1)^(q+1) sum_n s^2n/n! sum_(1<=i,j<=n) (-1)^(i+j) (i+j-2n)_(n-1) (i-1/2)^p (j-1/2)^q / ((i-1)!(j-1)!(n-i)!(n-j)!).
    long prec = 160;
    auto opt = P(prec);
    Complex a = C(60, 0, prec), b = C(-35, 0, prec), s = C(1, 0, prec);
    // c[p][q] for p, q <= 5, accumulated over (n, i, j) once
    std::vector<std::vector<Real>> c(6, std::vector<Real>(6, Real(0L, prec)));
    Real fact_n(1L, prec);
    for (int n = 1; n <= 40; ++n) {
        fact_n = fact_n * static_cast<long>(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Real base(1L, prec);
                for (int l = 0; l < n - 1; ++l) base = base * static_cast<long>(i + j - 2 * n + l);
                if (base.is_zero()) continue;
                if ((i + j) % 2) base = -base;
                base /= Real(factorial(i - 1) * factorial(j - 1) * factorial(n - i) * factorial(n - j), prec) * fact_n;
                Real pi_pow = base;
                for (int p = 0; p <= 5; ++p) {
                    Real pq = pi_pow;
                    for (int q = 0; q <= 5; ++q) {
                        c[static_cast<size_t>(p)][static_cast<size_t>(q)] += pq;
                        pq = pq * Real(j - 0.5, prec);
                    }
                    pi_pow = pi_pow * Real(i - 0.5, prec);
                }
            }
    }
    auto shell = [&](int lo, int hi) {
        Complex acc = C(0, 0, prec);
        for (int p = 0; p <= hi; ++p)
            for (int q = 0; q <= hi; ++q) {
                if (std::max(p, q) < lo) continue;
                Real v = c[static_cast<size_t>(p)][static_cast<size_t>(q)];
                if ((q + 1) % 2) v = -v;
                acc += Complex(v) / (mp::pow(a, p + 1) * mp::pow(b, q + 1));
            }
        return acc;
    };
    Complex exact = kernel_D(a, b, s, opt) - C(1, 0, prec) / (a - b);
    Complex approx = shell(0, 4);
    Complex next = shell(5, 5);
    double err = absd(exact - approx);
    CHECK(err < 2.0 * absd(next));
    CHECK(err < 1e-6 * absd(exact));
}
