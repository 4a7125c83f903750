#pragma once

#include "gwp1/analytic/mp.hpp"
#include "gwp1/errors.hpp"
#include "gwp1/ring/mat2.hpp"

#include <array>
#include <string>
#include <vector>

namespace gwp1::analytic {

using mp::Complex;
using mp::Real;

struct EvalOptions {
    long precision_bits = 128;
    double delta_min = 1e-6;   // minimal distance of every z from Z + 1/2
    long max_terms = 1000000;
};

// A series value with a crude absolute error bound (truncation + rounding).
struct SeriesValue {
    Complex value;
    Real err_bound;
    long terms = 0;
    long working_bits = 0;
};

Complex make_complex(double re, double im, const EvalOptions& opt);
Complex make_complex(const std::string& re, const std::string& im, const EvalOptions& opt);

// Throws SingularityError when z is within delta_min of Z + 1/2.
void require_regular(const Complex& z, const EvalOptions& opt, const char* what);

// G(z;s) = sum_m C(2m,m) s^2m / (z-m+1/2)_2m.
SeriesValue hyper_G(const Complex& z, const Complex& s, const EvalOptions& opt = {});
// G~(z;s) = sum_m C(2m,m) (z+1/2) s^2m / (z-m+1/2)_(2m+1).
SeriesValue hyper_Gt(const Complex& z, const Complex& s, const EvalOptions& opt = {});
// j_a(X) = sum_n (-X)^n / (n!^2 C(n+a-1/2, n)).
SeriesValue bessel_j_mod(const Complex& a, const Complex& X, const EvalOptions& opt = {});
// J_nu(y) = (y/2)^nu / Gamma(nu+1) j_(nu+1/2)(y^2/4), principal power.
Complex bessel_J(const Complex& nu, const Complex& y, const EvalOptions& opt = {});
// Independent route for J_nu: the standard series sum_n (-1)^n (y/2)^(2n+nu) / (n! Gamma(n+nu+1)),
// each term through its own Gamma value.
Complex bessel_J_direct(const Complex& nu, const Complex& y, const EvalOptions& opt = {});

using CMat = Mat2<Complex>;
using CVec = std::array<Complex, 2>;

// B(z;s) from G and G~; B22 = 1 - B11 is stored exactly, so tr B == 1 holds bit for bit.
CMat matrix_B(const Complex& z, const Complex& s, const EvalOptions& opt = {});
// u(z) = (j_z(s^2), s/(z+1/2) j_(z+1)(s^2)).
CVec vector_u(const Complex& z, const Complex& s, const EvalOptions& opt = {});
// V(z) = (J_(z-1/2)(2s), J_(z+1/2)(2s)).
CVec vector_V(const Complex& z, const Complex& s, const EvalOptions& opt = {});
// u(z) u(-z)^T and (pi s / cos pi z) V(z) V(-z)^T.
CMat matrix_B_from_u(const Complex& z, const Complex& s, const EvalOptions& opt = {});
CMat matrix_B_from_V(const Complex& z, const Complex& s, const EvalOptions& opt = {});

// D(a,b;s) from the j-products: [j_-a j_b + X/((1/2-a)(1/2+b)) j_(1-a) j_(1+b)] / (a-b).
Complex kernel_D_products(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt = {});
// D(a,b;s) = sum_n (a-b-2n+1)_(n-1) s^2n / (n! (1/2-a)_n (b+1/2)_n), (a-b+1)_(-1) := 1/(a-b).
SeriesValue kernel_D_series(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt = {});
// Series value, after checking it against the product route (RouteDisagreement otherwise).
Complex kernel_D(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt = {});
// D*(a,b;s) = [J_(-a-1/2) J_(b-1/2) + J_(1/2-a) J_(1/2+b)](2s) / (a-b).
Complex kernel_Dstar(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt = {});
// s^(b-a-1) / (Gamma(1/2-a) Gamma(1/2+b)) D(a,b;s).
Complex kernel_Dstar_rescaled(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt = {});

enum class HRoute {
    trace,            // -sum over cyclic orders of tr(prod B) / prod (z_i - z_i+1)
    factorized,       // -sum over cyclic orders of prod D(z_i, z_i+1)
    factorized_star,  // -(pi s)^k / prod cos(pi z_i) sum prod D*(z_i, z_i+1)
    commutator,       // difference-quotient form regular on the diagonals
};
const char* route_name(HRoute r);
HRoute parse_route(const std::string& name);

// H_k(z_1..z_k; s), k >= 2, including the -1/(z1-z2)^2 term for k = 2.
// The trace route switches to the commutator form when two points are closer than 1e-3.
Complex h_k(const std::vector<Complex>& z, const Complex& s, HRoute route, const EvalOptions& opt = {});
// H_2 as -1/2 tr[(B(z1) - B(z2))/(z1 - z2)]^2.
Complex h_2_difference_form(const Complex& z1, const Complex& z2, const Complex& s, const EvalOptions& opt = {});

// H_1(z;s) = sum_(n>=1) (2n-1)! s^2n / (n!^2 (z-n+1/2)_2n).
SeriesValue h_1(const Complex& z, const Complex& s, const EvalOptions& opt = {});
// H_1*(z;s) = (pi s / cos pi z)(J_(-1/2-z) dJ_(-1/2+z)/dz + J_(1/2-z) dJ_(1/2+z)/dz) at 2s,
// with the order derivative by a central difference of step 2^(-w/3) at working precision w.
Complex h_1_star(const Complex& z, const Complex& s, const EvalOptions& opt = {});

// Working precision used for an evaluation requested at opt.precision_bits.
long working_bits(const EvalOptions& opt, const Complex& s);

}  // namespace gwp1::analytic
