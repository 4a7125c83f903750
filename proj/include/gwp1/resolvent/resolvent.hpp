#pragma once

#include "gwp1/ring/mat2.hpp"
#include "gwp1/ring/multipoly.hpp"
#include "gwp1/ring/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwp1 {

using PolySeries = MultiSeries<MultiPoly>;

const VarSetPtr& s_vars();   // {s}
const VarSetPtr& ne_vars();  // {n, eps}

// Resolvent of the discrete chain in recursion form:
//   alpha_n = sum_j a[j] lambda^(-j-1),  gamma_n = sum_j c[j] lambda^(-j-1),
// with a[j], c[j] polynomials in (n, eps). Entries are kept for j = 0..order-1,
// so the series are exact through lambda^-order.
struct RecursionResolvent {
    int order = 0;
    std::vector<MultiPoly> a, c;

    PolySeries alpha() const;
    PolySeries gamma() const;
    // gamma_{n+1}, i.e. c[j] with n -> n+1; the (1,2) entry is -gamma_{n+1}.
    PolySeries gamma_next() const;
};

// c_{n,j} = eps (n - 1/2) c_{n,j-1} + a_{n,j-1} + a_{n-1,j-1}
// a_{n,j} = sum_{i<j} (c_{n,i} c_{n+1,j-1-i} - a_{n,i} a_{n,j-1-i})
// from a_{n,0} = 0, c_{n,0} = c0 (c0 = 1 is the physical initial value;
// other values exist only to exercise the mismatch path).
RecursionResolvent recursion_resolvent(int N, const Rational& c0 = Rational(1));

// Residual of the relation
//   a_{n,j} - a_{n+1,j} + eps(n + 1/2)(a_{n+1,j-1} - a_{n,j-1}) + c_{n+2,j-1} - c_{n,j-1}
// for j = 1..order-1; each entry must vanish.
std::vector<MultiPoly> recursion_shift_residual(const RecursionResolvent& r);
// Coefficients of alpha + alpha^2 - gamma_n gamma_{n+1} at lambda^-1..lambda^-order.
std::vector<MultiPoly> recursion_quadratic_residual(const RecursionResolvent& r);

// M(z; s) = [[1 + alpha, Q - P], [Q + P, -alpha]] as series in 1/z over Q[s].
struct ResolventSeries {
    int order = 0;
    PolySeries alpha, P, Q;

    Mat2<PolySeries> matrix() const;
};

enum class Exec { parallel, serial };

// Finite triple sums for alpha, P, Q through z^-N. The parallel and serial
// paths evaluate the same per-order sums; the serial one is the reference.
ResolventSeries closed_form_M(int N, Exec mode = Exec::parallel);
// Single coefficients of the closed form (index = power of 1/z).
MultiPoly closed_form_alpha_coeff(int index);
MultiPoly closed_form_P_coeff(int index);
MultiPoly closed_form_Q_coeff(int index);

// Builds a ResolventSeries from a given alpha alone through
//   c(z) = s (1 + a(z) + a(z+1)) / (z + 1/2),   b(z) = -c(z-1).
ResolventSeries resolvent_from_alpha(const PolySeries& alpha);

// Left side of the third-order scalar difference equation for a(z) = alpha:
//   s^2 [(1 + a(z) + a(z+1))/(z + 1/2) - (1 + a(z-2) + a(z-1))/(z - 3/2)] + (z - 1/2)(a(z-1) - a(z)).
// Returned with its own truncation order (N - 1 for input order N).
PolySeries scalar_difference_residual(const PolySeries& alpha);

// M(z-1) A(z) - A(z) M(z) with A(z) = [[z - 1/2, -s], [s, 0]], valid through N - 1.
Mat2<PolySeries> matrix_difference_residual(const Mat2<PolySeries>& M);

PolySeries series_det(const Mat2<PolySeries>& M);

struct RouteMismatch {
    std::string entry;
    int index;
    std::string recursion_value;
    std::string closed_form_value;
};

struct CrossCheckReport {
    int order = 0;
    int coefficients_compared = 0;
    bool pass = true;
    std::optional<RouteMismatch> first_mismatch;
};

// Maps the recursion output to (x, eps) via n = x/eps and compares against the
// closed form after z = (lambda - x)/eps, s = 1/eps, through lambda^-N.
CrossCheckReport cross_check_routes(const RecursionResolvent& rec, const ResolventSeries& closed, int N);
CrossCheckReport cross_check_routes(int N);

// Polynomial in (n, eps) -> polynomial in (x, eps) with n = x/eps.
MultiPoly n_to_x(const MultiPoly& p);

// Formal large-q solution W of the lambda-form difference equation.
// Stored in the real gauge T W T^-1 with T = diag(1, i) and expansion variable
// sigma = i q^(-1/2), where all coefficients lie in Q[lambda, eps]:
//   W = [[1/2 - sum (-1)^m c_m sigma^(2m+1),  sum (-1)^m d_m(lambda - eps) sigma^(2m)],
//        [sum (-1)^m d_m(lambda) sigma^(2m),  1/2 + sum (-1)^m c_m sigma^(2m+1)]]
//   c_m = (2m-1)!! prod_{j=-m}^{m} (lambda + j eps) / (2^(3m+2) m!)
//   d_m = (2m-1)!! prod_{j=-(m-1)}^{m} (lambda + j eps) / (2^(3m+1) m!)
struct WFormalSeries {
    int order = 0;  // through sigma^order
    Mat2<PolySeries> W;
};

const VarSetPtr& le_vars();  // {lambda, eps}
WFormalSeries formal_W(int D);
// Coefficient polynomials c_m, d_m(lambda).
MultiPoly formal_w1_coeff(int m);
MultiPoly formal_w2_coeff(int m);

// W(lambda - eps) S - S W(lambda) with S = sigma * A~ = [[sigma (lambda - eps/2), -1], [-1, 0]]
// in the same gauge; `shift` = -1 is the consistent orientation, +1 the alternative.
Mat2<PolySeries> formal_W_residual(const WFormalSeries& w, int shift = -1);

}  // namespace gwp1
