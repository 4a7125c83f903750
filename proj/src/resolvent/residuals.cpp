#include "gwp1/resolvent/resolvent.hpp"

namespace gwp1 {

namespace {

const MultiPoly& zero_of(const PolySeries& s) { return s.zero(); }

PolySeries constant_series(const PolySeries& like, const MultiPoly& c) {
    PolySeries r = PolySeries::univariate(like.vars()[0], kOrderInf, zero_of(like));
    r.add(0, c);
    return r;
}

// 1/(z + c) = sum_m (-c)^m z^(-m-1), exact through index `order`
PolySeries inverse_linear_z(const PolySeries& like, const Rational& c, int order) {
    PolySeries r = PolySeries::univariate(like.vars()[0], order, zero_of(like));
    const MultiPoly one = MultiPoly::constant(like.zero().vars(), 1);
    for (int m = 0; m + 1 <= order; ++m) r.add(m + 1, one.scaled((-c).pow(m)));
    return r;
}

// z + c as a Laurent series (index -1 carries z)
PolySeries linear_z(const PolySeries& like, const Rational& c) {
    PolySeries r(like.vars(), {kOrderInf}, {-1}, zero_of(like));
    const MultiPoly one = MultiPoly::constant(like.zero().vars(), 1);
    r.add(-1, one);
    r.add(0, one.scaled(c));
    return r;
}

MultiPoly s_of(const PolySeries& like) { return MultiPoly::var(like.zero().vars(), "s"); }

}  // namespace

ResolventSeries resolvent_from_alpha(const PolySeries& alpha) {
    const MultiPoly one = MultiPoly::constant(alpha.zero().vars(), 1);
    int N = alpha.order();
    PolySeries num = constant_series(alpha, one) + alpha + shift_argument(alpha, Rational(1));
    PolySeries c = (num * inverse_linear_z(alpha, Rational(1, 2), N + 1)).times_coeff(s_of(alpha)).truncated({N});
    PolySeries b = -shift_argument(c, Rational(-1));
    // b = Q - P, c = Q + P
    return ResolventSeries{N, alpha, (c - b).scaled(Rational(1, 2)), (b + c).scaled(Rational(1, 2))};
}

PolySeries scalar_difference_residual(const PolySeries& a) {
    const MultiPoly one = MultiPoly::constant(a.zero().vars(), 1);
    int N = a.order();
    PolySeries unit = constant_series(a, one);
    PolySeries up = (unit + a + shift_argument(a, Rational(1))) * inverse_linear_z(a, Rational(1, 2), N + 1);
    PolySeries down = (unit + shift_argument(a, Rational(-2)) + shift_argument(a, Rational(-1))) *
                      inverse_linear_z(a, Rational(-3, 2), N + 1);
    MultiPoly s = s_of(a);
    PolySeries lhs = (up - down).times_coeff(s * s) +
                     linear_z(a, Rational(-1, 2)) * (shift_argument(a, Rational(-1)) - a);
    return lhs;
}

Mat2<PolySeries> matrix_difference_residual(const Mat2<PolySeries>& M) {
    const PolySeries& like = M.a;
    MultiPoly s = s_of(like);
    PolySeries zero = PolySeries(like.vars(), {kOrderInf}, {0}, zero_of(like));
    Mat2<PolySeries> A{linear_z(like, Rational(-1, 2)), constant_series(like, -s), constant_series(like, s), zero};
    Mat2<PolySeries> Mm = M.map([](const PolySeries& e) { return shift_argument(e, Rational(-1)); });
    return Mm * A - A * M;
}

PolySeries series_det(const Mat2<PolySeries>& M) { return M.det(); }

}  // namespace gwp1
