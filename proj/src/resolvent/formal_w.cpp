#include "gwp1/resolvent/resolvent.hpp"

namespace gwp1 {

const VarSetPtr& le_vars() {
    static const VarSetPtr vars = VarSet::make({"lambda", "eps"});
    return vars;
}

namespace {

// prod_{j=lo}^{hi} (lambda + j eps)
MultiPoly shifted_product(int lo, int hi) {
    const auto& v = le_vars();
    MultiPoly l = MultiPoly::var(v, "lambda"), e = MultiPoly::var(v, "eps");
    MultiPoly p = MultiPoly::constant(v, 1);
    for (int j = lo; j <= hi; ++j) p = p * (l + e.scaled(j));
    return p;
}

Rational two_pow(int k) { return Rational(2).pow(k); }

MultiPoly shift_lambda(const MultiPoly& p, int by) {
    const auto& v = le_vars();
    return p.substitute(0, MultiPoly::var(v, "lambda") + MultiPoly::var(v, "eps").scaled(by));
}

PolySeries sigma_series(int order) { return PolySeries::univariate("sigma", order, MultiPoly(le_vars())); }

}  // namespace

MultiPoly formal_w1_coeff(int m) {
    return shifted_product(-m, m).scaled(double_factorial_odd(m) / (two_pow(3 * m + 2) * factorial(m)));
}

MultiPoly formal_w2_coeff(int m) {
    return shifted_product(-(m - 1), m).scaled(double_factorial_odd(m) / (two_pow(3 * m + 1) * factorial(m)));
}

WFormalSeries formal_W(int D) {
    if (D < 0) throw ValidationError("formal W order must be >= 0");
    const auto& v = le_vars();
    PolySeries w1 = sigma_series(D), w2 = sigma_series(D), w2s = sigma_series(D);
    for (int m = 0; 2 * m + 1 <= D; ++m) {
        Rational sign = m % 2 ? Rational(-1) : Rational(1);
        w1.add(2 * m + 1, formal_w1_coeff(m).scaled(sign));
    }
    for (int m = 0; 2 * m <= D; ++m) {
        Rational sign = m % 2 ? Rational(-1) : Rational(1);
        MultiPoly d = formal_w2_coeff(m).scaled(sign);
        w2.add(2 * m, d);
        w2s.add(2 * m, shift_lambda(d, -1));
    }
    PolySeries half = sigma_series(D);
    half.add(0, MultiPoly::constant(v, Rational(1, 2)));
    return WFormalSeries{D, {half - w1, w2s, w2, half + w1}};
}

Mat2<PolySeries> formal_W_residual(const WFormalSeries& w, int shift) {
    const auto& v = le_vars();
    MultiPoly l = MultiPoly::var(v, "lambda"), e = MultiPoly::var(v, "eps");
    auto exact = [&](std::initializer_list<std::pair<int, MultiPoly>> terms) {
        PolySeries r = PolySeries::univariate("sigma", kOrderInf, MultiPoly(v));
        for (const auto& [k, c] : terms) r.add(k, c);
        return r;
    };
    MultiPoly one = MultiPoly::constant(v, 1);
    Mat2<PolySeries> S{exact({{1, l - e.scaled(Rational(1, 2))}}), exact({{0, -one}}), exact({{0, -one}}),
                       exact({})};
    Mat2<PolySeries> Ws =
        w.W.map([&](const PolySeries& s) { return s.map(MultiPoly(v), [&](const MultiPoly& p) { return shift_lambda(p, shift); }); });
    return Ws * S - S * w.W;
}

}  // namespace gwp1
