#include "gwp1/resolvent/resolvent.hpp"

namespace gwp1 {

const VarSetPtr& ne_vars() {
    static const VarSetPtr vars = VarSet::make({"n", "eps"});
    return vars;
}

namespace {

MultiPoly shift_n(const MultiPoly& p, int by) {
    const auto& v = ne_vars();
    return p.substitute(0, MultiPoly::var(v, "n") + MultiPoly::constant(v, by));
}

PolySeries lambda_series(const std::vector<MultiPoly>& coeffs, int order) {
    PolySeries s = PolySeries::univariate("lambda^-1", order, MultiPoly(ne_vars()));
    for (size_t j = 0; j < coeffs.size(); ++j) s.add(static_cast<int>(j) + 1, coeffs[j]);
    return s;
}

}  // namespace

RecursionResolvent recursion_resolvent(int N, const Rational& c0) {
    if (N < 1) throw ValidationError("recursion order must be >= 1");
    const auto& v = ne_vars();
    MultiPoly n = MultiPoly::var(v, "n"), eps = MultiPoly::var(v, "eps");
    MultiPoly eps_n_half = eps * (n - MultiPoly::constant(v, Rational(1, 2)));

    RecursionResolvent r;
    r.order = N;
    std::vector<MultiPoly> c_next;  // c_{n+1,j}
    r.a.push_back(MultiPoly(v));
    r.c.push_back(MultiPoly::constant(v, c0));
    c_next.push_back(r.c[0]);
    for (int j = 1; j < N; ++j) {
        size_t J = static_cast<size_t>(j);
        MultiPoly cj = eps_n_half * r.c[J - 1] + r.a[J - 1] + shift_n(r.a[J - 1], -1);
        MultiPoly aj(v);
        for (size_t i = 0; i < J; ++i) {
            aj += r.c[i] * c_next[J - 1 - i];
            if (!r.a[i].is_zero() && !r.a[J - 1 - i].is_zero()) aj -= r.a[i] * r.a[J - 1 - i];
        }
        r.c.push_back(std::move(cj));
        r.a.push_back(std::move(aj));
        c_next.push_back(shift_n(r.c[J], 1));
    }
    return r;
}

PolySeries RecursionResolvent::alpha() const { return lambda_series(a, order); }
PolySeries RecursionResolvent::gamma() const { return lambda_series(c, order); }
PolySeries RecursionResolvent::gamma_next() const {
    std::vector<MultiPoly> shifted;
    for (const auto& x : c) shifted.push_back(shift_n(x, 1));
    return lambda_series(shifted, order);
}

std::vector<MultiPoly> recursion_shift_residual(const RecursionResolvent& r) {
    const auto& v = ne_vars();
    MultiPoly n = MultiPoly::var(v, "n"), eps = MultiPoly::var(v, "eps");
    MultiPoly coef = eps * (n + MultiPoly::constant(v, Rational(1, 2)));
    std::vector<MultiPoly> out;
    for (size_t j = 1; j < r.a.size(); ++j) {
        MultiPoly a1 = shift_n(r.a[j], 1), a1p = shift_n(r.a[j - 1], 1);
        out.push_back(r.a[j] - a1 + coef * (a1p - r.a[j - 1]) + shift_n(r.c[j - 1], 2) - r.c[j - 1]);
    }
    return out;
}

std::vector<MultiPoly> recursion_quadratic_residual(const RecursionResolvent& r) {
    PolySeries al = r.alpha();
    PolySeries res = al + al * al - r.gamma() * r.gamma_next();
    std::vector<MultiPoly> out;
    for (int j = 1; j <= r.order; ++j) out.push_back(res.coefficient(j));
    return out;
}

MultiPoly n_to_x(const MultiPoly& p) {
    const auto& xv = xe_vars();
    MultiPoly out(xv);
    for (const auto& [e, c] : p.terms()) {
        Exponents f;
        f[0] = e[0];
        f[1] = e[1] - e[0];
        out.add_term(f, c);
    }
    return out;
}

}  // namespace gwp1
