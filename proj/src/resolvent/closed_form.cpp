#include "gwp1/resolvent/resolvent.hpp"

#include <omp.h>

namespace gwp1 {

const VarSetPtr& s_vars() {
    static const VarSetPtr vars = VarSet::make({"s"});
    return vars;
}

namespace {

MultiPoly s_pow(int p, const Rational& c) {
    Exponents e;
    e[0] = p;
    return MultiPoly::monomial(s_vars(), e, c);
}

// sum_{l=0}^{i} (-1)^l (i - l + 1/2)^power * weight(l)
template <class F>
Rational alternating_sum(int i, int power, F&& weight) {
    Rational acc(0);
    for (int l = 0; l <= i; ++l) {
        Rational w = weight(l);
        if (w.is_zero()) continue;
        Rational term = (Rational(i - l) + Rational(1, 2)).pow(power) * w;
        if (l % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

Rational ballot(int i, int l) { return binomial(2 * i, l) - binomial(2 * i, l - 1); }

}  // namespace

MultiPoly closed_form_alpha_coeff(int index) {
    MultiPoly out(s_vars());
    if (index < 2 || index % 2) return out;
    int j = (index - 2) / 2;
    for (int i = 0; i <= j; ++i) {
        Rational inner = alternating_sum(i, 2 * j + 1, [&](int l) { return binomial(2 * i + 1, l); });
        out += s_pow(2 * i + 2, Rational(2) * inner / (factorial(i) * factorial(i + 1)));
    }
    return out;
}

MultiPoly closed_form_P_coeff(int index) {
    MultiPoly out(s_vars());
    if (index < 1 || index % 2 == 0) return out;
    int j = (index - 1) / 2;
    for (int i = 0; i <= j; ++i) {
        Rational inner = alternating_sum(i, 2 * j, [&](int l) { return ballot(i, l); });
        out += s_pow(2 * i + 1, inner / (factorial(i) * factorial(i)));
    }
    return out;
}

MultiPoly closed_form_Q_coeff(int index) {
    MultiPoly out(s_vars());
    if (index < 2 || index % 2) return out;
    int j = (index - 2) / 2;
    for (int i = 0; i <= j; ++i) {
        Rational inner = alternating_sum(i, 2 * j, [&](int l) { return ballot(i, l); });
        out += s_pow(2 * i + 1, Rational(-1, 2) * Rational(2 * i + 1) * inner / (factorial(i) * factorial(i)));
    }
    return out;
}

ResolventSeries closed_form_M(int N, Exec mode) {
    if (N < 1) throw ValidationError("closed form order must be >= 1");
    std::vector<MultiPoly> al(static_cast<size_t>(N) + 1, MultiPoly(s_vars()));
    std::vector<MultiPoly> pp = al, qq = al;
    // 3N independent coefficient jobs; larger indices cost more, so schedule dynamically
    auto job = [&](int t) {
        int idx = N - t / 3;
        size_t k = static_cast<size_t>(idx);
        switch (t % 3) {
            case 0: al[k] = closed_form_alpha_coeff(idx); break;
            case 1: pp[k] = closed_form_P_coeff(idx); break;
            default: qq[k] = closed_form_Q_coeff(idx); break;
        }
    };
    int jobs = 3 * N;
    if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int t = 0; t < jobs; ++t) job(t);
    } else {
        for (int t = 0; t < jobs; ++t) job(t);
    }
    PolySeries empty = PolySeries::univariate("z^-1", N, MultiPoly(s_vars()));
    ResolventSeries r{N, empty, empty, empty};
    for (int k = 1; k <= N; ++k) {
        r.alpha.add(k, al[static_cast<size_t>(k)]);
        r.P.add(k, pp[static_cast<size_t>(k)]);
        r.Q.add(k, qq[static_cast<size_t>(k)]);
    }
    return r;
}

Mat2<PolySeries> ResolventSeries::matrix() const {
    PolySeries one = PolySeries::univariate(alpha.vars()[0], order, MultiPoly(s_vars()));
    one.add(0, MultiPoly::constant(s_vars(), 1));
    return {one + alpha, Q - P, Q + P, -alpha};
}

}  // namespace gwp1
