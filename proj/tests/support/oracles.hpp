#pragma once

// Independent closed-form oracles used only by tests.

#include "gwp1/ring/multipoly.hpp"

#include <map>
#include <utility>

namespace gwp1::oracle {

// Genus-zero two-point values from the epsilon -> 0 closed form
//   H_2^[0] = (lambda1 lambda2 - sqrt(lambda1^2 - 4q) sqrt(lambda2^2 - 4q) - 4q)
//             / (2 (lambda1 - lambda2)^2 sqrt(lambda1^2 - 4q) sqrt(lambda2^2 - 4q)).
// With u = 1/lambda1, v = 1/lambda2, a = sqrt(1 - 4q u^2), b likewise:
//   H_2^[0] = u^2 v^2 (1/(ab) - 1 - 4 q u v/(ab)) / (2 (u - v)^2).
// Returns the q-expansion through q^D as a polynomial in (q, u, v); the coefficient of
// q^d u^(i1+2) v^(i2+2) is (i1+1)! (i2+1)! <tau_i1 tau_i2>_{0,d}.
inline MultiPoly genus_zero_two_point(int D) {
    auto vars = VarSet::make({"q", "u", "v"});
    auto mono = [&](int q, int u, int v, const Rational& c) {
        Exponents e;
        e[0] = q;
        e[1] = u;
        e[2] = v;
        return MultiPoly::monomial(vars, e, c);
    };
    MultiPoly ia(vars), ib(vars);
    for (int n = 0; n <= D; ++n) {
        ia += mono(n, 2 * n, 0, binomial(2 * n, n));
        ib += mono(n, 0, 2 * n, binomial(2 * n, n));
    }
    MultiPoly inv = (ia * ib).truncate_degree(0, D);
    MultiPoly X = inv - MultiPoly::constant(vars, 1) - (mono(1, 1, 1, 4) * inv).truncate_degree(0, D);
    MultiPoly v = MultiPoly::var(vars, "v");
    auto q1 = X.divide_linear(1, v);
    auto q2 = q1 ? q1->divide_linear(1, v) : std::nullopt;
    if (!q2) throw std::logic_error("genus-zero two-point numerator not divisible by (u - v)^2");
    return (*q2 * mono(0, 2, 2, Rational(1, 2)));
}

}  // namespace gwp1::oracle
