#include "gwp1/ring/bernoulli.hpp"

#include "gwp1/errors.hpp"

#include <mutex>
#include <vector>

namespace gwp1 {

const VarSetPtr& bernoulli_vars() {
    static const VarSetPtr vars = VarSet::make({"u"});
    return vars;
}

MultiPoly bernoulli_poly(int j) {
    if (j < 0) throw ValidationError("bernoulli_poly needs j >= 0");
    static std::mutex mu;
    static std::vector<MultiPoly> memo;
    std::lock_guard<std::mutex> lock(mu);
    const auto& vars = bernoulli_vars();
    if (memo.empty()) memo.push_back(MultiPoly::constant(vars, Rational(1)));
    while (static_cast<int>(memo.size()) <= j) {
        int n = static_cast<int>(memo.size());
        // B_n(u) = n * int_0^u B_{n-1} + b, with int_0^1 B_n = 0
        MultiPoly p = memo.back().antiderivative(0).scaled(Rational(n));
        MultiPoly anti = p.antiderivative(0);
        Rational mean = anti.substitute(0, Rational(1)).constant_term();
        p += MultiPoly::constant(vars, -mean);
        memo.push_back(std::move(p));
    }
    return memo[static_cast<size_t>(j)];
}

Rational bernoulli_number(int n) { return bernoulli_poly(n).constant_term(); }

Rational pochhammer(const Rational& x, long k) {
    if (k < 0) throw ValidationError("pochhammer needs k >= 0");
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= x + Rational(i);
    return r;
}

MultiPoly pochhammer(const MultiPoly& x, long k) {
    if (k < 0) throw ValidationError("pochhammer needs k >= 0");
    MultiPoly r = MultiPoly::constant(x.vars(), Rational(1));
    for (long i = 0; i < k; ++i) r = r * (x + MultiPoly::constant(x.vars(), Rational(i)));
    return r;
}

}  // namespace gwp1
