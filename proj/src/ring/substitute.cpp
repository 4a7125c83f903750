#include "gwp1/ring/series.hpp"

namespace gwp1 {

const VarSetPtr& xe_vars() {
    static const VarSetPtr vars = VarSet::make({"x", "eps"}, {"eps"});
    return vars;
}

MultiSeries<MultiPoly> substitute_shifted(const MultiSeries<MultiPoly>& in, int N, int x_order,
                                          const std::string& target) {
    if (in.nvars() != 1) throw ValidationError("substitute_shifted needs a series in one variable");
    if (in.floors()[0] < 0) throw ValidationError("substitute_shifted needs a power series in 1/z");
    if (N > in.order()) throw InsufficientOrder("substitute_shifted: requested order exceeds input order");
    const VarSetPtr& out_vars = xe_vars();
    const VarSetPtr& in_vars = in.zero().vars();
    auto s_idx = in_vars->find("s");
    for (size_t i = 0; i < in_vars->size(); ++i)
        if (!s_idx || i != *s_idx)
            for (const auto& [e, c] : in.terms())
                for (const auto& [ex, q] : c.terms())
                    if (ex[i] != 0) throw RingMismatch("substitute_shifted: coefficients must be polynomials in s");
    int max_m = x_order < 0 ? N : x_order;
    MultiSeries<MultiPoly> out = MultiSeries<MultiPoly>::univariate(target + "^-1", N, MultiPoly(out_vars));
    for (const auto& [e, c] : in.terms()) {
        int k = e[0];
        if (k > N) continue;
        // c(1/eps) * eps^k
        MultiPoly base(out_vars);
        for (const auto& [ex, q] : c.terms()) {
            Exponents f;
            f[1] = k - (s_idx ? ex[*s_idx] : 0);
            base.add_term(f, q);
        }
        for (int m = 0; k + m <= N && m <= max_m; ++m) {
            if (k == 0 && m > 0) break;
            Rational w = binomial(k + m - 1, m);
            out.add(k + m, base.shifted(0, m).scaled(w));
        }
    }
    return out;
}

}  // namespace gwp1
