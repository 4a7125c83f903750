#include "gwp1/resolvent/resolvent.hpp"

namespace gwp1 {

namespace {

PolySeries to_x(const PolySeries& s) {
    return s.map(MultiPoly(xe_vars()), [](const MultiPoly& p) { return n_to_x(p); });
}

}  // namespace

CrossCheckReport cross_check_routes(const RecursionResolvent& rec, const ResolventSeries& closed, int N) {
    if (N > rec.order || N > closed.order) throw InsufficientOrder("cross-check order exceeds computed order");
    CrossCheckReport rep;
    rep.order = N;
    Mat2<PolySeries> M = closed.matrix();
    struct Pair {
        const char* name;
        PolySeries rec;
        PolySeries closed;
    };
    std::vector<Pair> pairs{
        {"alpha", to_x(rec.alpha()), substitute_shifted(closed.alpha, N)},
        {"gamma", to_x(rec.gamma()), substitute_shifted(M.c, N)},
        {"beta", -to_x(rec.gamma_next()), substitute_shifted(M.b, N)},
    };
    for (auto& p : pairs) {
        p.rec = p.rec.truncated({N});
        // the constant term of the closed-form entries must be absent
        if (!p.closed.coefficient(0).is_zero()) {
            rep.pass = false;
            if (!rep.first_mismatch) rep.first_mismatch = RouteMismatch{p.name, 0, "0", p.closed.coefficient(0).to_string()};
        }
    }
    // lowest index first, so the reported mismatch is the first order that differs
    for (int k = 1; k <= N; ++k)
        for (auto& p : pairs) {
            MultiPoly a = p.rec.coefficient(k), b = p.closed.coefficient(k);
            ++rep.coefficients_compared;
            if (!(a == b)) {
                rep.pass = false;
                if (!rep.first_mismatch)
                    rep.first_mismatch = RouteMismatch{p.name, k, a.to_string(), b.to_string()};
            }
        }
    return rep;
}

CrossCheckReport cross_check_routes(int N) {
    return cross_check_routes(recursion_resolvent(N), closed_form_M(N), N);
}

}  // namespace gwp1
