#include "gwp1/ring/series.hpp"

#include <algorithm>

namespace gwp1 {

MultiSeries<Rational> geometric_expand(const std::vector<std::string>& names, size_t i, size_t j, int N,
                                        const std::vector<size_t>& region) {
    if (i == j) throw ValidationError("geometric_expand needs two distinct variables");
    if (i >= names.size() || j >= names.size()) throw ValidationError("geometric_expand variable out of range");
    if (N < 0) throw ValidationError("geometric_expand needs N >= 0");
    auto pos = [&](size_t v) {
        auto it = std::find(region.begin(), region.end(), v);
        if (it == region.end()) throw ValidationError("expansion region does not order every variable");
        return it - region.begin();
    };
    size_t big = i, small = j;
    Rational sign(1);
    if (pos(j) < pos(i)) {
        std::swap(big, small);
        sign = Rational(-1);
    }
    std::vector<int> orders(names.size(), kOrderInf), floors(names.size(), 0);
    orders[big] = N + 1;
    floors[small] = kFloorNegInf;
    MultiSeries<Rational> r(names, orders, floors, Rational(0));
    for (int m = 0; m <= N; ++m) {
        Exponents e;
        e[big] = m + 1;
        e[small] = -m;
        r.add(e, sign);
    }
    return r;
}

MultiSeries<Rational> linear_difference(const std::vector<std::string>& names, size_t i, size_t j) {
    if (i == j) throw ValidationError("linear_difference needs two distinct variables");
    std::vector<int> orders(names.size(), kOrderInf), floors(names.size(), 0);
    floors[i] = -1;
    floors[j] = -1;
    MultiSeries<Rational> r(names, orders, floors, Rational(0));
    Exponents a, b;
    a[i] = -1;
    b[j] = -1;
    r.add(a, Rational(1));
    r.add(b, Rational(-1));
    return r;
}

}  // namespace gwp1
