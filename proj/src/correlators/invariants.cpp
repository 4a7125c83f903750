#include "gwp1/correlators/correlators.hpp"

#include <numeric>

namespace gwp1 {

std::optional<int> degree_from_dimension(const std::vector<int>& insertions, int g, int m) {
    int sum = std::accumulate(insertions.begin(), insertions.end(), 0);
    int twice_d = sum - 2 * g + 2 - m;
    if (twice_d < 0 || twice_d % 2) return std::nullopt;
    return twice_d / 2;
}

namespace {

void validate(const CorrelatorKey& key) {
    if (key.insertions.empty()) throw ValidationError("at least one insertion required");
    for (int i : key.insertions)
        if (i < 0) throw ValidationError("insertion indices must be >= 0");
    if (key.g < 0) throw ValidationError("genus must be >= 0");
    if (key.m < 0) throw ValidationError("tau_0(1) count must be >= 0");
}

// Structural zero when no degree fits (or the requested degree does not).
std::optional<InvariantValue> selection(const CorrelatorKey& key) {
    auto d = degree_from_dimension(key.insertions, key.g, key.m);
    if (!d) {
        InvariantValue v{Rational(0), key.g, -1, true, "degree-dimension rule has no integer degree >= 0"};
        if (key.d) v.d = *key.d;
        return v;
    }
    if (key.d && *key.d != *d)
        return InvariantValue{Rational(0), key.g, *key.d, true, "degree differs from the one forced by degree-dimension"};
    return std::nullopt;
}

InvariantValue read(const CorrelatorKey& key, const MultiPoly& coeff) {
    int k = static_cast<int>(key.insertions.size());
    Exponents e;
    e[0] = key.m;
    e[1] = k + 2 * key.g - 2;
    Rational denom(1);
    for (int i : key.insertions) denom *= factorial(i + 1);
    Rational v = coeff.coefficient(e) * factorial(key.m) / denom;
    return InvariantValue{v, key.g, *degree_from_dimension(key.insertions, key.g, key.m), false, ""};
}

}  // namespace

InvariantValue extract_invariant(const CorrelatorKey& key, const FkSeries& f) {
    validate(key);
    if (static_cast<int>(key.insertions.size()) != f.k) throw ValidationError("key and series have different k");
    if (f.x_order >= 0 && key.m > f.x_order) throw InsufficientOrder("series was truncated below x^m");
    if (auto z = selection(key)) return *z;
    Exponents e;
    for (size_t l = 0; l < key.insertions.size(); ++l) e[l] = key.insertions[l] + 2;
    return read(key, f.series.coefficient(e));
}

InvariantValue extract_invariant_one_point(const CorrelatorKey& key, const PolySeries& f1) {
    validate(key);
    if (key.insertions.size() != 1) throw ValidationError("one-point extraction needs one insertion");
    if (auto z = selection(key)) return *z;
    return read(key, f1.coefficient(key.insertions[0] + 2));
}

InvariantValue compute_invariant(const CorrelatorKey& key, Exec exec) {
    validate(key);
    if (auto z = selection(key)) return *z;
    if (key.insertions.size() == 1) {
        int N = std::max(2, key.insertions[0] + 2);
        return extract_invariant_one_point(key, one_point_series(N, key.m));
    }
    std::vector<int> e;
    for (int i : key.insertions) e.push_back(i + 2);
    FkOptions opt;
    opt.x_order = key.m;
    opt.exec = exec;
    auto c = f_k_coefficients(static_cast<int>(e.size()), {e}, opt);
    return read(key, c[0]);
}

}  // namespace gwp1
