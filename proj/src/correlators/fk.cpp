#include "gwp1/correlators/correlators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gwp1 {

SpectralCoefficients::SpectralCoefficients(const ResolventSeries& closed, int max_index, int x_order)
    : max_index_(max_index), x_order_(x_order) {
    if (max_index < 0) throw ValidationError("spectral coefficient index must be >= 0");
    if (closed.order < max_index)
        throw InsufficientOrder("resolvent order " + std::to_string(closed.order) + " below required " +
                                std::to_string(max_index));
    Mat2<PolySeries> M = closed.matrix();
    auto sub = [&](const PolySeries& e) { return substitute_shifted(e, max_index, x_order); };
    Mat2<PolySeries> L{sub(M.a), sub(M.b), sub(M.c), sub(M.d)};
    for (int j = 0; j <= max_index; ++j)
        m_.push_back({L.a.coefficient(j), L.b.coefficient(j), L.c.coefficient(j), L.d.coefficient(j)});
}

const Mat2<MultiPoly>& SpectralCoefficients::at(int j) const {
    if (j < 0 || j > max_index_) throw InsufficientOrder("spectral coefficient index out of range");
    return m_[static_cast<size_t>(j)];
}

namespace {

using RSeries = MultiSeries<Rational>;

// 1/prod_i (lambda_s(i) - lambda_s(i+1)) in region coordinates.
// With mu_0..mu_{k-1} the region order (largest |lambda| first), t = 1/lambda_{mu_{k-1}}
// and rho_p = lambda_{mu_{p+1}}/lambda_{mu_p}, each factor is
//   1/(lambda_a - lambda_b) = t prod_{q >= pos a} rho_q sum_m (prod_{pos a <= q < pos b} rho_q)^m
// for pos a < pos b, so G = t^k * (power series in rho with non-negative exponents),
// and box truncation in rho is exact.
RSeries cycle_denominator(const std::vector<size_t>& sigma, const std::vector<int>& pos, const std::vector<int>& bounds) {
    size_t k = sigma.size();
    std::vector<std::string> names;
    for (size_t p = 0; p + 1 < k; ++p) names.push_back("rho" + std::to_string(p));
    std::vector<int> floors(k - 1, 0);
    RSeries acc(names, bounds, floors, Rational(0));
    acc.add(Exponents{}, Rational(1));
    for (size_t i = 0; i < k; ++i) {
        size_t a = sigma[i], b = sigma[(i + 1) % k];
        Rational sign(1);
        int pa = pos[a], pb = pos[b];
        if (pa > pb) {
            std::swap(pa, pb);
            sign = Rational(-1);
        }
        Exponents prefix;
        for (size_t q = static_cast<size_t>(pa); q + 1 < k; ++q) prefix[q] = 1;
        RSeries fac(names, bounds, floors, Rational(0));
        for (int m = 0;; ++m) {
            Exponents e = prefix;
            bool inside = true;
            for (int q = pa; q < pb; ++q) {
                e[static_cast<size_t>(q)] += m;
                if (e[static_cast<size_t>(q)] > bounds[static_cast<size_t>(q)]) inside = false;
            }
            for (size_t q = 0; q + 1 < k; ++q)
                if (e[q] > bounds[q]) inside = false;
            if (!inside) break;
            fac.add(e, sign);
        }
        acc = acc * fac;
    }
    return acc;
}

struct CycleTerm {
    std::vector<int> g;  // exponent of 1/lambda_l for each variable
    Rational coeff;
};

class TraceTable {
public:
    TraceTable(const SpectralCoefficients& M, int k, int total) : M_(M), k_(k) {
        if (k < 3) return;
        // all pair products with a + b <= total
        for (int a = 0; a <= total; ++a)
            for (int b = 0; a + b <= total; ++b) pairs_.emplace(std::make_pair(a, b), trunc(M.at(a) * M.at(b)));
    }

    MultiPoly trace(const std::vector<int>& f) const {
        switch (k_) {
            case 2: return trunc(trace_of_product(M_.at(f[0]), M_.at(f[1])));
            case 3: return trunc(trace_of_product(pairs_.at({f[0], f[1]}), M_.at(f[2])));
            case 4: return trunc(trace_of_product(pairs_.at({f[0], f[1]}), pairs_.at({f[2], f[3]})));
            default: {
                Mat2<MultiPoly> p = pairs_.at({f[0], f[1]});
                for (size_t i = 2; i + 1 < f.size(); ++i) p = trunc(p * M_.at(f[i]));
                return trunc(trace_of_product(p, M_.at(f.back())));
            }
        }
    }

private:
    MultiPoly trunc(const MultiPoly& p) const { return M_.x_order() < 0 ? p : p.truncate_degree(0, M_.x_order()); }
    Mat2<MultiPoly> trunc(const Mat2<MultiPoly>& p) const { return p.map([&](const MultiPoly& x) { return trunc(x); }); }

    const SpectralCoefficients& M_;
    int k_;
    std::map<std::pair<int, int>, Mat2<MultiPoly>> pairs_;
};

}  // namespace

std::vector<MultiPoly> f_k_coefficients(int k, const std::vector<std::vector<int>>& targets, const FkOptions& opt) {
    if (k < 2) throw ValidationError("k-point series needs k >= 2");
    if (k > static_cast<int>(kMaxVars)) throw ValidationError("k too large");
    size_t K = static_cast<size_t>(k);
    std::vector<size_t> region = opt.region;
    if (region.empty()) {
        region.resize(K);
        std::iota(region.begin(), region.end(), 0);
    }
    {
        auto sorted = region;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < K; ++i)
            if (sorted.size() != K || sorted[i] != i) throw ValidationError("region must be a permutation of 0..k-1");
    }
    std::vector<int> pos(K);
    for (size_t p = 0; p < K; ++p) pos[region[p]] = static_cast<int>(p);

    std::vector<int> maxe(K, 0);
    int T = 0;
    for (const auto& e : targets) {
        if (e.size() != K) throw ValidationError("target length must equal k");
        int t = 0;
        for (size_t l = 0; l < K; ++l) {
            if (e[l] < 0) throw ValidationError("target exponents must be >= 0");
            maxe[l] = std::max(maxe[l], e[l]);
            t += e[l];
        }
        T = std::max(T, t);
    }
    std::vector<MultiPoly> out(targets.size(), MultiPoly(xe_vars()));
    if (targets.empty() || T < k) return out;

    int need = T - k;
    int order = opt.resolvent_order > 0 ? opt.resolvent_order : T + 2 * k;
    if (order < need) throw InsufficientOrder("resolvent order " + std::to_string(order) + " below required " + std::to_string(need));
    SpectralCoefficients M(closed_form_M(order, opt.exec), need, opt.x_order);
    TraceTable traces(M, k, need);

    std::vector<int> bounds(K - 1);
    {
        int acc = 0;
        for (size_t p = 0; p + 1 < K; ++p) {
            acc += maxe[region[p]];
            bounds[p] = acc;
        }
    }
    // cycle representatives: permutations fixing sigma(0) = 0
    std::vector<std::vector<CycleTerm>> cycles;
    std::vector<std::vector<size_t>> sigmas;
    {
        std::vector<size_t> rest(K - 1);
        std::iota(rest.begin(), rest.end(), 1);
        do {
            std::vector<size_t> sigma{0};
            sigma.insert(sigma.end(), rest.begin(), rest.end());
            RSeries G = cycle_denominator(sigma, pos, bounds);
            std::vector<CycleTerm> terms;
            for (const auto& [R, c] : G.terms()) {
                std::vector<int> g(K);
                g[region[0]] = R[0];
                for (size_t p = 1; p + 1 < K; ++p) g[region[p]] = R[p] - R[p - 1];
                g[region[K - 1]] = k - R[K - 2];
                terms.push_back({std::move(g), c});
            }
            cycles.push_back(std::move(terms));
            sigmas.push_back(std::move(sigma));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    auto one_target = [&](size_t t) {
        const auto& e = targets[t];
        MultiPoly acc(xe_vars());
        std::vector<int> f(K), fs(K);
        for (size_t c = 0; c < cycles.size(); ++c) {
            for (const auto& term : cycles[c]) {
                bool ok = true;
                for (size_t l = 0; l < K && ok; ++l) {
                    f[l] = e[l] - term.g[l];
                    ok = f[l] >= 0;
                }
                if (!ok) continue;
                for (size_t i = 0; i < K; ++i) fs[i] = f[sigmas[c][i]];
                MultiPoly tr = traces.trace(fs);
                // the k = 2 subtraction equals removing the constant 1 from tr(M M)
                if (k == 2 && f[0] == 0 && f[1] == 0) tr -= MultiPoly::constant(xe_vars(), 1);
                if (!tr.is_zero()) acc -= tr.scaled(term.coeff);
            }
        }
        out[t] = std::move(acc);
    };
    long n = static_cast<long>(targets.size());
    if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long t = 0; t < n; ++t) one_target(static_cast<size_t>(t));
    } else {
        for (long t = 0; t < n; ++t) one_target(static_cast<size_t>(t));
    }
    return out;
}

FkSeries f_k_series(int k, const std::vector<int>& orders, const FkOptions& opt) {
    if (orders.size() != static_cast<size_t>(k)) throw ValidationError("one order per variable required");
    std::vector<std::vector<int>> targets;
    int lo = opt.include_low ? 0 : 2;
    std::vector<int> e(orders.size(), lo);
    for (int o : orders)
        if (o < lo) throw ValidationError("order below the first nonzero index");
    while (true) {
        targets.push_back(e);
        size_t l = 0;
        while (l < e.size() && ++e[l] > orders[l]) e[l++] = lo;
        if (l == e.size()) break;
    }
    auto coeffs = f_k_coefficients(k, targets, opt);
    std::vector<std::string> names;
    for (int l = 1; l <= k; ++l) names.push_back("lambda" + std::to_string(l) + "^-1");
    FkSeries r{k, opt.region, opt.x_order, PolySeries(names, orders, std::vector<int>(orders.size(), 0), MultiPoly(xe_vars()))};
    if (r.region.empty())
        for (int l = 0; l < k; ++l) r.region.push_back(static_cast<size_t>(l));
    for (size_t t = 0; t < targets.size(); ++t) {
        Exponents x;
        for (size_t l = 0; l < targets[t].size(); ++l) x[l] = targets[t][l];
        r.series.add(x, coeffs[t]);
    }
    return r;
}

}  // namespace gwp1
