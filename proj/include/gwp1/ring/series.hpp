#pragma once

#include "gwp1/errors.hpp"
#include "gwp1/ring/multipoly.hpp"
#include "gwp1/ring/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace gwp1 {

// Coefficient-ring glue: every coefficient type provides a zero element that
// carries its ring (variable set), a compatibility test and scaling by Rational.
inline bool ring_compatible(const Rational&, const Rational&) { return true; }
inline bool ring_compatible(const MultiPoly& a, const MultiPoly& b) { return same_vars(a.vars(), b.vars()); }
inline bool coeff_is_zero(const Rational& a) { return a.is_zero(); }
inline bool coeff_is_zero(const MultiPoly& a) { return a.is_zero(); }
inline Rational coeff_scale(const Rational& a, const Rational& c) { return a * c; }
inline MultiPoly coeff_scale(const MultiPoly& a, const Rational& c) { return a.scaled(c); }

// Sentinels for directions without an unknown tail (order) or without a
// lower bound on the true support (floor).
inline constexpr int kOrderInf = 1 << 29;
inline constexpr int kFloorNegInf = -(1 << 29);

// order + floor bound used by the product rule: an exact direction stays exact,
// an unbounded floor makes the bound vanish.
inline int order_plus_floor(int order, int floor) {
    if (order >= kOrderInf) return kOrderInf;
    if (floor <= kFloorNegInf) return kFloorNegInf;
    return order + floor;
}
inline int sat_shift(int v, int delta) {
    if (v >= kOrderInf || v <= kFloorNegInf) return v;
    return v + delta;
}

// Truncated Laurent series in several expansion parameters t_1..t_r
// (t_i is typically an inverse variable such as 1/z or 1/lambda_i).
// A coefficient at multi-index e is known exactly whenever
// floor_i <= e_i <= order_i for every i; the true support lies above the floors.
template <class C>
class MultiSeries {
public:
    using TermMap = std::map<Exponents, C>;

    MultiSeries(std::vector<std::string> vars, std::vector<int> orders, std::vector<int> floors, C zero)
        : vars_(std::move(vars)), orders_(std::move(orders)), floors_(std::move(floors)), zero_(std::move(zero)) {
        if (vars_.empty() || vars_.size() > kMaxVars) throw ValidationError("series needs 1..8 variables");
        if (orders_.size() != vars_.size()) throw ValidationError("series orders/vars length mismatch");
        if (floors_.empty()) floors_.assign(vars_.size(), 0);
        if (floors_.size() != vars_.size()) throw ValidationError("series floors/vars length mismatch");
    }
    static MultiSeries univariate(std::string var, int order, C zero, int floor = 0) {
        return MultiSeries({std::move(var)}, {order}, {floor}, std::move(zero));
    }

    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& orders() const { return orders_; }
    const std::vector<int>& floors() const { return floors_; }
    int order(size_t i = 0) const { return orders_[i]; }
    const C& zero() const { return zero_; }
    const TermMap& terms() const { return terms_; }

    bool in_range(const Exponents& e) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (e[i] < floors_[i] || e[i] > orders_[i]) return false;
        return true;
    }

    // Exact coefficient; zero below the floors, InsufficientOrder above the orders.
    C coefficient(const Exponents& e) const {
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] > orders_[i])
                throw InsufficientOrder("coefficient index " + std::to_string(e[i]) + " beyond order " +
                                        std::to_string(orders_[i]) + " in " + vars_[i]);
            if (e[i] < floors_[i]) return zero_;
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_ : it->second;
    }
    C coefficient(int i) const {
        Exponents e;
        e[0] = i;
        return coefficient(e);
    }

    // Accumulates c into index e; indices beyond the orders are dropped.
    void add(const Exponents& e, const C& c) {
        if (coeff_is_zero(c)) return;
        if (!ring_compatible(c, zero_)) throw RingMismatch("series coefficient from a different ring");
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] > orders_[i]) return;
            if (e[i] < floors_[i]) throw ValidationError("series term below declared floor");
        }
        for (size_t i = vars_.size(); i < kMaxVars; ++i)
            if (e[i] != 0) throw ValidationError("series index outside variable range");
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }
    void add(int i, const C& c) {
        Exponents e;
        e[0] = i;
        add(e, c);
    }

    MultiSeries& operator+=(const MultiSeries& o) { return combine(o, false); }
    MultiSeries& operator-=(const MultiSeries& o) { return combine(o, true); }
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    MultiSeries operator-() const {
        MultiSeries r(vars_, orders_, floors_, zero_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, coeff_scale(c, Rational(-1)));
        return r;
    }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        a.check_compatible(b);
        size_t n = a.vars_.size();
        std::vector<int> ord(n), fl(n);
        for (size_t i = 0; i < n; ++i) {
            ord[i] = std::min(order_plus_floor(a.orders_[i], b.floors_[i]),
                              order_plus_floor(b.orders_[i], a.floors_[i]));
            fl[i] = (a.floors_[i] <= kFloorNegInf || b.floors_[i] <= kFloorNegInf)
                        ? kFloorNegInf
                        : a.floors_[i] + b.floors_[i];
        }
        MultiSeries r(a.vars_, ord, fl, a.zero_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea + eb;
                bool keep = true;
                for (size_t i = 0; i < n; ++i)
                    if (e[i] > ord[i]) {
                        keep = false;
                        break;
                    }
                if (keep) r.add_unchecked(e, ca * cb);
            }
        r.drop_zeros();
        return r;
    }

    MultiSeries scaled(const Rational& c) const {
        MultiSeries r(vars_, orders_, floors_, zero_);
        if (c.is_zero()) return r;
        for (const auto& [e, x] : terms_) r.terms_.emplace(e, coeff_scale(x, c));
        return r;
    }
    MultiSeries times_coeff(const C& c) const {
        if (!ring_compatible(c, zero_)) throw RingMismatch("series scalar from a different ring");
        MultiSeries r(vars_, orders_, floors_, zero_);
        for (const auto& [e, x] : terms_) r.add_unchecked(e, x * c);
        r.drop_zeros();
        return r;
    }

    // Lower the truncation orders (never raises them).
    MultiSeries truncated(const std::vector<int>& orders) const {
        if (orders.size() != vars_.size()) throw ValidationError("truncation order length mismatch");
        for (size_t i = 0; i < orders.size(); ++i)
            if (orders[i] > orders_[i])
                throw InsufficientOrder("cannot raise truncation order of " + vars_[i]);
        MultiSeries r(vars_, orders, floors_, zero_);
        for (const auto& [e, c] : terms_)
            if (r.in_range(e)) r.terms_.emplace(e, c);
        return r;
    }

    // Multiply by t_v^delta: every index, order and floor in v moves by delta.
    MultiSeries index_shifted(size_t v, int delta) const {
        auto ord = orders_, fl = floors_;
        ord[v] = sat_shift(ord[v], delta);
        fl[v] = sat_shift(fl[v], delta);
        MultiSeries r(vars_, ord, fl, zero_);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            f[v] += delta;
            r.terms_.emplace(f, c);
        }
        return r;
    }

    // Rebuild coefficients through f; the result keeps this series' truncation data.
    template <class D, class F>
    MultiSeries<D> map(const D& zero, F&& f) const {
        MultiSeries<D> r(vars_, orders_, floors_, zero);
        for (const auto& [e, c] : terms_) r.add(e, f(c));
        return r;
    }

    // Equality of all coefficients inside the common validity box.
    bool equal_through(const MultiSeries& o, const std::vector<int>& orders) const {
        check_compatible(o);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (orders[i] > orders_[i] || orders[i] > o.orders_[i])
                throw InsufficientOrder("comparison beyond available order");
        auto within = [&](const Exponents& e) {
            for (size_t i = 0; i < vars_.size(); ++i)
                if (e[i] > orders[i]) return false;
            return true;
        };
        for (const auto& [e, c] : terms_)
            if (within(e) && !(o.coefficient(e) == c)) return false;
        for (const auto& [e, c] : o.terms_)
            if (within(e) && !(coefficient(e) == c)) return false;
        return true;
    }

    bool is_zero_through(const std::vector<int>& orders) const {
        for (const auto& [e, c] : terms_) {
            bool within = true;
            for (size_t i = 0; i < vars_.size(); ++i) within = within && e[i] <= orders[i];
            if (within) return false;
        }
        return true;
    }

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.vars_ == b.vars_ && a.orders_ == b.orders_ && a.floors_ == b.floors_ &&
               ring_compatible(a.zero_, b.zero_) && a.terms_ == b.terms_;
    }

    void check_compatible(const MultiSeries& o) const {
        if (vars_ != o.vars_) throw RingMismatch("series over different variables");
        if (!ring_compatible(zero_, o.zero_)) throw RingMismatch("series over different coefficient rings");
    }

private:
    MultiSeries& combine(const MultiSeries& o, bool subtract) {
        check_compatible(o);
        for (size_t i = 0; i < vars_.size(); ++i) {
            orders_[i] = std::min(orders_[i], o.orders_[i]);
            floors_[i] = std::min(floors_[i], o.floors_[i]);
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (!in_range(it->first))
                it = terms_.erase(it);
            else
                ++it;
        }
        for (const auto& [e, c] : o.terms_)
            if (in_range(e)) add_unchecked(e, subtract ? coeff_scale(c, Rational(-1)) : c);
        drop_zeros();
        return *this;
    }
    void add_unchecked(const Exponents& e, const C& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second = it->second + c;
    }
    void drop_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (coeff_is_zero(it->second))
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    std::vector<std::string> vars_;
    std::vector<int> orders_;
    std::vector<int> floors_;
    C zero_;
    TermMap terms_;
};

// Univariate helpers for series in t = 1/z.

// f(z) -> f(z + c) re-expanded in 1/z. Exact: (z+c)^(-k) only feeds indices >= k,
// so the truncation order is preserved.
template <class C>
MultiSeries<C> shift_argument(const MultiSeries<C>& f, const Rational& c) {
    if (f.nvars() != 1) throw ValidationError("shift_argument needs a univariate series");
    if (f.order() >= kOrderInf) throw ValidationError("shift_argument needs a finite order");
    MultiSeries<C> r(f.vars(), f.orders(), {std::min(f.floors()[0], 0)}, f.zero());
    int N = f.order();
    for (const auto& [e, coeff] : f.terms()) {
        int k = e[0];
        if (k >= 0) {
            // z^-k (1 + c/z)^-k
            for (int m = 0; k + m <= N; ++m) {
                Rational w = binomial(-k, m) * c.pow(m);
                r.add(k + m, coeff_scale(coeff, w));
            }
        } else {
            int p = -k;  // z^p = sum C(p,m) c^m z^(p-m)
            for (int m = 0; m <= p; ++m) r.add(k + m, coeff_scale(coeff, binomial(p, m) * c.pow(m)));
        }
    }
    return r;
}

// Multiplicative inverse of a univariate power series whose index-0 coefficient is 1.
template <class C>
MultiSeries<C> inverse_unit(const MultiSeries<C>& f, const C& one) {
    if (f.nvars() != 1 || f.floors()[0] != 0) throw ValidationError("inverse_unit needs a power series");
    if (f.order() >= kOrderInf) throw ValidationError("inverse_unit needs a finite order");
    if (!(f.coefficient(0) == one)) throw ValidationError("inverse_unit needs leading coefficient 1");
    int N = f.order();
    std::vector<C> g(static_cast<size_t>(N) + 1, f.zero());
    g[0] = one;
    for (int n = 1; n <= N; ++n) {
        C acc = f.zero();
        for (int j = 1; j <= n; ++j) {
            C fj = f.coefficient(j);
            if (coeff_is_zero(fj)) continue;
            acc = acc + fj * g[static_cast<size_t>(n - j)];
        }
        g[static_cast<size_t>(n)] = coeff_scale(acc, Rational(-1));
    }
    MultiSeries<C> r(f.vars(), f.orders(), f.floors(), f.zero());
    for (int n = 0; n <= N; ++n) r.add(n, g[static_cast<size_t>(n)]);
    return r;
}

// Sum_{m=0}^{N} t_i^{m+1} t_j^{-m}, i.e. 1/(lambda_i - lambda_j) expanded for
// |lambda_i| > |lambda_j| with t = 1/lambda. The dropped tail (m > N) sits at
// t_i-index > N+1, so the order is N+1 in i and unbounded in j; the true support
// is unbounded below in j (floor kFloorNegInf). Other variables are exact.
// `region` lists variable indices from largest |lambda| to smallest; if j comes
// before i the expansion is -Sum t_j^{m+1} t_i^{-m}.
MultiSeries<Rational> geometric_expand(const std::vector<std::string>& names, size_t i, size_t j, int N,
                                        const std::vector<size_t>& region);

// The exact Laurent polynomial 1/t_i - 1/t_j (lambda_i - lambda_j) in the same layout.
MultiSeries<Rational> linear_difference(const std::vector<std::string>& names, size_t i, size_t j);

}  // namespace gwp1

namespace gwp1 {

// Variable set {x, eps} (eps Laurent) used for spectral-variable expansions.
const VarSetPtr& xe_vars();

// Takes a series in 1/z whose coefficients are polynomials in s, substitutes
// z = (lambda - x)/eps and s = 1/eps, and re-expands in 1/lambda through order N.
// Powers of x above x_order are dropped (x_order < 0 keeps all).
MultiSeries<MultiPoly> substitute_shifted(const MultiSeries<MultiPoly>& series_in_z, int N, int x_order = -1,
                                          const std::string& target = "lambda");

}  // namespace gwp1
