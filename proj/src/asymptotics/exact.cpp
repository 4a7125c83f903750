#include "gwp1/asymptotics/asymptotics.hpp"
#include "gwp1/ring/mat2.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gwp1::asym {

namespace {

// Polynomial in one expansion parameter, truncated after index `order`.
template <class C>
struct Trunc {
    std::vector<C> c;  // c.size() == order + 1

    static Trunc zero(const C& z, int order) { return {std::vector<C>(static_cast<size_t>(order) + 1, z)}; }
    int order() const { return static_cast<int>(c.size()) - 1; }

    friend Trunc operator+(Trunc a, const Trunc& b) {
        for (size_t i = 0; i < a.c.size(); ++i) a.c[i] = a.c[i] + b.c[i];
        return a;
    }
    friend Trunc operator-(Trunc a, const Trunc& b) {
        for (size_t i = 0; i < a.c.size(); ++i) a.c[i] = a.c[i] - b.c[i];
        return a;
    }
    friend Trunc operator*(const Trunc& a, const Trunc& b) {
        Trunc r = zero(a.c[0] - a.c[0], a.order());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (size_t j = 0; i + j < a.c.size(); ++j)
                if (!b.c[j].is_zero()) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        return r;
    }
    Trunc scaled(const Rational& x) const {
        Trunc r = *this;
        for (auto& v : r.c) v = v.scaled(x);
        return r;
    }
    // multiply by t^n
    Trunc shifted(int n) const {
        Trunc r = zero(c[0] - c[0], order());
        for (int i = 0; i + n <= order(); ++i) r.c[static_cast<size_t>(i + n)] = c[static_cast<size_t>(i)];
        return r;
    }
};

std::vector<std::vector<int>> cyclic_orders(int k) {
    std::vector<int> rest(static_cast<size_t>(k - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> o{0};
        o.insert(o.end(), rest.begin(), rest.end());
        out.push_back(o);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Delta / prod over the cycle's edges of (lambda_a - lambda_b), where
// Delta = (lambda_1 - lambda_2)^2 for k = 2 and prod_{i<j} (lambda_i - lambda_j) for k >= 3.
MultiPoly cycle_cofactor(const VarSetPtr& vars, const std::vector<int>& cyc) {
    int k = static_cast<int>(cyc.size());
    if (k == 2) return MultiPoly::constant(vars, Rational(-1));
    std::vector<std::vector<bool>> used(static_cast<size_t>(k), std::vector<bool>(static_cast<size_t>(k), false));
    Rational sign(1);
    for (int t = 0; t < k; ++t) {
        int a = cyc[static_cast<size_t>(t)], b = cyc[static_cast<size_t>((t + 1) % k)];
        if (a > b) sign = -sign;
        used[static_cast<size_t>(std::min(a, b))][static_cast<size_t>(std::max(a, b))] = true;
    }
    MultiPoly p = MultiPoly::constant(vars, sign);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!used[static_cast<size_t>(i)][static_cast<size_t>(j)])
                p = p * (MultiPoly::var(vars, vars->name(static_cast<size_t>(i))) -
                         MultiPoly::var(vars, vars->name(static_cast<size_t>(j))));
    return p;
}

// Exact division by Delta; throws if it does not divide.
template <class Div>
void divide_by_delta(int k, const VarSetPtr& vars, Div&& div_linear) {
    auto lam = [&](int i) { return MultiPoly::var(vars, vars->name(static_cast<size_t>(i))); };
    if (k == 2) {
        div_linear(0, lam(1));
        div_linear(0, lam(1));
        return;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) div_linear(static_cast<size_t>(i), lam(j));
}

std::vector<std::string> lambda_names(int k) {
    std::vector<std::string> n;
    for (int i = 1; i <= k; ++i) n.push_back("lambda" + std::to_string(i));
    return n;
}

void require_k(int k, int order, const char* what) {
    if (k < 1 || k > 7) throw ValidationError(std::string(what) + ": k must be between 1 and 7");
    if (order < 0) throw ValidationError(std::string(what) + ": order must be non-negative");
}

// ---------- eps -> infinity: series in w = 1/eps over Q[lambda, q] ----------

using WSer = Trunc<MultiPoly>;

struct WBuilder {
    VarSetPtr vars;
    int W;

    MultiPoly lam(size_t v) const { return MultiPoly::var(vars, vars->name(v)); }
    MultiPoly q() const { return MultiPoly::var(vars, "q"); }
    WSer constant(const MultiPoly& p) const {
        WSer s = WSer::zero(MultiPoly(vars), W);
        s.c[0] = p;
        return s;
    }
    WSer one() const { return constant(MultiPoly::constant(vars, Rational(1))); }
    // 1 / (c + a lambda_v w) = sum_n (-a lambda_v)^n / c^(n+1) w^n
    WSer inv_linear(size_t v, const Rational& c, const Rational& a) const {
        WSer s = WSer::zero(MultiPoly(vars), W);
        MultiPoly x = lam(v).scaled(-a / c);
        MultiPoly term = MultiPoly::constant(vars, Rational(1) / c);
        for (int n = 0; n <= W; ++n) {
            s.c[static_cast<size_t>(n)] = term;
            term = term * x;
        }
        return s;
    }
    // sum of the terms t_m of a G-type series, t_(m+1)/t_m = 2(2m+1) q w^2 /
    // ((m+1)(lambda w - (m + lo))(lambda w + (m + hi))); also returns the terms.
    std::vector<WSer> terms(size_t v, const Rational& lo, const Rational& hi) const {
        std::vector<WSer> t{one()};
        for (int m = 0; 2 * (m + 1) <= W; ++m) {
            WSer f = inv_linear(v, -(Rational(m) + lo), Rational(1)) * inv_linear(v, Rational(m) + hi, Rational(1));
            f = (f * constant(q())).shifted(2).scaled(Rational(2 * (2 * m + 1), m + 1));
            t.push_back(t.back() * f);
        }
        return t;
    }
    WSer sum(const std::vector<WSer>& t) const {
        WSer s = WSer::zero(MultiPoly(vars), W);
        for (const auto& x : t) s = s + x;
        return s;
    }
    // B in the gauge diag(1, sqrt q): entries polynomial in q.
    Mat2<WSer> B(size_t v) const {
        Rational h(1, 2);
        WSer G = sum(terms(v, h, h));
        WSer Gt = sum(terms(v, h, Rational(3, 2)));
        WSer Gtm = sum(terms(v, Rational(3, 2), h));
        WSer b11 = (one() + G).scaled(h);
        WSer b22 = (one() - G).scaled(h);
        WSer b12 = (Gtm * inv_linear(v, Rational(1), Rational(-2))).shifted(1).scaled(2);
        WSer b21 = (Gt * inv_linear(v, Rational(1), Rational(2)) * constant(q())).shifted(1).scaled(2);
        return {b11, b12, b21, b22};
    }
};

// ---------- q -> 0: polynomials in q over FactoredRatFun in (lambda, eps) ----------

using QSer = Trunc<FactoredRatFun>;

struct QBuilder {
    VarSetPtr vars;
    int D;

    FactoredRatFun frf(const Rational& c) const { return FactoredRatFun(MultiPoly::constant(vars, c)); }
    QSer constant(const FactoredRatFun& f) const {
        QSer s = QSer::zero(frf(0), D);
        s.c[0] = f;
        return s;
    }
    QSer one() const { return constant(frf(1)); }
    FactoredRatFun inv(size_t v, const Rational& c) const { return FactoredRatFun::inverse_linear(vars, v, c); }
    // t_(m+1)/t_m = 2(2m+1) q / ((m+1)(lambda - (m+lo) eps)(lambda + (m+hi) eps))
    QSer sum_terms(size_t v, const Rational& lo, const Rational& hi, std::vector<FactoredRatFun>* out = nullptr) const {
        QSer s = one();
        FactoredRatFun t = frf(1);
        for (int m = 0; m < D; ++m) {
            t = t * inv(v, -(Rational(m) + lo)) * inv(v, Rational(m) + hi);
            t = t.scaled(Rational(2 * (2 * m + 1), m + 1));
            s.c[static_cast<size_t>(m + 1)] = t;
            if (out) out->push_back(t);
        }
        return s;
    }
    Mat2<QSer> B(size_t v) const {
        Rational h(1, 2);
        QSer G = sum_terms(v, h, h);
        QSer Gt = sum_terms(v, h, Rational(3, 2));
        QSer Gtm = sum_terms(v, Rational(3, 2), h);
        QSer b11 = (one() + G).scaled(h);
        QSer b22 = (one() - G).scaled(h);
        QSer b12 = Gtm * constant(inv(v, -h).scaled(-1));
        QSer b21 = (Gt * constant(inv(v, h))).shifted(1);
        return {b11, b12, b21, b22};
    }
};

template <class T>
T cyclic_trace_sum(int k, const std::vector<Mat2<T>>& B, const VarSetPtr& vars,
                   const std::function<T(const MultiPoly&)>& lift) {
    T total = B[0].a - B[0].a;
    for (const auto& cyc : cyclic_orders(k)) {
        Mat2<T> P = B[static_cast<size_t>(cyc[0])];
        for (int t = 1; t < k; ++t) P = P * B[static_cast<size_t>(cyc[static_cast<size_t>(t)])];
        total = total - P.trace() * lift(cycle_cofactor(vars, cyc));
    }
    return total;
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::eps0: return "eps0";
        case Regime::eps_inf: return "epsInf";
        case Regime::q0: return "q0";
        case Regime::q_inf: return "qInf";
    }
    return "?";
}

Regime parse_regime(const std::string& name) {
    if (name == "eps0") return Regime::eps0;
    if (name == "epsInf" || name == "eps_inf") return Regime::eps_inf;
    if (name == "q0") return Regime::q0;
    if (name == "qInf" || name == "q_inf") return Regime::q_inf;
    throw ValidationError("unknown regime '" + name + "' (eps0, epsInf, q0, qInf)");
}

const Payload& RegimeExpansion::at(const std::vector<int>& index) const {
    for (const auto& c : coefficients)
        if (c.index == index) return c.payload;
    throw InsufficientOrder("regime coefficient not computed at the requested index");
}

VarSetPtr lambda_q_vars(int k) {
    auto n = lambda_names(k);
    n.push_back("q");
    return VarSet::make(n);
}

VarSetPtr lambda_eps_vars(int k) {
    auto n = lambda_names(k);
    n.push_back("eps");
    return VarSet::make(n);
}

std::vector<MultiPoly> eps_inf_block_G(int order) {
    WBuilder b{lambda_q_vars(1), order};
    WSer G = b.sum(b.terms(0, Rational(1, 2), Rational(1, 2)));
    G = (G - b.one()).scaled(Rational(1, 2));
    return G.c;
}

std::vector<MultiPoly> eps_inf_block_Gt(int order) {
    WBuilder b{lambda_q_vars(1), order};
    WSer Gt = b.sum(b.terms(0, Rational(1, 2), Rational(3, 2)));
    // 1/(lambda + eps/2) = 2w / (1 + 2 lambda w)
    return (Gt * b.inv_linear(0, Rational(1), Rational(2))).shifted(1).scaled(2).c;
}

RegimeExpansion expand_eps_inf(int k, int G) {
    require_k(k, G, "expand_eps_inf");
    VarSetPtr vars = lambda_q_vars(k);
    RegimeExpansion out;
    out.regime = Regime::eps_inf;
    out.k = k;
    out.order = G;
    if (k == 1) {
        // H_1 = sum_(m>=1) t_m / (2m), t_m the terms of G
        WBuilder b{vars, 2 * G};
        auto t = b.terms(0, Rational(1, 2), Rational(1, 2));
        WSer H = WSer::zero(MultiPoly(vars), 2 * G);
        for (size_t m = 1; m < t.size(); ++m) H = H + t[m].scaled(Rational(1, 2 * static_cast<long>(m)));
        for (int n = 1; n <= 2 * G; n += 2)
            if (!H.c[static_cast<size_t>(n)].is_zero()) throw std::logic_error("H_1: odd power of 1/eps");
        for (int g = 0; g <= G; ++g) out.coefficients.push_back({{g}, H.c[static_cast<size_t>(2 * g)]});
        return out;
    }
    int W = k + 2 * G;
    WBuilder b{vars, W};
    std::vector<Mat2<WSer>> B;
    for (int i = 0; i < k; ++i) B.push_back(b.B(static_cast<size_t>(i)));
    // H_k = w^-k N / Delta with N = -sum tr(prod B) Delta/E_sigma (- 1 for k = 2)
    WSer N = cyclic_trace_sum<WSer>(k, B, vars, [&](const MultiPoly& p) { return b.constant(p); });
    if (k == 2) N = N - b.one();
    for (int n = 0; n <= W; ++n) {
        bool needed = n >= k && (n - k) % 2 == 0;
        if (needed) continue;
        if (!N.c[static_cast<size_t>(n)].is_zero())
            throw std::logic_error("H_k: unexpected power eps^" + std::to_string(k - n) + " at infinity");
    }
    for (int g = 0; g <= G; ++g) {
        MultiPoly c = N.c[static_cast<size_t>(k + 2 * g)];
        divide_by_delta(k, vars, [&](size_t v, const MultiPoly& ell) {
            auto q = c.divide_linear(v, ell);
            if (!q) throw std::logic_error("H_k at infinity: coefficient not divisible by the Vandermonde factor");
            c = *q;
        });
        out.coefficients.push_back({{g}, c});
    }
    return out;
}

RegimeExpansion expand_q0(int k, int D) {
    require_k(k, D, "expand_q0");
    VarSetPtr vars = lambda_eps_vars(k);
    QBuilder b{vars, D};
    RegimeExpansion out;
    out.regime = Regime::q0;
    out.k = k;
    out.order = D;
    std::vector<FactoredRatFun> H(static_cast<size_t>(D) + 1, b.frf(0));
    if (k == 1) {
        std::vector<FactoredRatFun> t;
        b.sum_terms(0, Rational(1, 2), Rational(1, 2), &t);
        for (size_t m = 0; m < t.size(); ++m) H[m + 1] = t[m].scaled(Rational(1, 2 * static_cast<long>(m + 1)));
    } else {
        std::vector<Mat2<QSer>> B;
        for (int i = 0; i < k; ++i) B.push_back(b.B(static_cast<size_t>(i)));
        QSer N = cyclic_trace_sum<QSer>(k, B, vars, [&](const MultiPoly& p) { return b.constant(FactoredRatFun(p)); });
        if (k == 2) N = N - b.one();
        FactoredRatFun epsk(MultiPoly::var(vars, "eps", k));
        for (int d = 0; d <= D; ++d) {
            FactoredRatFun c = N.c[static_cast<size_t>(d)];
            divide_by_delta(k, vars, [&](size_t v, const MultiPoly& ell) { c = c.divided_by_linear(v, ell); });
            H[static_cast<size_t>(d)] = c * epsk;
        }
    }
    for (int d = 0; d <= D; ++d) {
        const auto& h = H[static_cast<size_t>(d)];
        for (const auto& [f, m] : h.den()) {
            const Rational& c = f.second;
            bool half_odd = !c.is_integer() && (c * Rational(2)).is_integer();
            if (!half_odd || !(c.abs() < Rational(d)))
                throw std::logic_error("H_{k,d}: pole at lambda = " + (-c).str() + " eps outside |c| < d");
        }
        out.coefficients.push_back({{d}, h});
    }
    return out;
}

std::optional<int> grading_weight(const MultiPoly& p) {
    std::optional<int> w;
    const auto& vars = *p.vars();
    for (const auto& [e, c] : p.terms()) {
        int x = 0;
        for (size_t i = 0; i < vars.size(); ++i) {
            const std::string& n = vars.name(i);
            int unit = n == "q" ? 2 : n == "w" ? -1 : 1;
            x += unit * e[i];
        }
        if (w && *w != x) return std::nullopt;
        w = x;
    }
    return w;
}

std::optional<int> grading_weight(const FactoredRatFun& f) {
    auto w = grading_weight(f.num());
    if (!w) return std::nullopt;
    int den = 0;
    for (const auto& [fac, m] : f.den()) den += m;
    return *w - den;
}

bool check_grading(const RegimeExpansion& e) {
    for (const auto& c : e.coefficients) {
        int idx = c.index.at(0);
        int expected = 0;
        switch (e.regime) {
            case Regime::eps_inf: expected = 2 * idx; break;
            case Regime::q0: expected = -2 * idx; break;
            case Regime::eps0: expected = e.k == 1 ? -2 * idx : 2 - 2 * idx - 2 * e.k; break;
            case Regime::q_inf: expected = idx; break;
        }
        std::optional<int> w;
        bool zero = false;
        if (auto* p = std::get_if<MultiPoly>(&c.payload)) {
            zero = p->is_zero();
            w = grading_weight(*p);
        } else if (auto* f = std::get_if<FactoredRatFun>(&c.payload)) {
            zero = f->is_zero();
            w = grading_weight(*f);
        } else {
            const auto& x = std::get<Expr>(c.payload);
            if (x.is_zero_literal()) continue;
            if (scaling_defect(x, expected) > 1e-25) return false;
            continue;
        }
        if (zero) continue;
        if (!w || *w != expected) return false;
    }
    return true;
}

Json to_json(const RegimeExpansion& e) {
    Json j;
    j["regime"] = regime_name(e.regime);
    j["k"] = e.k;
    j["order"] = e.order;
    Json cs = Json::array();
    for (const auto& c : e.coefficients) {
        Json x;
        x["index"] = c.index;
        if (auto* p = std::get_if<MultiPoly>(&c.payload)) {
            x["vars"] = p->vars()->names();
            x["value"] = p->to_string();
            x["terms"] = gwp1::to_json(*p);
        } else if (auto* f = std::get_if<FactoredRatFun>(&c.payload)) {
            x["vars"] = f->vars()->names();
            x["value"] = f->to_string();
            x["payload"] = gwp1::to_json(*f);
        } else {
            const auto& t = std::get<Expr>(c.payload);
            x["value"] = t.to_string();
            x["expr"] = to_json(t);
        }
        cs.push_back(x);
    }
    j["coefficients"] = cs;
    return j;
}

std::vector<MultiPoly> large_eps_expand(const FactoredRatFun& f, int k, int order) {
    // eps = 1/w: N(lambda, eps) / prod (lambda + c eps)^m, 1/(lambda + c eps) = sum_n (-lambda)^n c^(-n-1) w^(n+1)
    std::vector<std::string> names = lambda_names(k);
    names.push_back("w");
    VarSetPtr lw = VarSet::make(names, {"w"});
    size_t w = lw->at("w");
    const auto& src = *f.vars();
    size_t eps = src.at("eps");
    int deg_eps = f.num().is_zero() ? 0 : f.num().degree(eps);
    int top = order + deg_eps;  // factor products are needed through w^top
    MultiPoly den = MultiPoly::constant(lw, Rational(1));
    for (const auto& [fac, m] : f.den()) {
        if (fac.second.is_zero()) throw ValidationError("large_eps_expand: factor lambda with no eps shift");
        MultiPoly lam = MultiPoly::var(lw, src.name(fac.first));
        MultiPoly s(lw), term = MultiPoly::var(lw, "w").scaled(Rational(1) / fac.second);
        for (int n = 1; n <= top; ++n) {
            s += term;
            term = (term * lam * MultiPoly::var(lw, "w")).scaled(-Rational(1) / fac.second);
        }
        for (int r = 0; r < m; ++r) den = (den * s).truncate_degree(w, top);
    }
    MultiPoly num(lw);
    for (const auto& [e, c] : f.num().terms()) {
        Exponents x;
        for (size_t i = 0; i < src.size(); ++i) {
            if (i == eps) x[w] = -e[i];
            else x[lw->at(src.name(i))] = e[i];
        }
        num.add_term(x, c);
    }
    MultiPoly prod = (num * den).truncate_degree(w, order);
    VarSetPtr target = lambda_q_vars(k);
    std::vector<MultiPoly> out;
    for (int n = 0; n <= order; ++n) {
        MultiPoly c = prod.coefficient_of(w, n);
        out.push_back(c.remap(target));
    }
    if (prod.low_degree(w) < 0) throw std::logic_error("large_eps_expand: positive power of eps");
    return out;
}

}  // namespace gwp1::asym
