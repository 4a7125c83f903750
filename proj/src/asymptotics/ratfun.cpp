#include "gwp1/asymptotics/asymptotics.hpp"

#include <stdexcept>

namespace gwp1::asym {

namespace {

// Pulls the lowest power of each variable shared by num and den.
void strip_monomial(MultiPoly& num, MultiPoly& den) {
    if (num.is_zero()) return;
    size_t n = num.vars()->size();
    for (size_t v = 0; v < n; ++v) {
        int32_t lo = std::min(num.low_degree(v), den.low_degree(v));
        if (lo > 0) {
            num = num.shifted(v, -lo);
            den = den.shifted(v, -lo);
        }
    }
}

// Cancels common factors (x_i - x_j) between every pair of variables.
void strip_differences(MultiPoly& num, MultiPoly& den) {
    if (num.is_zero() || den.is_constant()) return;
    const auto& vars = num.vars();
    for (size_t i = 0; i < vars->size(); ++i)
        for (size_t j = 0; j < vars->size(); ++j) {
            if (i == j) continue;
            MultiPoly ell = MultiPoly::var(vars, vars->name(j));
            while (den.degree(i) > 0 && num.degree(i) > 0) {
                auto a = num.divide_linear(i, ell);
                if (!a) break;
                auto b = den.divide_linear(i, ell);
                if (!b) break;
                num = *a;
                den = *b;
            }
        }
}

std::string canonical_symbol(const std::string& s) { return s == "lambda" ? "lambda1" : s; }

struct RatRing {
    VarSetPtr vars;
    RatFun num(const Rational& r) const { return RatFun(MultiPoly::constant(vars, r)); }
    RatFun sym(const std::string& s) const {
        auto n = canonical_symbol(s);
        if (!vars->find(n)) throw ValidationError("symbol '" + s + "' is not a variable of this ring");
        return RatFun(MultiPoly::var(vars, n));
    }
    RatFun add(const RatFun& a, const RatFun& b) const { return a + b; }
    RatFun sub(const RatFun& a, const RatFun& b) const { return a - b; }
    RatFun mul(const RatFun& a, const RatFun& b) const { return a * b; }
    RatFun div(const RatFun& a, const RatFun& b) const { return a / b; }
    RatFun neg(const RatFun& a) const { return -a; }
    RatFun log(const RatFun&) const { throw ValidationError("log has no rational-function value"); }
};

struct PolyRing {
    VarSetPtr vars;
    MultiPoly num(const Rational& r) const { return MultiPoly::constant(vars, r); }
    MultiPoly sym(const std::string& s) const {
        auto n = canonical_symbol(s);
        if (!vars->find(n)) throw ValidationError("symbol '" + s + "' is not a variable of this ring");
        return MultiPoly::var(vars, n);
    }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
    MultiPoly div(const MultiPoly& a, const MultiPoly& b) const {
        if (!b.is_constant() || b.is_zero()) throw ValidationError("polynomial tree divides by a non-constant");
        return a.scaled(Rational(1) / b.constant_term());
    }
    MultiPoly neg(const MultiPoly& a) const { return -a; }
    MultiPoly log(const MultiPoly&) const { throw ValidationError("log has no polynomial value"); }
};

// Truncated power series in q with coefficients in Q(lambda).
struct QS {
    std::vector<RatFun> c;
};

struct QSeriesRing {
    VarSetPtr vars;  // lambda1..lambdak
    int D;

    QS zero() const { return QS{std::vector<RatFun>(static_cast<size_t>(D) + 1, RatFun(MultiPoly(vars)))}; }
    QS constant(const RatFun& r) const {
        QS s = zero();
        s.c[0] = r;
        return s;
    }
    QS num(const Rational& r) const { return constant(RatFun(MultiPoly::constant(vars, r))); }
    QS sym(const std::string& name) const {
        std::string s = canonical_symbol(name);
        if (s == "q") {
            QS x = zero();
            if (D >= 1) x.c[1] = RatFun(MultiPoly::constant(vars, Rational(1)));
            return x;
        }
        if (s.size() == 2 && s[0] == 'R') {
            // (lambda^2 - 4q)^(1/2) = sum_n binom(1/2, n) (-4)^n q^n lambda^(1-2n)
            std::string lam = "lambda" + s.substr(1);
            if (!vars->find(lam)) throw ValidationError("symbol '" + name + "' needs " + lam);
            QS x = zero();
            Rational b(1);
            for (int n = 0; n <= D; ++n) {
                if (n > 0) b = b * (Rational(1, 2) - Rational(n - 1)) / Rational(n);
                Rational coeff = b * Rational(-4).pow(n);
                if (n == 0)
                    x.c[0] = RatFun(MultiPoly::var(vars, lam));
                else
                    x.c[static_cast<size_t>(n)] =
                        RatFun(MultiPoly::constant(vars, coeff), MultiPoly::var(vars, lam, 2 * n - 1));
            }
            return x;
        }
        if (vars->find(s)) return constant(RatFun(MultiPoly::var(vars, s)));
        throw ValidationError("symbol '" + name + "' has no q-series value");
    }
    QS add(QS a, const QS& b) const {
        for (size_t i = 0; i < a.c.size(); ++i) a.c[i] = a.c[i] + b.c[i];
        return a;
    }
    QS sub(QS a, const QS& b) const {
        for (size_t i = 0; i < a.c.size(); ++i) a.c[i] = a.c[i] - b.c[i];
        return a;
    }
    QS mul(const QS& a, const QS& b) const {
        QS r = zero();
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (size_t j = 0; i + j < a.c.size(); ++j)
                if (!b.c[j].is_zero()) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        return r;
    }
    QS inverse(const QS& a) const {
        if (a.c[0].is_zero()) throw ValidationError("q-series division by a series without constant term");
        QS g = zero();
        RatFun one(MultiPoly::constant(vars, Rational(1)));
        RatFun inv0 = one / a.c[0];
        g.c[0] = inv0;
        for (size_t n = 1; n < a.c.size(); ++n) {
            RatFun acc{MultiPoly(vars)};
            for (size_t j = 1; j <= n; ++j)
                if (!a.c[j].is_zero()) acc = acc + a.c[j] * g.c[n - j];
            g.c[n] = -(acc * inv0);
        }
        return g;
    }
    QS div(const QS& a, const QS& b) const { return mul(a, inverse(b)); }
    QS neg(QS a) const {
        for (auto& x : a.c) x = -x;
        return a;
    }
    // log f for f(0) = 1: (log f)' = f'/f
    QS log(const QS& f) const {
        RatFun one(MultiPoly::constant(vars, Rational(1)));
        if (!(f.c[0] == one)) throw ValidationError("q-series log needs constant term 1");
        QS d = zero();
        for (size_t n = 1; n < f.c.size(); ++n)
            d.c[n - 1] = f.c[n] * RatFun(MultiPoly::constant(vars, Rational(static_cast<long>(n))));
        QS r = mul(d, inverse(f));
        QS out = zero();
        for (size_t n = 1; n < f.c.size(); ++n)
            out.c[n] = r.c[n - 1] * RatFun(MultiPoly::constant(vars, Rational(1, static_cast<long>(n))));
        return out;
    }
};

VarSetPtr lambda_only_vars(int k) {
    std::vector<std::string> n;
    for (int i = 1; i <= k; ++i) n.push_back("lambda" + std::to_string(i));
    return VarSet::make(n);
}

}  // namespace

RatFun::RatFun(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), Rational(1))) {}

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ValidationError("rational function with zero denominator");
    if (!same_vars(num_.vars(), den_.vars())) throw RingMismatch("numerator and denominator over different variables");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.vars(), Rational(1));
        return;
    }
    strip_monomial(num_, den_);
    strip_differences(num_, den_);
    if (den_.is_constant()) {
        num_ = num_.scaled(Rational(1) / den_.constant_term());
        den_ = MultiPoly::constant(num_.vars(), Rational(1));
    }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun(MultiPoly(a.vars()));
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw ValidationError("rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
    if (!same_vars(a.vars(), b.vars())) throw RingMismatch("rational functions over different variable sets");
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFun::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFun to_ratfun(const Expr& e, const VarSetPtr& vars) { return evaluate(e, RatRing{vars}); }

RatFun to_ratfun(const FactoredRatFun& f, const VarSetPtr& vars) {
    return RatFun(f.num().remap(vars), f.den_poly().remap(vars));
}

MultiPoly to_poly(const Expr& e, const VarSetPtr& vars) { return evaluate(e, PolyRing{vars}); }

std::vector<RatFun> q_expand(const Expr& e, int k, int D) {
    if (D < 0) throw ValidationError("q_expand: order must be non-negative");
    QSeriesRing ring{lambda_only_vars(k), D};
    return evaluate(e, ring).c;
}

std::vector<RatFun> small_eps_expand(const FactoredRatFun& f, int k, int order) {
    // 1/(lambda + c eps)^m = sum_j binom(-m, j) c^j eps^j lambda^(-m-j); clear lambda powers at the end
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("lambda" + std::to_string(i));
    std::vector<std::string> laurent = names;
    names.push_back("eps");
    VarSetPtr le = VarSet::make(names, laurent);
    size_t eps = le->at("eps");
    const auto& src = *f.vars();
    MultiPoly acc = f.num().remap(le).truncate_degree(eps, order);
    for (const auto& [fac, m] : f.den()) {
        const std::string& lam = src.name(fac.first);
        MultiPoly s(le);
        for (int j = 0; j <= order; ++j) {
            Exponents x;
            x[le->at(lam)] = -m - j;
            x[eps] = j;
            s.add_term(x, binomial(-m, j) * fac.second.pow(j));
        }
        acc = (acc * s).truncate_degree(eps, order);
    }
    VarSetPtr target = lambda_only_vars(k);
    std::vector<RatFun> out;
    for (int j = 0; j <= order; ++j) {
        MultiPoly c = acc.coefficient_of(eps, j);
        // multiply through by prod lambda_i^L so that every power is non-negative
        MultiPoly mono = MultiPoly::constant(le, Rational(1));
        for (int i = 0; i < k; ++i) {
            int lo = c.is_zero() ? 0 : std::min(0, c.low_degree(static_cast<size_t>(i)));
            if (lo < 0) {
                c = c.shifted(static_cast<size_t>(i), -lo);
                mono = mono.shifted(static_cast<size_t>(i), -lo);
            }
        }
        out.emplace_back(c.remap(target), mono.remap(target));
    }
    return out;
}

}  // namespace gwp1::asym
