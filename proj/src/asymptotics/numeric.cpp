#include "gwp1/analytic/analytic.hpp"
#include "gwp1/asymptotics/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gwp1::asym {

using analytic::Complex;
using analytic::Real;
using mp::prec_t;

namespace {

struct NumRing {
    prec_t p;
    std::map<std::string, Complex> syms;

    Complex num(const Rational& r) const { return Complex(r, p); }
    Complex sym(const std::string& s) const {
        auto it = syms.find(s == "lambda" ? "lambda1" : s);
        if (it == syms.end()) throw ValidationError("symbol '" + s + "' has no value at this point");
        return it->second;
    }
    Complex add(const Complex& a, const Complex& b) const { return a + b; }
    Complex sub(const Complex& a, const Complex& b) const { return a - b; }
    Complex mul(const Complex& a, const Complex& b) const { return a * b; }
    Complex div(const Complex& a, const Complex& b) const { return a / b; }
    Complex neg(const Complex& a) const { return -a; }
    Complex log(const Complex& a) const { return mp::log(a); }
};

Real real(double x, prec_t p) { return Real(x, p); }

// lambda_i, q, eps, sqrtq, R_i, S_i, C_i at a real point.
NumRing bind_point(const std::vector<Real>& lambda, const Real& q, const Real& eps, prec_t p) {
    NumRing r{p, {}};
    r.syms["q"] = Complex(q);
    r.syms["sqrtq"] = Complex(mp::sqrt(q));
    r.syms["eps"] = Complex(eps);
    Real pi = Real::pi(p);
    for (size_t i = 0; i < lambda.size(); ++i) {
        std::string n = std::to_string(i + 1);
        const Real& l = lambda[i];
        r.syms["lambda" + n] = Complex(l);
        r.syms["R" + n] = mp::sqrt(Complex(l * l - q * 4L));
        if (!eps.is_zero()) {
            Real a = pi * l / eps;
            r.syms["S" + n] = Complex(mp::sin(a));
            r.syms["C" + n] = Complex(mp::cos(a));
        }
    }
    return r;
}

double to_d(const Real& x) { return x.to_double(); }

void finish_pairs(Report& rep, double expected_order) {
    rep.expected_order = expected_order;
    rep.pass = rep.points.size() >= 2;
    for (size_t i = 0; i + 1 < rep.points.size(); ++i) {
        double a = rep.points[i], b = rep.points[i + 1];
        double ratio = rep.residuals[i] / rep.residuals[i + 1];
        double scale = std::fabs(std::log(b / a));
        rep.measured_order.push_back(std::log(ratio) / scale);
        double want = std::exp(expected_order * scale);
        if (!(std::fabs(ratio / want - 1.0) <= rep.tolerance)) rep.pass = false;
    }
}

const TableEntry& need(const Table& t, const std::map<std::string, int>& f, const std::string& what) {
    const TableEntry* e = t.find(f);
    if (!e) throw InsufficientOrder("table " + t.path + " has no entry for " + what);
    return *e;
}

const TableEntry* find_kind(const Table& t, int k, int d, int m, const std::string& kind) {
    for (const auto& e : t.entries)
        if (e.field("k") == k && e.field("d") == d && e.field("m") == m && e.meta.value("kind", "") == kind) return &e;
    return nullptr;
}

}  // namespace

Report verify_eps0(int k, int g_max, const std::vector<double>& lambda, double q, const std::vector<double>& eps_list,
                   const Table& table, long precision_bits, double tolerance) {
    if (k < 1 || static_cast<int>(lambda.size()) != k) throw ValidationError("verify_eps0: need k lambda values");
    if (g_max < 0) throw ValidationError("verify_eps0: g_max must be non-negative");
    if (eps_list.size() < 2) throw ValidationError("verify_eps0: need at least two eps values");
    for (double l : lambda)
        if (!(q > 0 && 2 * std::sqrt(q) < l)) throw ValidationError("verify_eps0: need 0 < 2 sqrt(q) < lambda_i");
    for (double e : eps_list)
        if (!(e > 0)) throw ValidationError("verify_eps0: eps must be positive");

    prec_t p = static_cast<prec_t>(precision_bits);
    analytic::EvalOptions opt;
    opt.precision_bits = precision_bits;
    std::vector<Real> lam;
    for (double l : lambda) lam.push_back(real(l, p));
    Real qq = real(q, p);
    std::vector<const TableEntry*> terms;
    for (int g = 0; g <= g_max; ++g)
        terms.push_back(&need(table, {{"k", k}, {"g", g}}, "H_" + std::to_string(k) + "^[" + std::to_string(g) + "]"));

    Report rep;
    rep.regime = "eps0";
    rep.k = k;
    rep.tolerance = tolerance;
    for (int g = 0; g <= g_max; ++g) rep.orders_checked.push_back(g);
    for (double e : eps_list) {
        Real eps = real(e, p);
        std::vector<Complex> z;
        for (const auto& l : lam) z.push_back(Complex(l / eps));
        Complex s(mp::sqrt(qq) / eps);
        NumRing ring = bind_point(lam, qq, eps, p);
        Complex value = k == 1 ? analytic::h_1_star(z[0], s, opt) : analytic::h_k(z, s, analytic::HRoute::trace, opt);
        Complex approx(p);
        if (k == 1) approx = Complex(mp::log(mp::sqrt(qq)) - mp::log(lam[0]));
        for (int g = 0; g <= g_max; ++g) {
            int power = k == 1 ? 2 * g : 2 * g - 2 + 2 * k;
            approx += evaluate(terms[static_cast<size_t>(g)]->expr, ring) * mp::pow(Complex(eps), power);
        }
        rep.points.push_back(e);
        rep.residuals.push_back(to_d(mp::abs(value - approx)));
    }
    finish_pairs(rep, k == 1 ? 2.0 * (g_max + 1) : 2.0 * g_max + 2.0 * k);
    return rep;
}

Report verify_q_inf(int k, int d_max, const std::vector<double>& lambda, double eps, const std::vector<double>& q_list,
                    const Table& table, long precision_bits, double tolerance) {
    if (k < 1 || static_cast<int>(lambda.size()) != k) throw ValidationError("verify_q_inf: need k lambda values");
    if (d_max < 0) throw ValidationError("verify_q_inf: d_max must be non-negative");
    if (q_list.size() < 2) throw ValidationError("verify_q_inf: need at least two q values");
    if (!(eps > 0)) throw ValidationError("verify_q_inf: eps must be positive");
    for (double q : q_list)
        if (!(q > 0)) throw ValidationError("verify_q_inf: q must be positive");

    prec_t p = static_cast<prec_t>(precision_bits);
    analytic::EvalOptions opt;
    opt.precision_bits = precision_bits;
    std::vector<Real> lam;
    for (double l : lambda) lam.push_back(real(l, p));
    Real ep = real(eps, p);
    Real pi = Real::pi(p);

    Report rep;
    rep.regime = "qInf";
    rep.k = k;
    rep.tolerance = tolerance;
    for (int d = 0; d <= d_max; ++d) rep.orders_checked.push_back(d);
    for (int d = (k == 1 ? 1 : 0); d <= d_max; ++d) {
        bool any = false;
        for (const auto& e : table.entries) any = any || (e.field("k") == k && e.field("d") == d);
        if (!any)
            throw InsufficientOrder("table " + table.path + " has no q^(-" + std::to_string(d) + "/2) terms for k = " +
                                    std::to_string(k));
    }
    std::vector<std::string> absent;
    auto coefficient = [&](const NumRing& ring, int d, int m, const std::string& kind) {
        const TableEntry* e = find_kind(table, k, d, m, kind);
        if (!e) {
            std::string id = "d=" + std::to_string(d) + " m=" + std::to_string(m) + " " + kind;
            if (std::find(absent.begin(), absent.end(), id) == absent.end()) absent.push_back(id);
            return Complex(p);
        }
        return evaluate(e->expr, ring);
    };
    for (double qd : q_list) {
        Real q = real(qd, p), sq = mp::sqrt(q);
        NumRing ring = bind_point(lam, q, ep, p);
        std::vector<Complex> z;
        Complex cosprod(Real(1L, p));
        for (const auto& l : lam) {
            z.push_back(Complex(l / ep));
            cosprod = cosprod * Complex(mp::cos(pi * l / ep));
        }
        Complex s(sq / ep);
        Complex value = cosprod * (k == 1 ? analytic::h_1_star(z[0], s, opt)
                                          : analytic::h_k(z, s, analytic::HRoute::trace, opt));
        Complex approx(p);
        if (k == 1) {
            // -pi/2 S + S sum_d (2d-1)!! prod_{j=-d..d} (lambda - eps j) / ((2d+1) d! 2^(3d+1) q^(d+1/2))
            Real S = mp::sin(pi * lam[0] / ep);
            approx = Complex(-(pi * S) / 2L);
            for (int d = 0; 2 * d + 1 <= d_max; ++d) {
                Real prod(1L, p);
                for (int j = -d; j <= d; ++j) prod = prod * (lam[0] - ep * static_cast<long>(j));
                Real coef(double_factorial_odd(d) /
                              (Rational(2 * d + 1) * factorial(d) * Rational(2).pow(3 * d + 1)), p);
                Real qpow = sq;
                for (int i = 0; i < d; ++i) qpow = qpow * q;
                approx += Complex(S * prod * coef / qpow);
            }
        }
        Real qinvh = Real(1L, p) / sq;
        for (int d = (k == 1 ? 1 : 0); d <= d_max; ++d) {
            Complex term = k == 1 ? Complex(p) : coefficient(ring, d, 0, "cos");
            int mmax = k == 1 ? 1 : std::min(d, k);
            for (int m = 1; m <= mmax; ++m) {
                Real phase = sq * 4L * static_cast<long>(m) / ep;
                term += coefficient(ring, d, m, "cos") * Complex(mp::cos(phase));
                term += coefficient(ring, d, m, "sin") * Complex(mp::sin(phase));
            }
            Real scale(1L, p);
            for (int i = 0; i < d; ++i) scale = scale * qinvh;
            approx += term * scale;
        }
        rep.points.push_back(qd);
        rep.residuals.push_back(to_d(mp::abs(value - approx)));
    }
    if (!absent.empty()) {
        rep.note = "entries absent from the table, taken as 0:";
        for (const auto& a : absent) rep.note += " [" + a + "]";
    }
    finish_pairs(rep, (d_max + 1) / 2.0);
    return rep;
}

Report debye_check(const std::vector<double>& nu_list, double zeta, const Table& table, long precision_bits,
                   double tolerance) {
    if (!(zeta > 0.05 && zeta < 0.95)) throw ValidationError("debye_check: zeta must lie in (0.05, 0.95)");
    if (nu_list.size() < 2) throw ValidationError("debye_check: need at least two nu values");
    prec_t p = static_cast<prec_t>(precision_bits);
    analytic::EvalOptions opt;
    opt.precision_bits = precision_bits;
    Real z = real(zeta, p);
    Real rt = mp::sqrt(Real(1L, p) - z * z);
    NumRing ring{p, {{"zeta", Complex(z)}, {"rt", Complex(rt)}, {"w", Complex(Real(1L, p) / rt)}}};
    std::vector<Complex> V;
    for (int m = 0; m <= 3; ++m) {
        const TableEntry* e = nullptr;
        for (const auto& x : table.entries)
            if (x.meta.value("name", "") == "V" && x.field("m") == m) e = &x;
        if (!e) throw InsufficientOrder("table " + table.path + " has no V_" + std::to_string(m));
        V.push_back(evaluate(e->expr, ring));
    }
    Report rep;
    rep.regime = "debye";
    rep.k = 0;
    rep.tolerance = tolerance;
    rep.orders_checked = {0, 1, 2, 3};
    for (double nd : nu_list) {
        if (!(nd > 1)) throw ValidationError("debye_check: nu must exceed 1");
        Real nu = real(nd, p);
        Real half(0.5, p);
        Complex J = analytic::bessel_J(Complex(nu - half), Complex(nu * z), opt);
        Complex approx = Complex((nu - half) * mp::log(nu - half)) - mp::lgamma(Complex(nu + half)) +
                         V[0] * Complex(nu) + V[1] + V[2] / Complex(nu) + V[3] / Complex(nu * nu);
        rep.points.push_back(nd);
        rep.residuals.push_back(to_d(mp::abs(mp::log(J) - approx)));
    }
    finish_pairs(rep, 3.0);
    return rep;
}

double scaling_defect(const Expr& e, int weight, long precision_bits) {
    prec_t p = static_cast<prec_t>(precision_bits);
    std::vector<Real> lam{Real(2.3, p), Real(3.7, p), Real(5.1, p)};
    Real q(0.8, p), eps(0.37, p);
    Complex f0 = evaluate(e, bind_point(lam, q, eps, p));
    for (auto& l : lam) l = l * 2L;
    Complex f1 = evaluate(e, bind_point(lam, q * 4L, eps * 2L, p));
    Complex unscaled = f1 / mp::pow(Complex(Real(2L, p)), weight);
    Real a = mp::abs(f0);
    Real diff = mp::abs(unscaled - f0);
    return a.is_zero() ? to_d(diff) : to_d(diff / a);
}

int debye_w_degree(const Expr& e) {
    auto vars = VarSet::make({"w"});
    return to_poly(e, vars).degree(0);
}

Json to_json(const Report& r) {
    Json j;
    j["regime"] = r.regime;
    j["k"] = r.k;
    j["orders_checked"] = r.orders_checked;
    j["points"] = r.points;
    j["residuals"] = r.residuals;
    j["measured_order"] = r.measured_order;
    j["expected_order"] = r.expected_order;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace gwp1::asym
