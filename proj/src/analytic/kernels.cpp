#include "functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace gwp1::analytic {

using detail::adaptive;
using detail::RawSum;
using mp::prec_t;

namespace {

void require_distinct(const Complex& a, const Complex& b) {
    if ((a - b).is_zero()) throw SingularityError("kernel D needs a != b");
}

SeriesValue D_series_raw(const Complex& a0, const Complex& b0, const Complex& s0, long target, prec_t w0,
                         long max_terms) {
    return adaptive(
        [&](prec_t w) {
            Complex a = a0.with_prec(w), b = b0.with_prec(w), s = s0.with_prec(w);
            Complex X = s * s;
            Complex c = a - b;
            Real half(0.5, w);
            Complex one(Real(1L, w));
            RawSum r{one / c, Real(w), Real(w), 1};
            r.max_abs = mp::abs(r.sum);
            r.last_abs = r.max_abs;
            Complex coeff = one;  // s^2n / (n! (1/2-a)_n (b+1/2)_n)
            Real prev = r.max_abs;
            int quiet = 0;
            for (long n = 1;; ++n) {
                if (n >= max_terms) throw ConvergenceError("D series: no convergence within the term budget");
                coeff = coeff * X / ((Complex(half) - a + (n - 1)) * (b + half + (n - 1)) * n);
                // (c-2n+1)_(n-1), computed directly so integer a-b needs no special case
                Complex poch = one;
                for (long l = 0; l + 1 < n; ++l) poch *= c - (2 * n - 1 - l);
                Complex t = poch * coeff;
                r.sum += t;
                ++r.terms;
                Real at = mp::abs(t);
                if (at > r.max_abs) r.max_abs = at;
                r.last_abs = at;
                if (X.is_zero()) return r;
                bool small = at < mp::abs(r.sum) * detail::tiny(target + 10, w);
                quiet = small && at < prev ? quiet + 1 : 0;
                prev = at;
                if (quiet >= 3) return r;
            }
        },
        target, w0);
}

Complex D_products_raw(const Complex& a, const Complex& b, const Complex& s, long target, prec_t w, long max_terms) {
    Complex aw = a.with_prec(w), bw = b.with_prec(w), sw = s.with_prec(w);
    Complex X = sw * sw;
    Real half(0.5, w);
    Complex one(Real(1L, w));
    Complex jma = detail::j_raw(-aw, X, target, w, max_terms).value;
    Complex jb = detail::j_raw(bw, X, target, w, max_terms).value;
    Complex j1ma = detail::j_raw(one - aw, X, target, w, max_terms).value;
    Complex j1b = detail::j_raw(one + bw, X, target, w, max_terms).value;
    Complex num = jma * jb + X / ((Complex(half) - aw) * (bw + half)) * j1ma * j1b;
    return num / (aw - bw);
}

Complex Dstar_raw(const Complex& a, const Complex& b, const Complex& s, long target, prec_t w, long max_terms) {
    Complex aw = a.with_prec(w), bw = b.with_prec(w), y = s.with_prec(w) * 2L;
    Real half(0.5, w);
    Complex num = detail::J_raw(-aw - half, y, target, w, max_terms) * detail::J_raw(bw - half, y, target, w, max_terms) +
                  detail::J_raw(Complex(half) - aw, y, target, w, max_terms) *
                      detail::J_raw(bw + half, y, target, w, max_terms);
    return num / (aw - bw);
}

void require_kernel_args(const Complex& a, const Complex& b, const EvalOptions& opt) {
    require_regular(a, opt, "D");
    require_regular(b, opt, "D");
    require_distinct(a, b);
}

}  // namespace

Complex kernel_D_products(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt) {
    require_kernel_args(a, b, opt);
    long p = opt.precision_bits;
    return D_products_raw(a, b, s, p + 24, static_cast<prec_t>(working_bits(opt, s)), opt.max_terms).with_prec(p);
}

SeriesValue kernel_D_series(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt) {
    require_kernel_args(a, b, opt);
    long p = opt.precision_bits;
    SeriesValue r = D_series_raw(a, b, s, p + 16, static_cast<prec_t>(working_bits(opt, s)), opt.max_terms);
    r.value = r.value.with_prec(p);
    r.err_bound = r.err_bound.with_prec(p);
    return r;
}

Complex kernel_D(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt) {
    Complex series = kernel_D_series(a, b, s, opt).value;
    Complex prod = kernel_D_products(a, b, s, opt);
    // loose on purpose: this flags branch or precision faults, not last-bit noise
    Real tol = Real::two_pow(-opt.precision_bits / 2, series.prec());
    if (mp::rel_diff(series, prod) > tol)
        throw RouteDisagreement("D(a,b;s): series and Bessel-product routes disagree (rel diff " +
                                mp::rel_diff(series, prod).str(6) + ")");
    return series;
}

Complex kernel_Dstar(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt) {
    require_kernel_args(a, b, opt);
    if (s.is_zero()) throw SingularityError("D*: s = 0");
    long p = opt.precision_bits;
    return Dstar_raw(a, b, s, p + 24, static_cast<prec_t>(working_bits(opt, s)), opt.max_terms).with_prec(p);
}

Complex kernel_Dstar_rescaled(const Complex& a, const Complex& b, const Complex& s, const EvalOptions& opt) {
    require_kernel_args(a, b, opt);
    if (s.is_zero()) throw SingularityError("D*: s = 0");
    long p = opt.precision_bits;
    prec_t w = static_cast<prec_t>(working_bits(opt, s));
    Complex aw = a.with_prec(w), bw = b.with_prec(w), sw = s.with_prec(w);
    Real half(0.5, w);
    Complex D = D_series_raw(aw, bw, sw, p + 24, w, opt.max_terms).value;
    Complex scale = mp::exp((bw - aw - 1L) * mp::log(sw) - mp::lgamma(Complex(half) - aw) - mp::lgamma(bw + half));
    return (scale * D).with_prec(p);
}

const char* route_name(HRoute r) {
    switch (r) {
        case HRoute::trace: return "trace";
        case HRoute::factorized: return "factorized";
        case HRoute::factorized_star: return "factorized_star";
        case HRoute::commutator: return "commutator";
    }
    return "?";
}

HRoute parse_route(const std::string& name) {
    for (HRoute r : {HRoute::trace, HRoute::factorized, HRoute::factorized_star, HRoute::commutator})
        if (name == route_name(r)) return r;
    throw ValidationError("unknown route '" + name + "' (trace|factorized|factorized_star|commutator)");
}

namespace {

// Representatives of S_k / C_k: permutations with sigma(0) = 0.
std::vector<std::vector<size_t>> cyclic_orders(size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> rest(k - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        std::vector<size_t> sigma{0};
        sigma.insert(sigma.end(), rest.begin(), rest.end());
        out.push_back(std::move(sigma));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

Complex trace_product(const std::vector<const CMat*>& ms) {
    CMat p = *ms[0];
    for (size_t i = 1; i + 1 < ms.size(); ++i) p = p * *ms[i];
    return trace_of_product(p, *ms.back());
}

Complex cyclic_denominator(const std::vector<Complex>& z, const std::vector<size_t>& sigma) {
    Complex d = z[sigma[0]] - z[sigma[1 % sigma.size()]];
    for (size_t i = 1; i < sigma.size(); ++i) d *= z[sigma[i]] - z[sigma[(i + 1) % sigma.size()]];
    return d;
}

Complex k2_term(const std::vector<Complex>& z) {
    Complex d = z[0] - z[1];
    return Complex(Real(1L, d.prec())) / (d * d);
}

Complex h_trace(const std::vector<Complex>& z, const std::vector<CMat>& B) {
    Complex acc(z[0].prec());
    for (const auto& sigma : cyclic_orders(z.size())) {
        std::vector<const CMat*> ms;
        for (size_t i : sigma) ms.push_back(&B[i]);
        acc += trace_product(ms) / cyclic_denominator(z, sigma);
    }
    acc = -acc;
    if (z.size() == 2) acc -= k2_term(z);
    return acc;
}

Complex h_difference_form(const Complex& z1, const Complex& z2, const CMat& B1, const CMat& B2) {
    Complex dz = z1 - z2;
    CMat Q = (B1 - B2).map([&](const Complex& x) { return x / dz; });
    return -(trace_of_product(Q, Q) / 2L);
}

// For k >= 3 with z_k last:
//   H_k = -sum_j sum_(sigma in S_(k-1)/C_(k-1)) tr[... ([B_k - B_j, B_j]/(z_k - z_j)) ...] / prod (z_si - z_s(i+1)),
// the commutator replacing B_j in slot j; the difference quotient removes the poles at z_k = z_j.
Complex h_commutator(const std::vector<Complex>& z, const std::vector<CMat>& B) {
    size_t k = z.size();
    if (k == 2) return h_difference_form(z[0], z[1], B[0], B[1]);
    std::vector<Complex> zr(z.begin(), z.end() - 1);
    const CMat& Bk = B[k - 1];
    std::vector<CMat> C;
    for (size_t j = 0; j + 1 < k; ++j) {
        CMat dq = (Bk - B[j]).map([&](const Complex& x) { return x / (z[k - 1] - z[j]); });
        C.push_back(dq * B[j] - B[j] * dq);
    }
    Complex acc(z[0].prec());
    for (const auto& sigma : cyclic_orders(k - 1)) {
        Complex den = cyclic_denominator(zr, sigma);
        for (size_t slot = 0; slot < sigma.size(); ++slot) {
            std::vector<const CMat*> ms;
            for (size_t i = 0; i < sigma.size(); ++i) ms.push_back(i == slot ? &C[sigma[i]] : &B[sigma[i]]);
            acc += trace_product(ms) / den;
        }
    }
    return -acc;
}

double min_gap(const std::vector<Complex>& z, size_t* ia, size_t* ib) {
    double best = 1e300;
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) {
            double g = mp::abs(z[i] - z[j]).to_double();
            if (g < best) {
                best = g;
                *ia = i;
                *ib = j;
            }
        }
    return best;
}

}  // namespace

Complex h_k(const std::vector<Complex>& z0, const Complex& s, HRoute route, const EvalOptions& opt) {
    size_t k = z0.size();
    if (k < 2) throw ValidationError("H_k needs k >= 2 points");
    if (k > 8) throw ValidationError("H_k limited to k <= 8");
    for (const auto& z : z0) require_regular(z, opt, "H_k");
    size_t ia = 0, ib = 1;
    double gap = min_gap(z0, &ia, &ib);
    if (gap == 0.0) throw SingularityError("H_k: coincident points");
    long p = opt.precision_bits;
    // each near coincidence costs up to 2 log2(1/gap) bits per pole
    long extra = gap < 1.0 ? static_cast<long>(std::ceil(2.0 * static_cast<double>(k) * std::log2(1.0 / gap))) : 0;
    prec_t w = static_cast<prec_t>(working_bits(opt, s) + extra);
    std::vector<Complex> z;
    for (const auto& x : z0) z.push_back(x.with_prec(w));
    Complex sw = s.with_prec(w);

    if (route == HRoute::trace && gap < 1e-3) route = HRoute::commutator;
    Complex out(w);
    switch (route) {
        case HRoute::trace:
        case HRoute::commutator: {
            if (route == HRoute::commutator) std::swap(z[ib], z[k - 1]);  // closest pair ends in the last slot
            std::vector<CMat> B;
            for (const auto& x : z) B.push_back(detail::B_raw(x, sw, p + 24, w, opt.max_terms));
            out = route == HRoute::trace ? h_trace(z, B) : h_commutator(z, B);
            break;
        }
        case HRoute::factorized: {
            std::map<std::pair<size_t, size_t>, Complex> D;
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    if (i != j) D.emplace(std::make_pair(i, j), D_series_raw(z[i], z[j], sw, p + 24, w, opt.max_terms).value);
            Complex acc(w);
            for (const auto& sigma : cyclic_orders(k)) {
                Complex prod(Real(1L, w));
                for (size_t i = 0; i < k; ++i) prod *= D.at({sigma[i], sigma[(i + 1) % k]});
                acc += prod;
            }
            out = -acc;
            if (k == 2) out -= k2_term(z);
            break;
        }
        case HRoute::factorized_star: {
            if (sw.is_zero()) throw SingularityError("factorized_star route needs s != 0");
            Complex y = sw * 2L;
            Real half(0.5, w);
            // V(z_i) and V(-z_i)
            std::vector<CVec> Vp, Vm;
            for (const auto& x : z) {
                Vp.push_back({detail::J_raw(x - half, y, p + 24, w, opt.max_terms), detail::J_raw(x + half, y, p + 24, w, opt.max_terms)});
                Vm.push_back({detail::J_raw(-x - half, y, p + 24, w, opt.max_terms), detail::J_raw(-x + half, y, p + 24, w, opt.max_terms)});
            }
            auto Dstar = [&](size_t a, size_t b) { return (Vm[a][0] * Vp[b][0] + Vm[a][1] * Vp[b][1]) / (z[a] - z[b]); };
            Complex acc(w);
            for (const auto& sigma : cyclic_orders(k)) {
                Complex prod(Real(1L, w));
                for (size_t i = 0; i < k; ++i) prod *= Dstar(sigma[i], sigma[(i + 1) % k]);
                acc += prod;
            }
            Complex pref(Real(1L, w));
            Real pi = Real::pi(w);
            for (const auto& x : z) pref *= sw * pi / mp::cos(x * pi);
            out = -(pref * acc);
            if (k == 2) out -= k2_term(z);
            break;
        }
    }
    return out.with_prec(p);
}

Complex h_2_difference_form(const Complex& z1, const Complex& z2, const Complex& s, const EvalOptions& opt) {
    require_regular(z1, opt, "H_2");
    require_regular(z2, opt, "H_2");
    if ((z1 - z2).is_zero()) throw SingularityError("H_2 difference form: coincident points");
    long p = opt.precision_bits;
    double gap = mp::abs(z1 - z2).to_double();
    long extra = gap < 1.0 ? static_cast<long>(std::ceil(std::log2(1.0 / gap))) : 0;
    prec_t w = static_cast<prec_t>(working_bits(opt, s) + extra);
    CMat B1 = detail::B_raw(z1, s, p + 24 + extra, w, opt.max_terms);
    CMat B2 = detail::B_raw(z2, s, p + 24 + extra, w, opt.max_terms);
    return h_difference_form(z1.with_prec(w), z2.with_prec(w), B1, B2).with_prec(p);
}

SeriesValue h_1(const Complex& z, const Complex& s, const EvalOptions& opt) {
    require_regular(z, opt, "H_1");
    long p = opt.precision_bits;
    long target = p + 16;
    SeriesValue r = adaptive(
        [&](prec_t w) {
            Complex zw = z.with_prec(w), sw = s.with_prec(w);
            Complex X = sw * sw;
            Real half(0.5, w);
            Complex first = X / ((zw - half) * (zw + half));
            // t_(m+1)/t_m = (2m+1)(2m)/(m+1)^2 s^2 / ((z-m-1/2)(z+m+1/2)), m >= 1
            return detail::sum_ratio(first, [&](long n) {
                long m = n + 1;
                Complex d = (zw - half - m) * (zw + half + m) * ((m + 1) * (m + 1));
                return X * ((2 * m + 1) * (2 * m)) / d;
            }, target, opt.max_terms, "H_1");
        },
        target, static_cast<prec_t>(working_bits(opt, s)));
    r.value = r.value.with_prec(p);
    r.err_bound = r.err_bound.with_prec(p);
    return r;
}

Complex h_1_star(const Complex& z, const Complex& s, const EvalOptions& opt) {
    require_regular(z, opt, "H_1*");
    if (s.is_zero()) throw SingularityError("H_1*: s = 0");
    long p = opt.precision_bits;
    // the central difference keeps about 2/3 of the working bits
    prec_t w = static_cast<prec_t>(working_bits(opt, s) + p / 2 + 16);
    long target = static_cast<long>(w) - 8;
    Complex zw = z.with_prec(w), y = s.with_prec(w) * 2L;
    Real half(0.5, w);
    Real h = Real::two_pow(-static_cast<long>(w) / 3, w);
    auto J = [&](const Complex& nu) { return detail::J_raw(nu, y, target, w, opt.max_terms); };
    auto dJ = [&](const Complex& nu) { return (J(nu + h) - J(nu - h)) / (h * 2L); };
    Complex a = -zw - half, b = zw - half;
    Complex sum = J(a) * dJ(b) + J(Complex(half) - zw) * dJ(zw + half);
    Real pi = Real::pi(w);
    Complex pref = s.with_prec(w) * pi / mp::cos(zw * pi);
    return (pref * sum).with_prec(p);
}

}  // namespace gwp1::analytic
