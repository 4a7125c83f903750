#include "gwp1/correlators/correlators.hpp"
#include "gwp1/ring/bernoulli.hpp"

namespace gwp1 {

namespace {

MultiPoly xe_monomial(int xpow, int epow, const Rational& c) {
    Exponents e;
    e[0] = xpow;
    e[1] = epow;
    return MultiPoly::monomial(xe_vars(), e, c);
}

PolySeries lambda_series(int N) { return PolySeries::univariate("lambda^-1", N, MultiPoly(xe_vars())); }

// Adds c * (lambda - x)^(-n) re-expanded in 1/lambda (x powers <= x_order).
void add_shifted_power(PolySeries& out, int n, const MultiPoly& c, int x_order) {
    int N = out.order();
    for (int m = 0; n + m <= N; ++m) {
        if (x_order >= 0 && m > x_order) break;
        Rational w = binomial(n + m - 1, m);
        out.add(n + m, c.shifted(0, m).scaled(w));
    }
}

// B_n from sum_{k<=n} C(n+1,k) B_k = 0, independent of the polynomial construction
std::vector<Rational> bernoulli_numbers_by_recurrence(int n) {
    std::vector<Rational> B{Rational(1)};
    for (int m = 1; m <= n; ++m) {
        Rational s(0);
        for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * B[static_cast<size_t>(k)];
        B.push_back(-s / Rational(m + 1));
    }
    return B;
}

}  // namespace

PolySeries one_point_series(int N, int x_order) {
    if (N < 2) throw ValidationError("one-point order must be >= 2");
    PolySeries out = lambda_series(N);
    for (int j = 2; j <= N; ++j) {
        // eps^j B_j(x/eps + c) = sum_k C(j,k) B_k(c) eps^k x^(j-k)
        MultiPoly coeff(xe_vars());
        for (int i = 0; i <= j / 2; ++i) {
            Rational pref = Rational(1) / (factorial(i) * factorial(i) * Rational(j));
            for (int l = 0; l <= 2 * i; ++l) {
                Rational c = Rational(i - l) + Rational(1, 2);
                Rational w = pref * binomial(2 * i, l) * (l % 2 ? Rational(-1) : Rational(1));
                for (int k = 0; k <= j; ++k) {
                    if (x_order >= 0 && j - k > x_order) continue;
                    Rational bk = bernoulli_poly(k).substitute(0, c).constant_term();
                    Rational v = w * binomial(j, k) * bk;
                    if (!v.is_zero()) coeff += xe_monomial(j - k, k - 1 - 2 * i, v);
                }
            }
        }
        out.add(j, coeff);
    }
    return out;
}

PolySeries one_point_qseries_oracle(int D, int N, int x_order) {
    if (N < 2) throw ValidationError("one-point order must be >= 2");
    if (D < 0) throw ValidationError("degree bound must be >= 0");
    // Everything is first built as a series in w = 1/(lambda - x) with coefficients in eps.
    std::vector<MultiPoly> w(static_cast<size_t>(N) + 1, MultiPoly(xe_vars()));
    // q^d (2d-1)! / (d!^2 prod_{j=1}^d (w^-2 - (2j-1)^2 eps^2/4)),
    //   1/(w^-2 - a) = w^2 sum_r a^r w^(2r)
    for (int d = 1; d <= D && 2 * d <= N; ++d) {
        std::vector<MultiPoly> prod(static_cast<size_t>(N) + 1, MultiPoly(xe_vars()));
        prod[0] = MultiPoly::constant(xe_vars(), factorial(2 * d - 1) / (factorial(d) * factorial(d)));
        for (int j = 1; j <= d; ++j) {
            Rational a = Rational((2 * j - 1) * (2 * j - 1), 4);
            std::vector<MultiPoly> next(static_cast<size_t>(N) + 1, MultiPoly(xe_vars()));
            for (int p = 0; p <= N; ++p) {
                if (prod[static_cast<size_t>(p)].is_zero()) continue;
                for (int r = 0; p + 2 + 2 * r <= N; ++r)
                    next[static_cast<size_t>(p + 2 + 2 * r)] += prod[static_cast<size_t>(p)] * xe_monomial(0, 2 * r, a.pow(r));
            }
            prod = std::move(next);
        }
        for (int p = 0; p <= N; ++p) w[static_cast<size_t>(p)] += prod[static_cast<size_t>(p)];
    }
    // digamma term: sum_g eps^(2g) (1 - 2^(2g-1)) B_2g / (2^(2g) g) w^(2g)
    auto B = bernoulli_numbers_by_recurrence(N);
    for (int g = 1; 2 * g <= N; ++g) {
        Rational c = (Rational(1) - Rational(2).pow(2 * g - 1)) * B[static_cast<size_t>(2 * g)] /
                     (Rational(2).pow(2 * g) * Rational(g));
        w[static_cast<size_t>(2 * g)] += xe_monomial(0, 2 * g, c);
    }
    PolySeries out = lambda_series(N);
    for (int n = 1; n <= N; ++n)
        if (!w[static_cast<size_t>(n)].is_zero()) add_shifted_power(out, n, w[static_cast<size_t>(n)], x_order);
    // log(lambda/(lambda - x)) - x/lambda = sum_{j>=2} x^j/(j lambda^j)
    for (int j = 2; j <= N; ++j)
        if (x_order < 0 || j <= x_order) out.add(j, xe_monomial(j, 0, Rational(1, j)));
    // overall 1/eps
    return out.map(MultiPoly(xe_vars()), [](const MultiPoly& p) { return p.shifted(1, -1); });
}

}  // namespace gwp1
