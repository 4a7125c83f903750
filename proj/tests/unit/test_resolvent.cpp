#include "gwp1/resolvent/resolvent.hpp"

#include <doctest.h>

#include <map>

using namespace gwp1;

namespace {

MultiPoly ne(std::initializer_list<std::tuple<int, int, Rational>> terms) {
    MultiPoly p(ne_vars());
    for (const auto& [n, e, c] : terms) {
        Exponents x;
        x[0] = n;
        x[1] = e;
        p.add_term(x, c);
    }
    return p;
}

MultiPoly sp(std::initializer_list<std::pair<int, Rational>> terms) {
    MultiPoly p(s_vars());
    for (const auto& [k, c] : terms) {
        Exponents x;
        x[0] = k;
        p.add_term(x, c);
    }
    return p;
}

bool all_zero(const std::vector<MultiPoly>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

bool mat_zero_through(const Mat2<PolySeries>& m, int N) {
    return m.a.is_zero_through({N}) && m.b.is_zero_through({N}) && m.c.is_zero_through({N}) &&
           m.d.is_zero_through({N});
}

// Linear recursion for A_k with a(z) = sum A_k z^(-k-1), in the form displayed
// with the uniqueness proof of the difference-equation solution.
std::vector<MultiPoly> alpha_from_displayed_recursion(int kmax) {
    const auto& v = s_vars();
    MultiPoly s2 = MultiPoly::var(v, "s", 2), one = MultiPoly::constant(v, 1);
    MultiPoly u = one + s2.scaled(4);
    std::vector<MultiPoly> A(static_cast<size_t>(kmax) + 2, MultiPoly(v));
    auto Aat = [&](int k) { return k < 0 ? MultiPoly(v) : A[static_cast<size_t>(k)]; };
    for (int k = -1; k + 1 <= kmax; ++k) {
        MultiPoly rhs(v);
        if (k == 0) rhs -= s2.scaled(16);
        rhs -= u.scaled(3) * Aat(k - 1);
        rhs += u.scaled(2) * Aat(k);
        for (int k1 = 0; k1 <= k - 1; ++k1) {
            int n = k - 1 - k1;
            Rational sgn = (n + 1) % 2 ? Rational(-1) : Rational(1);
            MultiPoly w = s2.scaled(sgn * 12) - s2.scaled(Rational(2).pow(n + 2)) + (one.scaled(3) - s2.scaled(4));
            rhs += (Aat(k1) * w).scaled(binomial(1 + k1, n));
        }
        for (int k1 = 0; k1 <= k; ++k1) {
            int n = k - k1;
            Rational sgn = n % 2 ? Rational(-1) : Rational(1);
            MultiPoly w = s2.scaled(sgn * 8) - s2.scaled(Rational(2).pow(n + 3)) - u.scaled(2);
            rhs += (Aat(k1) * w).scaled(binomial(1 + k1, n));
        }
        for (int k1 = 0; k1 <= k; ++k1) rhs -= Aat(k1).scaled(12 * binomial(1 + k1, k + 1 - k1));
        for (int k1 = 0; k1 <= k; ++k1) rhs += Aat(k1).scaled(8 * binomial(1 + k1, k + 2 - k1));
        A[static_cast<size_t>(k + 1)] = rhs.scaled(Rational(-1, 8 * (k + 2)));
    }
    return A;
}

// Laurent polynomial in z, truncated below.
using ZPoly = std::map<int, MultiPoly>;

void zadd(ZPoly& p, int e, const MultiPoly& c) {
    auto [it, ins] = p.try_emplace(e, c);
    if (!ins) it->second += c;
}

// (z + c)^(-j-1) expanded down to z^low
ZPoly inverse_power(int j, const Rational& c, int low) {
    ZPoly r;
    for (int n = 0; -j - 1 - n >= low; ++n)
        zadd(r, -j - 1 - n, MultiPoly::constant(s_vars(), binomial(-j - 1, n) * c.pow(n)));
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, int low) {
    ZPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            if (ea + eb >= low) zadd(r, ea + eb, ca * cb);
    return r;
}

ZPoly zlin(std::initializer_list<std::pair<int, Rational>> t) {
    ZPoly r;
    for (const auto& [e, c] : t) zadd(r, e, MultiPoly::constant(s_vars(), c));
    return r;
}

// Third generator: undetermined coefficients in the cleared scalar equation
//   s^2 [(z - 3/2)(1 + a(z) + a(z+1)) - (z + 1/2)(1 + a(z-2) + a(z-1))]
//     + (z^2 - 1/4)(z - 3/2)(a(z-1) - a(z)) = 0.
// A_j enters first at z^(1-j) with coefficient j + 1, so the system is triangular.
std::vector<MultiPoly> alpha_from_undetermined_coefficients(int kmax) {
    const auto& v = s_vars();
    MultiPoly s2 = MultiPoly::var(v, "s", 2);
    int low = 1 - kmax;
    ZPoly zm = zlin({{1, 1}, {0, Rational(-3, 2)}}), zp = zlin({{1, 1}, {0, Rational(1, 2)}});
    ZPoly cubic = zlin({{3, 1}, {2, Rational(-3, 2)}, {1, Rational(-1, 4)}, {0, Rational(3, 8)}});
    std::vector<ZPoly> cont;
    for (int j = 0; j <= kmax; ++j) {
        ZPoly t0 = inverse_power(j, 0, low - 4), t1 = inverse_power(j, 1, low - 4);
        ZPoly tm1 = inverse_power(j, -1, low - 4), tm2 = inverse_power(j, -2, low - 4);
        ZPoly c;
        for (const auto& [e, x] : zmul(zm, t0, low)) zadd(c, e, x * s2);
        for (const auto& [e, x] : zmul(zm, t1, low)) zadd(c, e, x * s2);
        for (const auto& [e, x] : zmul(zp, tm2, low)) zadd(c, e, -(x * s2));
        for (const auto& [e, x] : zmul(zp, tm1, low)) zadd(c, e, -(x * s2));
        for (const auto& [e, x] : zmul(cubic, tm1, low)) zadd(c, e, x);
        for (const auto& [e, x] : zmul(cubic, t0, low)) zadd(c, e, -x);
        cont.push_back(std::move(c));
    }
    std::vector<MultiPoly> A;
    for (int k = 0; k <= kmax; ++k) {
        int e = 1 - k;
        MultiPoly acc(v);
        if (e == 0) acc -= s2.scaled(2);  // the constant terms: s^2[(z - 3/2) - (z + 1/2)]
        for (int j = 0; j < k; ++j) {
            auto it = cont[static_cast<size_t>(j)].find(e);
            if (it != cont[static_cast<size_t>(j)].end()) acc += it->second * A[static_cast<size_t>(j)];
        }
        MultiPoly lead = cont[static_cast<size_t>(k)].at(e);
        REQUIRE(lead == MultiPoly::constant(v, k + 1));
        A.push_back(acc.scaled(Rational(-1, k + 1)));
    }
    return A;
}

}  // namespace

TEST_CASE("recursion: initial data and leading coefficients") {
    auto r = recursion_resolvent(6);
    CHECK(r.a[0].is_zero());
    CHECK(r.c[0] == ne({{0, 0, 1}}));
    // alpha_n = 1/l^2 + 2 n e / l^3 + (3 n^2 e^2 + e^2/4 + 3)/l^4 + (4 n^3 e^3 + n(e^3 + 12 e))/l^5
    CHECK(r.a[1] == ne({{0, 0, 1}}));
    CHECK(r.a[2] == ne({{1, 1, 2}}));
    CHECK(r.a[3] == ne({{2, 2, 3}, {0, 2, Rational(1, 4)}, {0, 0, 3}}));
    CHECK(r.a[4] == ne({{3, 3, 4}, {1, 3, 1}, {1, 1, 12}}));
    // gamma_n = 1/l + (n e - e/2)/l^2 + (n^2 e^2 - n e^2 + e^2/4 + 2)/l^3 + ...
    CHECK(r.c[1] == ne({{1, 1, 1}, {0, 1, Rational(-1, 2)}}));
    CHECK(r.c[2] == ne({{2, 2, 1}, {1, 2, -1}, {0, 2, Rational(1, 4)}, {0, 0, 2}}));
    CHECK(r.c[3] == ne({{3, 3, 1}, {2, 3, Rational(-3, 2)}, {1, 3, Rational(3, 4)}, {1, 1, 6},
                        {0, 3, Rational(-1, 8)}, {0, 1, -3}}));
}

TEST_CASE("recursion: relations not used for generation vanish") {
    auto r = recursion_resolvent(12);
    CHECK(all_zero(recursion_shift_residual(r)));
    CHECK(all_zero(recursion_quadratic_residual(r)));
    auto bad = recursion_resolvent(6, Rational(2));
    CHECK_FALSE(all_zero(recursion_shift_residual(bad)));
}

TEST_CASE("closed form: first coefficients and structure") {
    auto M = closed_form_M(24);
    CHECK(M.alpha.coefficient(2) == sp({{2, 1}}));
    CHECK(M.P.coefficient(1) == sp({{1, 1}}));
    CHECK(M.Q.coefficient(2) == sp({{1, Rational(-1, 2)}}));
    auto m = M.matrix();
    CHECK(m.a.coefficient(0) == sp({{0, 1}}));
    CHECK(m.b.coefficient(0).is_zero());
    CHECK(m.c.coefficient(0).is_zero());
    CHECK(m.d.coefficient(0).is_zero());
    const size_t s = 0;
    for (int k = 0; k <= 24; ++k) {
        CHECK((k % 2 == 0 || M.alpha.coefficient(k).is_zero()));
        CHECK((k % 2 == 1 || M.P.coefficient(k).is_zero()));
        CHECK((k % 2 == 0 || M.Q.coefficient(k).is_zero()));
        for (const auto* e : {&m.a, &m.b, &m.c, &m.d}) CHECK(e->coefficient(k).degree(s) <= k);
        // alpha is even in s
        for (const auto& [ex, c] : M.alpha.coefficient(k).terms()) CHECK(ex[0] % 2 == 0);
    }
    CHECK((m.a + m.d).is_zero_through({0}) == false);
    PolySeries tr = m.a + m.d;
    CHECK(tr.coefficient(0) == sp({{0, 1}}));
    for (int k = 1; k <= 24; ++k) CHECK(tr.coefficient(k).is_zero());
    for (int N : {1, 2, 5, 12, 24}) {
        auto mm = closed_form_M(N).matrix();
        CHECK(series_det(mm).order() == N);
        CHECK(series_det(mm).is_zero_through({N}));
    }
}

TEST_CASE("closed form: parallel and serial paths agree") {
    auto p = closed_form_M(20, Exec::parallel), s = closed_form_M(20, Exec::serial);
    CHECK(p.alpha == s.alpha);
    CHECK(p.P == s.P);
    CHECK(p.Q == s.Q);
}

TEST_CASE("closed form: third generator by undetermined coefficients") {
    auto M = closed_form_M(12);
    auto A = alpha_from_undetermined_coefficients(11);
    for (int k = 0; k <= 11; ++k) CHECK(A[static_cast<size_t>(k)] == M.alpha.coefficient(k + 1));
}

TEST_CASE("displayed A_k recursion does not reproduce alpha beyond A_1") {
    auto M = closed_form_M(4);
    auto A = alpha_from_displayed_recursion(3);
    CHECK(A[0] == M.alpha.coefficient(1));
    CHECK(A[1] == M.alpha.coefficient(2));
    // it produces an odd-index term, which the even solution cannot have
    CHECK_FALSE(A[2].is_zero());
    CHECK(M.alpha.coefficient(3).is_zero());
}

TEST_CASE("closed form: off-diagonal entries follow from alpha") {
    auto M = closed_form_M(16);
    auto R = resolvent_from_alpha(M.alpha);
    CHECK(R.P.equal_through(M.P, {15}));
    CHECK(R.Q.equal_through(M.Q, {15}));
}

TEST_CASE("scalar difference residual") {
    auto M = closed_form_M(12);
    PolySeries res = scalar_difference_residual(M.alpha);
    CHECK(res.order() >= 9);
    CHECK(res.is_zero_through({9}));
    CHECK(res.is_zero_through({res.order()}));
    // alpha = 0 at s = 0
    PolySeries zero = PolySeries::univariate("z^-1", 12, MultiPoly(s_vars()));
    PolySeries r0 = scalar_difference_residual(zero);
    for (const auto& [e, c] : r0.terms()) CHECK(c.substitute(0, Rational(0)).is_zero());
    // single perturbed coefficient is detected
    PolySeries bumped = M.alpha;
    bumped.add(6, MultiPoly::constant(s_vars(), 1));
    CHECK_FALSE(scalar_difference_residual(bumped).is_zero_through({9}));
}

TEST_CASE("matrix difference residual") {
    auto m = closed_form_M(12).matrix();
    auto res = matrix_difference_residual(m);
    CHECK(res.a.order() == 11);
    CHECK(mat_zero_through(res, 11));
    // constant M = diag(1, 0): residual is the commutator [[0, -s], [-s, 0]]
    PolySeries one = PolySeries::univariate("z^-1", 2, MultiPoly(s_vars()));
    PolySeries zero = one;
    one.add(0, MultiPoly::constant(s_vars(), 1));
    auto c = matrix_difference_residual({one, zero, zero, zero});
    MultiPoly s = MultiPoly::var(s_vars(), "s");
    CHECK(c.a.coefficient(-1).is_zero());
    CHECK(c.a.coefficient(0).is_zero());
    CHECK(c.b.coefficient(0) == -s);
    CHECK(c.c.coefficient(0) == -s);
    CHECK(c.d.coefficient(0).is_zero());
    // s = 0: the closed form collapses to diag(1, 0) and the residual vanishes
    auto at0 = res.map([](const PolySeries& e) {
        return e.map(MultiPoly(s_vars()), [](const MultiPoly& p) { return p.substitute(0, Rational(0)); });
    });
    CHECK(mat_zero_through(at0, 11));
}

TEST_CASE("route cross-check") {
    auto r8 = cross_check_routes(8);
    CHECK(r8.pass);
    CHECK(r8.coefficients_compared == 24);
    CHECK(cross_check_routes(1).pass);
    auto bad = cross_check_routes(recursion_resolvent(4, Rational(2)), closed_form_M(4), 4);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.first_mismatch.has_value());
    CHECK(bad.first_mismatch->index == 1);
}

TEST_CASE("formal large-q solution") {
    const auto& v = le_vars();
    CHECK(formal_w2_coeff(0) == MultiPoly::constant(v, Rational(1, 2)));
    MultiPoly l = MultiPoly::var(v, "lambda");
    CHECK(formal_w1_coeff(0) == l.scaled(Rational(1, 4)));
    for (int D : {0, 3, 8}) {
        auto w = formal_W(D);
        PolySeries tr = w.W.trace();
        CHECK(tr.coefficient(0) == MultiPoly::constant(v, 1));
        for (int k = 1; k <= D; ++k) CHECK(tr.coefficient(k).is_zero());
        CHECK(w.W.det().is_zero_through({D}));
        CHECK(mat_zero_through(formal_W_residual(w, -1), D));
    }
    auto w = formal_W(6);
    CHECK_FALSE(mat_zero_through(formal_W_residual(w, +1), 6));
}
