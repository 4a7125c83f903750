#include "gwp1/correlators/correlators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gwp1;

namespace {

MultiPoly xe(int x, int e, const Rational& c) {
    Exponents ex;
    ex[0] = x;
    ex[1] = e;
    return MultiPoly::monomial(xe_vars(), ex, c);
}

Exponents idx(std::initializer_list<int> v) {
    Exponents e;
    size_t i = 0;
    for (int x : v) e[i++] = x;
    return e;
}

}  // namespace

TEST_CASE("degree-dimension rule") {
    CHECK(degree_from_dimension({0}, 0, 0) == 1);
    CHECK(degree_from_dimension({1, 1}, 0, 0) == 2);
    CHECK(degree_from_dimension({0, 0}, 1, 0) == 0);
    CHECK_FALSE(degree_from_dimension({1}, 0, 0).has_value());
    CHECK_FALSE(degree_from_dimension({0}, 2, 0).has_value());
    // one tau_0(1) insertion with <tau_0(omega) tau_0(1)^2>_{0,0} = 1
    CHECK(degree_from_dimension({0}, 0, 2) == 0);
}

TEST_CASE("one-point: Bernoulli formula against the q-expansion oracle") {
    auto a = one_point_series(12);
    auto b = one_point_qseries_oracle(6, 12);
    CHECK(a.equal_through(b, {12}));
    // leading coefficient at x = 0: 1/eps from degree one, -eps/24 from the digamma term
    MultiPoly c2 = a.coefficient(2).truncate_degree(0, 0);
    CHECK(c2 == xe(0, -1, 1) + xe(0, 1, Rational(-1, 24)));
    // the pure x part: (1/eps) sum x^j/(j lambda^j)
    for (int j = 2; j <= 12; ++j) CHECK(a.coefficient(j).coefficient(idx({j, -1})) == Rational(1, j));
    // q = 0 removes all degree terms of the oracle
    auto b0 = one_point_qseries_oracle(0, 6);
    CHECK(b0.coefficient(2).truncate_degree(0, 0) == xe(0, 1, Rational(-1, 24)));
}

TEST_CASE("one-point invariants") {
    auto f1 = one_point_series(10);
    auto v = extract_invariant_one_point({{0}, 0, 0, std::nullopt}, f1);
    CHECK(v.value == Rational(1));
    CHECK(v.d == 1);
    CHECK(compute_invariant({{0}, 0, 0, 1}).value == Rational(1));
    // q-expansion of H_1: the d-th degree term has coefficient (2d-1)!/d!^2 at lambda^-2d, genus 0
    for (int d = 1; d <= 4; ++d) {
        auto w = extract_invariant_one_point({{2 * d - 2}, 0, 0, std::nullopt}, one_point_series(2 * d + 2));
        CHECK(w.d == d);
        CHECK(w.value * factorial(2 * d - 1) == factorial(2 * d - 1) / (factorial(d) * factorial(d)));
    }
    auto z = compute_invariant({{1}, 0, 0, std::nullopt});
    CHECK(z.structural_zero);
    CHECK(z.value.is_zero());
    auto z2 = compute_invariant({{0}, 0, 0, 2});
    CHECK(z2.structural_zero);
    // genus one, degree zero: <tau_0(omega)>_{1,0} = -1/24 from the digamma term
    auto g1 = compute_invariant({{0}, 1, 0, std::nullopt});
    CHECK(g1.d == 0);
    CHECK(g1.value == Rational(-1, 24));
    // tau_0(1)^2 via the x-Taylor coefficient
    CHECK(compute_invariant({{0}, 0, 2, std::nullopt}).value == Rational(1));
}

TEST_CASE("two-point: leading q-coefficient is the product of one-point poles") {
    auto f = f_k_series(2, {6, 6});
    // H_{2,1} = eps^2/((l1^2 - eps^2/4)(l2^2 - eps^2/4)) -> <tau_2a tau_2b>_{a+b,1}
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            auto v = extract_invariant({{2 * a, 2 * b}, a + b, 0, std::nullopt}, f);
            CHECK(v.d == 1);
            CHECK(v.value == Rational(1) / (Rational(4).pow(a + b) * factorial(2 * a + 1) * factorial(2 * b + 1)));
        }
}

TEST_CASE("three-point: leading q-coefficient") {
    auto f = f_k_series(3, {4, 4, 4});
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) {
                auto v = extract_invariant({{2 * a, 2 * b, 2 * c}, a + b + c, 0, std::nullopt}, f);
                CHECK(v.d == 1);
                CHECK(v.value == Rational(1) / (Rational(4).pow(a + b + c) * factorial(2 * a + 1) *
                                                 factorial(2 * b + 1) * factorial(2 * c + 1)));
            }
}

TEST_CASE("parity vanishing and low-order zeros") {
    FkOptions opt;
    opt.include_low = true;
    for (int k = 2; k <= 3; ++k) {
        int N = k == 2 ? 8 : 6;
        auto f = f_k_series(k, std::vector<int>(static_cast<size_t>(k), N), opt);
        for (const auto& [e, c] : f.series.terms()) {
            int sum = 0;
            bool low = false;
            for (int l = 0; l < k; ++l) {
                sum += e[static_cast<size_t>(l)];
                low = low || e[static_cast<size_t>(l)] < 2;
            }
            CHECK(sum % 2 == 0);
            CHECK_FALSE(low);
        }
    }
}

TEST_CASE("region independence") {
    auto base = f_k_series(3, {5, 5, 5});
    std::vector<size_t> r{0, 1, 2};
    while (std::next_permutation(r.begin(), r.end())) {
        FkOptions opt;
        opt.region = r;
        auto other = f_k_series(3, {5, 5, 5}, opt);
        CHECK(other.series.terms() == base.series.terms());
    }
    FkOptions rev;
    rev.region = {1, 0};
    CHECK(f_k_series(2, {7, 7}, rev).series.terms() == f_k_series(2, {7, 7}).series.terms());
}

TEST_CASE("serial and parallel agree; permutation symmetry") {
    FkOptions ser;
    ser.exec = Exec::serial;
    CHECK(f_k_series(3, {5, 5, 5}, ser).series.terms() == f_k_series(3, {5, 5, 5}).series.terms());
    std::mt19937 g(21);
    std::uniform_int_distribution<int> ins(0, 3), kk(2, 4);
    int checked = 0;
    for (int t = 0; t < 20; ++t) {
        int k = kk(g);
        std::vector<int> i(static_cast<size_t>(k));
        for (auto& x : i) x = ins(g);
        int sum = 0;
        for (int x : i) sum += x;
        int genus = (sum % 2 == 0) ? std::min(1, sum / 2) : 0;
        CorrelatorKey key{i, genus, 0, std::nullopt};
        auto v = compute_invariant(key);
        auto perm = i;
        std::shuffle(perm.begin(), perm.end(), g);
        auto w = compute_invariant({perm, genus, 0, std::nullopt});
        CHECK(v.value == w.value);
        CHECK(v.structural_zero == w.structural_zero);
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("genus-zero two-point values against the closed form") {
    MultiPoly h = oracle::genus_zero_two_point(3);
    auto f = f_k_series(2, {6, 6});
    for (int d = 1; d <= 3; ++d)
        for (int i1 = 0; i1 <= 2 * d - 2; ++i1) {
            int i2 = 2 * d - 2 - i1;
            Exponents e;
            e[0] = d;
            e[1] = i1 + 2;
            e[2] = i2 + 2;
            Rational expect = h.coefficient(e) / (factorial(i1 + 1) * factorial(i2 + 1));
            auto v = extract_invariant({{i1, i2}, 0, 0, std::nullopt}, f);
            CHECK(v.d == d);
            CHECK(v.value == expect);
        }
}

TEST_CASE("order bookkeeping errors") {
    FkOptions opt;
    opt.resolvent_order = 2;
    CHECK_THROWS_AS(f_k_coefficients(2, {{4, 4}}, opt), InsufficientOrder);
    CHECK_THROWS_AS(f_k_coefficients(1, {{4}}), ValidationError);
    auto f = f_k_series(2, {4, 4});
    CHECK_THROWS_AS(extract_invariant({{1, 5}, 0, 0, std::nullopt}, f), InsufficientOrder);
}
