#pragma once

#include "gwp1/resolvent/resolvent.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gwp1 {

// Coefficient matrices M_j of M((lambda - x)/eps; 1/eps) = sum_j M_j lambda^-j,
// entries polynomial in x (truncated at x^x_order) and Laurent in eps.
class SpectralCoefficients {
public:
    // Needs closed-form data through z^-N with N >= max_index.
    SpectralCoefficients(const ResolventSeries& closed, int max_index, int x_order);
    int max_index() const { return max_index_; }
    int x_order() const { return x_order_; }
    const Mat2<MultiPoly>& at(int j) const;

private:
    int max_index_, x_order_;
    std::vector<Mat2<MultiPoly>> m_;
};

struct FkOptions {
    // Largest |lambda| first; empty means the canonical order 0, 1, ..., k-1.
    std::vector<size_t> region;
    // Keep powers of x up to this degree (0 evaluates at x = 0).
    int x_order = 0;
    // Also compute targets with some exponent below 2 (these must vanish).
    bool include_low = false;
    Exec exec = Exec::parallel;
    // Closed-form resolvent order; 0 selects T + 2k with T the largest total target degree.
    int resolvent_order = 0;
};

// F_k(lambda_1..lambda_k; x; eps, 1) as a series in 1/lambda_l.
struct FkSeries {
    int k = 0;
    std::vector<size_t> region;
    int x_order = 0;
    PolySeries series;  // variables lambda1^-1..lambdak^-1, coefficients over {x, eps}
};

// Coefficients of prod lambda_l^(-e_l) for the requested exponent vectors:
//   F_k = -sum_{sigma in S_k/C_k} tr(M(lambda_s1)...M(lambda_sk)) / prod (lambda_si - lambda_s(i+1))
//         - [k = 2] / (lambda_1 - lambda_2)^2,
// each 1/(lambda_a - lambda_b) expanded in the declared region.
std::vector<MultiPoly> f_k_coefficients(int k, const std::vector<std::vector<int>>& targets, const FkOptions& opt = {});

// All targets with 2 <= e_l <= orders[l] (0 <= e_l with include_low).
FkSeries f_k_series(int k, const std::vector<int>& orders, const FkOptions& opt = {});

// F_1 through lambda^-N from the Bernoulli-polynomial formula
//   F_1 = sum_{j>=2} eps^j/(j lambda^j) sum_{i<=j/2} eps^(-1-2i)/i!^2 sum_l (-1)^l C(2i,l) B_j(x/eps + i - l + 1/2).
PolySeries one_point_series(int N, int x_order = -1);

// Independent route for F_1: the q-expansion of H_1 (finite products of
// ((lambda - x)^2 - (2j-1)^2 eps^2/4)^-1, degrees d <= D), the Bernoulli-number
// asymptotic series of the digamma term, and log(lambda/(lambda - x)) - x/lambda.
PolySeries one_point_qseries_oracle(int D, int N, int x_order = -1);

struct CorrelatorKey {
    std::vector<int> insertions;  // i_1..i_k
    int g = 0;
    int m = 0;                    // number of tau_0(1) insertions
    std::optional<int> d;         // optional; checked against degree-dimension
};

struct InvariantValue {
    Rational value;
    int g = 0;
    int d = 0;
    bool structural_zero = false;  // selection rule forbids a nonzero value
    std::string reason;
};

// Degree from sum i = 2g - 2 + 2d + m; nullopt when no non-negative integer d exists.
std::optional<int> degree_from_dimension(const std::vector<int>& insertions, int g, int m);

// Reads the invariant off a computed series (k = insertions.size() >= 2).
InvariantValue extract_invariant(const CorrelatorKey& key, const FkSeries& f);
// k = 1 from a one-point series.
InvariantValue extract_invariant_one_point(const CorrelatorKey& key, const PolySeries& f1);
// Computes exactly the coefficient needed and extracts.
InvariantValue compute_invariant(const CorrelatorKey& key, Exec exec = Exec::parallel);

}  // namespace gwp1
