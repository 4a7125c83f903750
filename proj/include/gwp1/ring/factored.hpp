#pragma once

#include "gwp1/ring/multipoly.hpp"

#include <map>
#include <string>
#include <utility>

namespace gwp1 {

// Rational function N / prod (lambda_v + c*eps)^m with monic linear factors,
// c in (1/2)Z. Kept reduced: no factor divides the numerator.
class FactoredRatFun {
public:
    using Factor = std::pair<size_t, Rational>;  // (variable index, c)

    // The variable set must contain a variable named "eps".
    explicit FactoredRatFun(MultiPoly num);
    FactoredRatFun(MultiPoly num, std::map<Factor, int> den);
    static FactoredRatFun inverse_linear(VarSetPtr vars, size_t var, const Rational& c, int power = 1);

    const MultiPoly& num() const { return num_; }
    const std::map<Factor, int>& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    MultiPoly den_poly() const;
    static MultiPoly factor_poly(const VarSetPtr& vars, const Factor& f);

    FactoredRatFun operator+(const FactoredRatFun& o) const;
    FactoredRatFun operator-(const FactoredRatFun& o) const { return *this + (-o); }
    FactoredRatFun operator-() const { return FactoredRatFun(-num_, den_, raw_tag{}); }
    FactoredRatFun operator*(const FactoredRatFun& o) const;
    FactoredRatFun scaled(const Rational& c) const { return FactoredRatFun(num_.scaled(c), den_, raw_tag{}); }
    // Divide the numerator exactly by (lambda_v - ell); throws when it does not divide.
    FactoredRatFun divided_by_linear(size_t v, const MultiPoly& ell) const;

    // Structural equality of reduced forms.
    friend bool operator==(const FactoredRatFun& a, const FactoredRatFun& b);
    // a.num * den(b) == b.num * den(a)
    bool cross_equal(const FactoredRatFun& o) const;
    // this == P / Q by cross-multiplication.
    bool equals_ratio(const MultiPoly& P, const MultiPoly& Q) const;

    std::string to_string() const;

private:
    struct raw_tag {};
    FactoredRatFun(MultiPoly num, std::map<Factor, int> den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    MultiPoly num_;
    std::map<Factor, int> den_;
};

inline bool ring_compatible(const FactoredRatFun& a, const FactoredRatFun& b) { return same_vars(a.vars(), b.vars()); }
inline bool coeff_is_zero(const FactoredRatFun& a) { return a.is_zero(); }
inline FactoredRatFun coeff_scale(const FactoredRatFun& a, const Rational& c) { return a.scaled(c); }

}  // namespace gwp1
