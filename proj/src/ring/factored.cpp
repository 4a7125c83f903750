#include "gwp1/ring/factored.hpp"

#include "gwp1/errors.hpp"

#include <sstream>

namespace gwp1 {

namespace {
void check_factor(const VarSetPtr& vars, const FactoredRatFun::Factor& f) {
    if (f.first >= vars->size()) throw ValidationError("denominator factor variable out of range");
    if (vars->name(f.first) == "eps") throw ValidationError("denominator factor must be in a lambda variable");
    if (!(f.second * Rational(2)).is_integer()) throw ValidationError("denominator shift must lie in Z/2");
}
}  // namespace

FactoredRatFun::FactoredRatFun(MultiPoly num) : num_(std::move(num)) { vars()->at("eps"); }

FactoredRatFun::FactoredRatFun(MultiPoly num, std::map<Factor, int> den) : num_(std::move(num)), den_(std::move(den)) {
    vars()->at("eps");
    for (auto it = den_.begin(); it != den_.end();) {
        check_factor(vars(), it->first);
        if (it->second < 0) throw ValidationError("negative factor multiplicity");
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
    normalize();
}

FactoredRatFun FactoredRatFun::inverse_linear(VarSetPtr vars, size_t var, const Rational& c, int power) {
    std::map<Factor, int> den;
    den[{var, c}] = power;
    return FactoredRatFun(MultiPoly::constant(std::move(vars), Rational(1)), std::move(den));
}

MultiPoly FactoredRatFun::factor_poly(const VarSetPtr& vars, const Factor& f) {
    return MultiPoly::var(vars, vars->name(f.first)) + MultiPoly::var(vars, "eps").scaled(f.second);
}

MultiPoly FactoredRatFun::den_poly() const {
    MultiPoly p = MultiPoly::constant(vars(), Rational(1));
    for (const auto& [f, m] : den_) p = p * factor_poly(vars(), f).pow(static_cast<unsigned>(m));
    return p;
}

void FactoredRatFun::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    size_t eps = vars()->at("eps");
    for (auto it = den_.begin(); it != den_.end();) {
        MultiPoly ell = MultiPoly::var(vars(), vars()->name(eps)).scaled(-it->first.second);
        while (it->second > 0) {
            auto q = num_.divide_linear(it->first.first, ell);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
}

FactoredRatFun FactoredRatFun::operator+(const FactoredRatFun& o) const {
    if (!same_vars(vars(), o.vars())) throw RingMismatch("rational functions over different variable sets");
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    std::map<Factor, int> lcm = den_;
    for (const auto& [f, m] : o.den_) {
        auto& slot = lcm[f];
        if (m > slot) slot = m;
    }
    auto cofactor = [&](const std::map<Factor, int>& d) {
        MultiPoly p = MultiPoly::constant(vars(), Rational(1));
        for (const auto& [f, m] : lcm) {
            auto it = d.find(f);
            int have = it == d.end() ? 0 : it->second;
            if (m > have) p = p * factor_poly(vars(), f).pow(static_cast<unsigned>(m - have));
        }
        return p;
    };
    MultiPoly n = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    FactoredRatFun r(std::move(n), std::move(lcm), raw_tag{});
    r.normalize();
    return r;
}

FactoredRatFun FactoredRatFun::operator*(const FactoredRatFun& o) const {
    if (!same_vars(vars(), o.vars())) throw RingMismatch("rational functions over different variable sets");
    std::map<Factor, int> d = den_;
    for (const auto& [f, m] : o.den_) d[f] += m;
    FactoredRatFun r(num_ * o.num_, std::move(d), raw_tag{});
    r.normalize();
    return r;
}

FactoredRatFun FactoredRatFun::divided_by_linear(size_t v, const MultiPoly& ell) const {
    auto q = num_.divide_linear(v, ell);
    if (!q) throw ValidationError("numerator not divisible by the requested linear form");
    return FactoredRatFun(std::move(*q), den_, raw_tag{});
}

bool operator==(const FactoredRatFun& a, const FactoredRatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

bool FactoredRatFun::cross_equal(const FactoredRatFun& o) const {
    if (!same_vars(vars(), o.vars())) throw RingMismatch("rational functions over different variable sets");
    return num_ * o.den_poly() == o.num_ * den_poly();
}

bool FactoredRatFun::equals_ratio(const MultiPoly& P, const MultiPoly& Q) const {
    if (Q.is_zero()) throw ValidationError("ratio with zero denominator");
    return num_.remap(P.vars()) * Q == P * den_poly().remap(P.vars());
}

std::string FactoredRatFun::to_string() const {
    std::ostringstream os;
    os << "(" << num_.to_string() << ")";
    if (den_.empty()) return os.str();
    os << "/(";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << vars()->name(f.first);
        if (f.second.sign() >= 0) os << "+";
        os << f.second.str() << "*eps)";
        if (m != 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

}  // namespace gwp1
