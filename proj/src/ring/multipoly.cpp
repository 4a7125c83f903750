#include "gwp1/ring/multipoly.hpp"

#include "gwp1/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gwp1 {

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names,
                                           std::vector<std::string> laurent) {
    if (names.size() > kMaxVars)
        throw ValidationError("too many polynomial variables (max " + std::to_string(kMaxVars) + ")");
    auto vs = std::make_shared<VarSet>();
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (names[i] == names[j]) throw ValidationError("duplicate variable '" + names[i] + "'");
    vs->laurent_.assign(names.size(), false);
    for (const auto& l : laurent) {
        auto it = std::find(names.begin(), names.end(), l);
        if (it == names.end()) throw ValidationError("Laurent flag for unknown variable '" + l + "'");
        vs->laurent_[static_cast<size_t>(it - names.begin())] = true;
    }
    vs->names_ = std::move(names);
    return vs;
}

std::optional<size_t> VarSet::find(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return i;
    return std::nullopt;
}

size_t VarSet::at(const std::string& n) const {
    auto i = find(n);
    if (!i) throw ValidationError("unknown variable '" + n + "'");
    return *i;
}

bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

MultiPoly::MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw ValidationError("polynomial without a variable set");
}

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::var(VarSetPtr vars, const std::string& name, int32_t power) {
    size_t i = vars->at(name);
    Exponents e;
    e[i] = power;
    return monomial(std::move(vars), e, Rational(1));
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, const Exponents& e, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.check_exponents(e);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

void MultiPoly::check_exponents(const Exponents& e) const {
    for (size_t i = 0; i < kMaxVars; ++i) {
        if (i >= vars_->size()) {
            if (e[i] != 0) throw ValidationError("exponent for a variable outside the set");
        } else if (e[i] < 0 && !vars_->laurent(i)) {
            throw ValidationError("negative power of non-Laurent variable '" + vars_->name(i) + "'");
        }
    }
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (!same_vars(vars_, o.vars_)) throw RingMismatch("polynomials over different variable sets");
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Exponents, Rational>> MultiPoly::sorted_terms() const {
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) {
        try {
            check_exponents(e);
        } catch (...) {
            terms_.erase(it);
            throw;
        }
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e = ea + eb;
            auto [it, inserted] = r.terms_.try_emplace(e, ca);
            if (inserted)
                it->second *= cb;
            else
                it->second += ca * cb;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second.is_zero())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::coefficient_of(size_t v, int32_t p) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (e[v] == p) {
            Exponents f = e;
            f[v] = 0;
            r.terms_.emplace(f, c);
        }
    return r;
}

MultiPoly MultiPoly::substitute(size_t v, const MultiPoly& value) const {
    check_same(value);
    std::map<int32_t, MultiPoly> by_power;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[v] = 0;
        auto it = by_power.try_emplace(e[v], vars_).first;
        it->second.add_term(f, c);
    }
    MultiPoly result(vars_);
    if (by_power.empty()) return result;
    std::optional<MultiPoly> inverse;
    if (by_power.begin()->first < 0) {
        if (value.terms_.size() != 1)
            throw ValidationError("negative power substitution needs a monomial value");
        const auto& [e, c] = *value.terms_.begin();
        Exponents ne;
        for (size_t i = 0; i < kMaxVars; ++i) ne[i] = -e[i];
        inverse = monomial(vars_, ne, Rational(1) / c);
    }
    // Horner over the non-negative part, explicit powers for the negative part.
    MultiPoly acc(vars_);
    int32_t prev = -1;
    for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
        int32_t p = it->first;
        if (p < 0) break;
        if (prev >= 0) acc = acc * value.pow(static_cast<unsigned>(prev - p));
        acc += it->second;
        prev = p;
    }
    if (prev > 0) acc = acc * value.pow(static_cast<unsigned>(prev));
    result += acc;
    for (const auto& [p, coeff] : by_power) {
        if (p >= 0) break;
        result += coeff * inverse->pow(static_cast<unsigned>(-p));
    }
    return result;
}

MultiPoly MultiPoly::substitute(size_t v, const Rational& value) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[v] = 0;
        r.add_term(f, c * value.pow(e[v]));
    }
    return r;
}

int32_t MultiPoly::degree(size_t v) const {
    int32_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[v] > d) d = e[v];
        first = false;
    }
    return d;
}

int32_t MultiPoly::low_degree(size_t v) const {
    int32_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[v] < d) d = e[v];
        first = false;
    }
    return d;
}

MultiPoly MultiPoly::truncate_degree(size_t v, int32_t max_deg) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (e[v] <= max_deg) r.terms_.emplace(e, c);
    return r;
}

MultiPoly MultiPoly::derivative(size_t v) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents f = e;
        f[v] -= 1;
        r.add_term(f, c * Rational(e[v]));
    }
    return r;
}

MultiPoly MultiPoly::antiderivative(size_t v) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == -1) throw ValidationError("antiderivative of a 1/v term");
        Exponents f = e;
        f[v] += 1;
        r.add_term(f, c / Rational(f[v]));
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_linear(size_t v, const MultiPoly& ell) const {
    check_same(ell);
    if (ell.degree(v) != 0 || ell.low_degree(v) != 0)
        throw ValidationError("divide_linear: shift involves the division variable");
    if (terms_.empty()) return MultiPoly(vars_);
    if (low_degree(v) < 0) throw ValidationError("divide_linear: Laurent input in the division variable");
    int32_t hi = degree(v);
    if (hi == 0) return std::nullopt;
    std::vector<MultiPoly> c;
    c.reserve(static_cast<size_t>(hi) + 1);
    for (int32_t p = 0; p <= hi; ++p) c.push_back(coefficient_of(v, p));
    // synthetic division: q_{hi-1} = c_hi, q_{p-1} = c_p + ell*q_p
    std::vector<MultiPoly> q(static_cast<size_t>(hi), MultiPoly(vars_));
    q[static_cast<size_t>(hi - 1)] = c[static_cast<size_t>(hi)];
    for (int32_t p = hi - 1; p >= 1; --p)
        q[static_cast<size_t>(p - 1)] = c[static_cast<size_t>(p)] + ell * q[static_cast<size_t>(p)];
    MultiPoly rem = c[0] + ell * q[0];
    if (!rem.is_zero()) return std::nullopt;
    MultiPoly out(vars_);
    for (int32_t p = 0; p < hi; ++p) out += q[static_cast<size_t>(p)].shifted(v, p);
    return out;
}

MultiPoly MultiPoly::remap(VarSetPtr target) const {
    std::vector<int> map(vars_->size(), -1);
    for (size_t i = 0; i < vars_->size(); ++i) {
        auto j = target->find(vars_->name(i));
        if (j) map[i] = static_cast<int>(*j);
    }
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents f;
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0)
                throw RingMismatch("variable '" + vars_->name(i) + "' missing from target set");
            f[static_cast<size_t>(map[i])] = e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::shifted(size_t v, int32_t p) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[v] += p;
        r.check_exponents(f);
        r.terms_.emplace(f, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
        Rational a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        } else if (a.sign() < 0) {
            os << "-";
            a = a.abs();
        }
        first = false;
        bool mono = false;
        for (size_t i = 0; i < vars_->size(); ++i) mono |= e[i] != 0;
        bool show_coeff = !a.is_one() || !mono;
        if (show_coeff) os << a.str();
        bool need_star = show_coeff;
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_->name(i);
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace gwp1
