#pragma once

#include "gwp1/ring/rational.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gwp1 {

inline constexpr size_t kMaxVars = 8;

struct Exponents {
    std::array<int32_t, kMaxVars> e{};
    int32_t& operator[](size_t i) { return e[i]; }
    int32_t operator[](size_t i) const { return e[i]; }
    friend bool operator==(const Exponents&, const Exponents&) = default;
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
    Exponents operator+(const Exponents& o) const {
        Exponents r;
        for (size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
};

struct ExponentsHash {
    size_t operator()(const Exponents& x) const noexcept {
        uint64_t h = 1469598103934665603ull;
        for (int32_t v : x.e) {
            h ^= static_cast<uint32_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// Ordered list of variable names. Variables flagged Laurent may carry
// negative exponents; all others must stay non-negative.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names,
                                              std::vector<std::string> laurent = {});
    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    bool laurent(size_t i) const { return laurent_[i]; }
    std::optional<size_t> find(const std::string& n) const;
    size_t at(const std::string& n) const;
    const std::vector<std::string>& names() const { return names_; }
    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.names_ == b.names_ && a.laurent_ == b.laurent_;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> laurent_;
};
using VarSetPtr = std::shared_ptr<const VarSet>;

bool same_vars(const VarSetPtr& a, const VarSetPtr& b);

class MultiPoly {
public:
    using TermMap = std::unordered_map<Exponents, Rational, ExponentsHash>;

    explicit MultiPoly(VarSetPtr vars);
    static MultiPoly constant(VarSetPtr vars, const Rational& c);
    static MultiPoly var(VarSetPtr vars, const std::string& name, int32_t power = 1);
    static MultiPoly monomial(VarSetPtr vars, const Exponents& e, const Rational& c);

    const VarSetPtr& vars() const { return vars_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const { return coefficient(Exponents{}); }
    Rational coefficient(const Exponents& e) const;
    const TermMap& terms() const { return terms_; }
    // Terms in descending lexicographic exponent order; stable across runs.
    std::vector<std::pair<Exponents, Rational>> sorted_terms() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& c) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    // adds c * x^e
    void add_term(const Exponents& e, const Rational& c);

    MultiPoly pow(unsigned n) const;
    // Replace variable v by the polynomial `value` (same variable set).
    // Negative powers of v are only allowed when `value` is a single monomial.
    MultiPoly substitute(size_t v, const MultiPoly& value) const;
    MultiPoly substitute(size_t v, const Rational& value) const;
    int32_t degree(size_t v) const;
    int32_t low_degree(size_t v) const;
    // Terms with exponent of v above max_deg dropped (reduction mod v^(max_deg+1)).
    MultiPoly truncate_degree(size_t v, int32_t max_deg) const;
    // Coefficient of v^p, as a polynomial in the remaining variables (same variable set).
    MultiPoly coefficient_of(size_t v, int32_t p) const;
    MultiPoly derivative(size_t v) const;
    MultiPoly antiderivative(size_t v) const;
    // Exact quotient by (v - ell) where ell does not involve v; nullopt if it does not divide.
    std::optional<MultiPoly> divide_linear(size_t v, const MultiPoly& ell) const;
    // Re-express in a different variable set; every variable with a nonzero
    // exponent must exist in `target`.
    MultiPoly remap(VarSetPtr target) const;
    // Multiply by v^p (p may be negative for Laurent variables).
    MultiPoly shifted(size_t v, int32_t p) const;

    std::string to_string() const;

private:
    void check_same(const MultiPoly& o) const;
    void check_exponents(const Exponents& e) const;
    VarSetPtr vars_;
    TermMap terms_;
};

}  // namespace gwp1
