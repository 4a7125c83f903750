#include "gwp1/ring/rational.hpp"

#include "gwp1/errors.hpp"

#include <cctype>

namespace gwp1 {

Rational::Rational(long n, long d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw ValidationError("empty rational literal");
    auto valid_int = [](const std::string& t) {
        size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q) || q[0] == '-' || q[0] == '+')
        throw ValidationError("malformed rational literal '" + s + "'");
    if (p[0] == '+') p = p.substr(1);
    mpz_class n(p, 10), d(q, 10);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) return Rational(1) / pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational factorial(long n) {
    if (n < 0) throw ValidationError("factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational double_factorial_odd(long n) {
    // product of odd numbers 1*3*...*(2n-1)
    Rational r(1);
    for (long j = 1; j <= n; ++j) r *= Rational(2 * j - 1);
    return r;
}

}  // namespace gwp1
