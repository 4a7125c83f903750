#pragma once

#include "gwp1/errors.hpp"
#include "gwp1/ring/json.hpp"
#include "gwp1/ring/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gwp1::asym {

// Expression tree over rational constants and named symbols.
// JSON form: "p/q" | integer | {"sym": name} | {"op": name, "args": [...]}
// with op in add, sub, mul, div, neg, pow (integer exponent), log.
struct Expr {
    enum class Kind { num, sym, op };
    Kind kind = Kind::num;
    Rational value;
    std::string name;  // symbol or operator name
    std::vector<Expr> args;

    static Expr number(const Rational& r);
    static Expr symbol(std::string s);
    static Expr apply(std::string op, std::vector<Expr> args);

    bool is_zero_literal() const { return kind == Kind::num && value.is_zero(); }
    // Every symbol name that occurs, sorted and unique.
    std::vector<std::string> symbols() const;
    std::string to_string() const;
};

Expr expr_from_json(const Json& j);
Json to_json(const Expr& e);

// Evaluates a tree in any ring. The ring supplies
//   value num(const Rational&), value sym(const std::string&),
//   value add(a, b), sub(a, b), mul(a, b), div(a, b), neg(a), log(a).
// Integer powers are done by squaring (negative ones through div).
template <class Ring>
auto evaluate(const Expr& e, const Ring& ring) -> decltype(ring.num(Rational(0))) {
    using V = decltype(ring.num(Rational(0)));
    switch (e.kind) {
        case Expr::Kind::num:
            return ring.num(e.value);
        case Expr::Kind::sym:
            return ring.sym(e.name);
        case Expr::Kind::op:
            break;
    }
    const std::string& op = e.name;
    auto arg = [&](size_t i) { return evaluate(e.args.at(i), ring); };
    if (op == "add" || op == "mul") {
        V acc = arg(0);
        for (size_t i = 1; i < e.args.size(); ++i) acc = op == "add" ? ring.add(acc, arg(i)) : ring.mul(acc, arg(i));
        return acc;
    }
    if (op == "sub") return ring.sub(arg(0), arg(1));
    if (op == "div") return ring.div(arg(0), arg(1));
    if (op == "neg") return ring.neg(arg(0));
    if (op == "log") return ring.log(arg(0));
    if (op == "pow") {
        const Expr& ex = e.args.at(1);
        if (ex.kind != Expr::Kind::num || !ex.value.is_integer())
            throw ValidationError("pow exponent must be an integer constant");
        long n = ex.value.num().get_si();
        V base = arg(0);
        bool invert = n < 0;
        if (invert) n = -n;
        V r = ring.num(Rational(1));
        while (n > 0) {
            if (n & 1) r = ring.mul(r, base);
            n >>= 1;
            if (n > 0) base = ring.mul(base, base);
        }
        return invert ? ring.div(ring.num(Rational(1)), r) : r;
    }
    throw ValidationError("unknown expression operator '" + op + "'");
}

}  // namespace gwp1::asym
