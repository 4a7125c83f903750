#include "gwp1/asymptotics/expr.hpp"

#include <algorithm>
#include <set>

namespace gwp1::asym {

namespace {

const std::set<std::string> kOps = {"add", "sub", "mul", "div", "neg", "pow", "log"};

size_t arity(const std::string& op) {
    if (op == "neg" || op == "log") return 1;
    if (op == "add" || op == "mul") return 0;  // two or more
    return 2;
}

void collect(const Expr& e, std::set<std::string>& out) {
    if (e.kind == Expr::Kind::sym) out.insert(e.name);
    for (const auto& a : e.args) collect(a, out);
}

}  // namespace

Expr Expr::number(const Rational& r) {
    Expr e;
    e.kind = Kind::num;
    e.value = r;
    return e;
}

Expr Expr::symbol(std::string s) {
    Expr e;
    e.kind = Kind::sym;
    e.name = std::move(s);
    return e;
}

Expr Expr::apply(std::string op, std::vector<Expr> args) {
    if (!kOps.count(op)) throw ValidationError("unknown expression operator '" + op + "'");
    size_t n = arity(op);
    if ((n == 0 && args.size() < 2) || (n != 0 && args.size() != n))
        throw ValidationError("wrong number of arguments for '" + op + "'");
    Expr e;
    e.kind = Kind::op;
    e.name = std::move(op);
    e.args = std::move(args);
    return e;
}

std::vector<std::string> Expr::symbols() const {
    std::set<std::string> s;
    collect(*this, s);
    return {s.begin(), s.end()};
}

std::string Expr::to_string() const {
    switch (kind) {
        case Kind::num:
            return value.sign() < 0 || !value.is_integer() ? "(" + value.str() + ")" : value.str();
        case Kind::sym:
            return name;
        case Kind::op:
            break;
    }
    if (name == "neg") return "-(" + args[0].to_string() + ")";
    if (name == "log") return "log(" + args[0].to_string() + ")";
    if (name == "pow") return "(" + args[0].to_string() + ")^" + args[1].value.str();
    std::string sep = name == "add" ? " + " : name == "sub" ? " - " : name == "mul" ? "*" : "/";
    std::string out = "(";
    for (size_t i = 0; i < args.size(); ++i) out += (i ? sep : "") + args[i].to_string();
    return out + ")";
}

Expr expr_from_json(const Json& j) {
    if (j.is_string()) return Expr::number(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Expr::number(Rational(j.get<long>()));
    if (!j.is_object()) throw ValidationError("expression node must be a string, integer or object");
    if (j.contains("sym")) {
        if (!j["sym"].is_string()) throw ValidationError("symbol name must be a string");
        return Expr::symbol(j["sym"].get<std::string>());
    }
    if (!j.contains("op") || !j.contains("args") || !j["args"].is_array())
        throw ValidationError("expression object needs 'sym' or 'op' + 'args'");
    std::vector<Expr> args;
    for (const auto& a : j["args"]) args.push_back(expr_from_json(a));
    return Expr::apply(j["op"].get<std::string>(), std::move(args));
}

Json to_json(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::num:
            return e.value.str();
        case Expr::Kind::sym:
            return Json{{"sym", e.name}};
        case Expr::Kind::op:
            break;
    }
    Json args = Json::array();
    for (const auto& a : e.args) args.push_back(to_json(a));
    return Json{{"op", e.name}, {"args", args}};
}

}  // namespace gwp1::asym
