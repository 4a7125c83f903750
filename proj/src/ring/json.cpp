#include "gwp1/ring/json.hpp"

#include "gwp1/errors.hpp"

namespace gwp1 {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ValidationError("rational must be a \"p/q\" string or an integer");
}

Json to_json(const MultiPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.sorted_terms()) {
        Json ex = Json::array();
        for (size_t i = 0; i < p.vars()->size(); ++i) ex.push_back(e[i]);
        out.push_back({{"exponents", ex}, {"coeff", c.str()}});
    }
    return out;
}

MultiPoly multipoly_from_json(const Json& j, VarSetPtr vars) {
    if (!j.is_array()) throw ValidationError("polynomial JSON must be a list of terms");
    MultiPoly p(vars);
    for (const auto& t : j) {
        const auto& ex = t.at("exponents");
        if (!ex.is_array() || ex.size() != vars->size())
            throw ValidationError("exponent vector length does not match variable count");
        Exponents e;
        for (size_t i = 0; i < ex.size(); ++i) e[i] = ex[i].get<int32_t>();
        p += MultiPoly::monomial(vars, e, rational_from_json(t.at("coeff")));
    }
    return p;
}

Json to_json(const FactoredRatFun& f) {
    Json den = Json::array();
    for (const auto& [fac, m] : f.den())
        den.push_back({{"var", f.vars()->name(fac.first)}, {"shift", fac.second.str()}, {"power", m}});
    return {{"num", to_json(f.num())}, {"den", den}};
}

}  // namespace gwp1
