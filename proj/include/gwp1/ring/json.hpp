#pragma once

#include "gwp1/ring/factored.hpp"
#include "gwp1/ring/multipoly.hpp"
#include "gwp1/ring/rational.hpp"
#include "gwp1/ring/series.hpp"

#include <json.hpp>

namespace gwp1 {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }
Rational rational_from_json(const Json& j);

// List of {"exponents": [...], "coeff": "p/q"} in a fixed term order.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j, VarSetPtr vars);

Json to_json(const FactoredRatFun& f);

inline Json vars_json(const Rational&) { return Json::array(); }
inline Json vars_json(const MultiPoly& p) { return p.vars()->names(); }
inline Json vars_json(const FactoredRatFun& f) { return f.vars()->names(); }

inline Json order_json(int v) {
    if (v >= kOrderInf) return "inf";
    if (v <= kFloorNegInf) return "-inf";
    return v;
}

template <class C>
Json to_json(const MultiSeries<C>& s) {
    Json j;
    j["vars"] = s.vars();
    Json orders = Json::array(), floors = Json::array();
    for (size_t i = 0; i < s.nvars(); ++i) {
        orders.push_back(order_json(s.orders()[i]));
        floors.push_back(order_json(s.floors()[i]));
    }
    j["orders"] = orders;
    j["floors"] = floors;
    j["coeff_vars"] = vars_json(s.zero());
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json idx = Json::array();
        for (size_t i = 0; i < s.nvars(); ++i) idx.push_back(e[i]);
        terms.push_back({{"index", idx}, {"coeff", to_json(c)}});
    }
    j["terms"] = terms;
    return j;
}

}  // namespace gwp1
