#include "gwp1/analytic/analytic.hpp"
#include "gwp1/asymptotics/asymptotics.hpp"
#include "gwp1/cli/cli.hpp"
#include "gwp1/correlators/correlators.hpp"
#include "jobs_internal.hpp"

#include <cmath>
#include <set>

namespace gwp1::cli {

using analytic::Complex;

namespace {

const std::set<std::string> kCommands = {"resolvent", "correlator", "invariant", "one-point",
                                         "eval",      "regime",     "selftest"};

// Allowed parameter names per command.
const std::map<std::string, std::set<std::string>> kParams = {
    {"resolvent", {"route", "order"}},
    {"correlator", {"k", "orders", "x_order", "region"}},
    {"invariant", {"k", "i", "g", "d", "m"}},
    {"one-point", {"order", "route", "degree"}},
    {"eval", {"function", "z", "s", "route", "check"}},
    {"regime", {"name", "k", "gmax", "dmax", "points", "lambda", "q", "eps", "zeta"}},
    {"selftest", {"level"}},
};

[[noreturn]] void bad(const std::string& m) { throw ValidationError(m); }

int get_int(const Json& p, const char* name) {
    if (!p.contains(name)) bad(std::string("missing --") + name);
    const Json& v = p[name];
    if (!v.is_number_integer()) bad(std::string("--") + name + " must be an integer");
    return v.get<int>();
}

std::vector<int> get_ints(const Json& p, const char* name) {
    std::vector<int> out;
    if (!p.contains(name)) return out;
    const Json& v = p[name];
    if (v.is_number_integer()) return {v.get<int>()};
    if (!v.is_array()) bad(std::string("--") + name + " must be a list of integers");
    for (const auto& x : v) {
        if (!x.is_number_integer()) bad(std::string("--") + name + " must be a list of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<double> get_doubles(const Json& p, const char* name) {
    std::vector<double> out;
    const Json& v = p[name];
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) bad(std::string("--") + name + " must be a list of numbers");
    for (const auto& x : v) {
        if (!x.is_number()) bad(std::string("--") + name + " must be a list of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::string get_str(const Json& p, const char* name) {
    if (!p.contains(name) || !p[name].is_string()) bad(std::string("missing --") + name);
    return p[name].get<std::string>();
}

void need_one_of(const std::string& v, std::initializer_list<const char*> opts, const char* name) {
    for (const char* o : opts)
        if (v == o) return;
    std::string list;
    for (const char* o : opts) list += (list.empty() ? "" : "|") + std::string(o);
    bad(std::string("--") + name + " must be one of " + list + ", got '" + v + "'");
}

void at_least(int v, int lo, const char* name) {
    if (v < lo) bad(std::string("--") + name + " must be >= " + std::to_string(lo));
}

std::vector<double> prefix(std::vector<double> v, int k) {
    v.resize(static_cast<size_t>(k));
    return v;
}

Json lambda_default(const std::string& name, int k) {
    if (name == "eps0") return prefix({5, 7, 9, 11}, k);
    return prefix({1.3, 2.1, 2.9, 3.7}, k);
}

// "re" or "re,im"
Complex parse_point(const std::string& text, const analytic::EvalOptions& opt) {
    auto comma = text.find(',');
    std::string re = text.substr(0, comma), im = comma == std::string::npos ? "0" : text.substr(comma + 1);
    try {
        return analytic::make_complex(re, im, opt);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        bad("cannot parse complex point '" + text + "' (expected re or re,im)");
    }
}

Json complex_json(const Complex& c, long bits) {
    int digits = static_cast<int>(std::floor(static_cast<double>(bits) * 0.30103));
    return Json{{"re", c.re().str(digits)}, {"im", c.im().str(digits)}};
}

Json table_row(const std::string& entry, const std::vector<int>& index, const std::string& value) {
    return Json{{"entry", entry}, {"index", index}, {"value", value}};
}

template <class Series>
void series_rows(Json& rows, const std::string& name, const Series& s) {
    for (const auto& [e, c] : s.terms()) {
        std::vector<int> idx;
        for (size_t i = 0; i < s.nvars(); ++i) idx.push_back(e[i]);
        rows.push_back(table_row(name, idx, c.to_string()));
    }
}

long precision_of(const JobSpec& job) { return job.precision_bits; }

}  // namespace

Json normalized_params(const JobSpec& job) {
    Json p = job.params.is_null() ? Json::object() : job.params;
    if (!p.is_object()) bad("parameters must be an object");
    const std::string& c = job.command;
    auto def = [&](const char* k, Json v) {
        if (!p.contains(k) || p[k].is_null()) p[k] = std::move(v);
    };
    if (c == "resolvent") def("route", "both");
    if (c == "correlator") {
        def("x_order", 0);
        def("region", Json::array());
    }
    if (c == "invariant") def("m", 0);
    if (c == "one-point") {
        def("route", "bernoulli");
        if (p.contains("order") && p["order"].is_number_integer()) def("degree", (p["order"].get<int>() + 1) / 2);
    }
    if (c == "eval") {
        def("s", "1");
        def("route", "trace");
        def("check", false);
        if (p.contains("z") && p["z"].is_string()) p["z"] = Json::array({p["z"]});
    }
    if (c == "regime" && p.contains("name") && p["name"].is_string()) {
        std::string n = p["name"].get<std::string>();
        if (n == "eps0" || n == "qInf") {
            int k = p.contains("k") && p["k"].is_number_integer() ? p["k"].get<int>() : 1;
            if (k >= 1 && k <= 4) def("lambda", lambda_default(n, k));
        }
        if (n == "eps0") {
            def("q", 1.0);
            def("points", Json::array({0.125, 0.0625, 0.03125}));
        }
        if (n == "qInf") {
            def("eps", 200.0 / (64 * M_PI));
            def("points", Json::array({1e4, 4e4}));
        }
        if (n == "debye") {
            def("zeta", 0.6);
            def("points", Json::array({40, 80}));
        }
    }
    if (c == "selftest") def("level", "quick");
    return p;
}

void validate(const JobSpec& job) {
    if (!kCommands.count(job.command)) bad("unknown command '" + job.command + "'");
    if (job.format != "json" && job.format != "csv") bad("--format must be json or csv");
    if (job.precision_bits < 53) bad("--precision must be >= 53 bits");
    Json p = normalized_params(job);
    const auto& allowed = kParams.at(job.command);
    for (const auto& [k, v] : p.items())
        if (!allowed.count(k)) bad("unknown parameter --" + k + " for " + job.command);
    const std::string& c = job.command;
    if (c == "resolvent") {
        need_one_of(get_str(p, "route"), {"recursion", "closed-form", "both"}, "route");
        at_least(get_int(p, "order"), 1, "order");
    } else if (c == "correlator") {
        int k = get_int(p, "k");
        at_least(k, 2, "k");
        auto orders = get_ints(p, "orders");
        if (orders.empty()) bad("missing --orders");
        if (orders.size() != 1 && orders.size() != static_cast<size_t>(k)) bad("--orders needs 1 or k values");
        for (int o : orders) at_least(o, 1, "orders");
        at_least(get_int(p, "x_order"), 0, "x-order");
        auto region = get_ints(p, "region");
        if (!region.empty()) {
            std::set<int> seen(region.begin(), region.end());
            if (region.size() != static_cast<size_t>(k) || seen.size() != region.size() || *seen.begin() != 0 ||
                *seen.rbegin() != k - 1)
                bad("--region must be a permutation of 0..k-1");
        }
    } else if (c == "invariant") {
        int k = get_int(p, "k");
        at_least(k, 1, "k");
        auto i = get_ints(p, "i");
        if (i.size() != static_cast<size_t>(k)) bad("--i needs exactly k insertions");
        for (int x : i) at_least(x, 0, "i");
        at_least(get_int(p, "g"), 0, "g");
        at_least(get_int(p, "m"), 0, "m");
        if (p.contains("d")) at_least(get_int(p, "d"), 0, "d");
    } else if (c == "one-point") {
        at_least(get_int(p, "order"), 1, "order");
        need_one_of(get_str(p, "route"), {"bernoulli", "oracle", "both"}, "route");
        at_least(get_int(p, "degree"), 0, "degree");
    } else if (c == "eval") {
        need_one_of(get_str(p, "function"), {"G", "Gt", "B", "D", "Dstar", "H1", "H1star", "Hk", "J", "j"},
                    "function");
        if (!p.contains("z") || !p["z"].is_array() || p["z"].empty()) bad("missing --z");
        for (const auto& z : p["z"])
            if (!z.is_string()) bad("--z values must be strings re or re,im");
        if (!p["s"].is_string()) bad("--s must be a string re or re,im");
        analytic::parse_route(get_str(p, "route"));
        if (!p["check"].is_boolean()) bad("--check must be a flag");
        std::string f = p["function"].get<std::string>();
        size_t nz = p["z"].size();
        if ((f == "D" || f == "Dstar") && nz != 2) bad(f + " takes two points --z a --z b");
        if (f != "Hk" && f != "D" && f != "Dstar" && nz != 1) bad(f + " takes one point --z");
    } else if (c == "regime") {
        std::string n = get_str(p, "name");
        need_one_of(n, {"eps0", "epsInf", "q0", "qInf", "debye"}, "name");
        if (n != "debye") {
            int k = get_int(p, "k");
            at_least(k, 1, "k");
            if (k > 4) bad("--k must be <= 4 for regime jobs");
        }
        if (n == "eps0" || n == "epsInf") at_least(get_int(p, "gmax"), 0, "gmax");
        if (n == "q0" || n == "qInf") at_least(get_int(p, "dmax"), n == "q0" ? 1 : 0, "dmax");
        if (n == "eps0" || n == "qInf" || n == "debye") {
            if (get_doubles(p, "points").size() < 2) bad("--points needs at least two values");
        }
        if (n == "eps0" || n == "qInf") {
            if (get_doubles(p, "lambda").size() != static_cast<size_t>(get_int(p, "k")))
                bad("--lambda needs exactly k values");
        }
    } else if (c == "selftest") {
        need_one_of(get_str(p, "level"), {"quick", "full"}, "level");
    }
}

namespace {

Json run_resolvent(const Json& p) {
    std::string route = p["route"];
    int N = p["order"];
    Json out{{"command", "resolvent"}, {"route", route}, {"order", N}};
    if (route == "both") {
        auto rep = cross_check_routes(N);
        out["coefficients_compared"] = rep.coefficients_compared;
        out["pass"] = rep.pass;
        if (rep.first_mismatch)
            out["first_mismatch"] = {{"entry", rep.first_mismatch->entry},
                                     {"index", rep.first_mismatch->index},
                                     {"recursion", rep.first_mismatch->recursion_value},
                                     {"closed_form", rep.first_mismatch->closed_form_value}};
        return out;
    }
    Json rows = Json::array();
    if (route == "recursion") {
        auto r = recursion_resolvent(N);
        out["variables"] = ne_vars()->names();
        // index j holds the coefficient of lambda^(-j-1)
        for (size_t j = 0; j < r.a.size(); ++j) rows.push_back(table_row("alpha", {static_cast<int>(j) + 1}, r.a[j].to_string()));
        for (size_t j = 0; j < r.c.size(); ++j) rows.push_back(table_row("gamma", {static_cast<int>(j) + 1}, r.c[j].to_string()));
    } else {
        auto M = closed_form_M(N);
        out["variables"] = s_vars()->names();
        series_rows(rows, "alpha", M.alpha);
        series_rows(rows, "P", M.P);
        series_rows(rows, "Q", M.Q);
    }
    out["table"] = rows;
    return out;
}

Json run_correlator(const Json& p) {
    int k = p["k"];
    auto orders = get_ints(p, "orders");
    if (orders.size() == 1) orders.assign(static_cast<size_t>(k), orders[0]);
    FkOptions opt;
    opt.x_order = p["x_order"];
    for (int r : get_ints(p, "region")) opt.region.push_back(static_cast<size_t>(r));
    auto f = f_k_series(k, orders, opt);
    Json rows = Json::array();
    series_rows(rows, "F" + std::to_string(k), f.series);
    Json region = Json::array();
    for (size_t r : f.region) region.push_back(r);
    return Json{{"command", "correlator"}, {"k", k}, {"orders", orders}, {"x_order", f.x_order},
                {"region", region}, {"coefficient_variables", xe_vars()->names()}, {"table", rows}};
}

Json run_invariant(const Json& p) {
    CorrelatorKey key;
    key.insertions = get_ints(p, "i");
    key.g = p["g"];
    key.m = p["m"];
    if (p.contains("d")) key.d = p["d"].get<int>();
    auto v = compute_invariant(key);
    Json out{{"command", "invariant"}, {"insertions", key.insertions}, {"g", v.g}, {"d", v.d}, {"m", key.m},
             {"value", v.value.str()}, {"structural_zero", v.structural_zero}};
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

Json run_one_point(const Json& p) {
    int N = p["order"], D = p["degree"];
    std::string route = p["route"];
    Json out{{"command", "one-point"}, {"order", N}, {"route", route}, {"coefficient_variables", xe_vars()->names()}};
    if (route == "both") {
        bool eq = one_point_series(N).equal_through(one_point_qseries_oracle(D, N), {N});
        out["degree"] = D;
        out["pass"] = eq;
        return out;
    }
    auto s = route == "bernoulli" ? one_point_series(N) : one_point_qseries_oracle(D, N);
    if (route == "oracle") out["degree"] = D;
    Json rows = Json::array();
    series_rows(rows, "F1", s);
    out["table"] = rows;
    return out;
}

Json run_eval(const Json& p, long bits) {
    analytic::EvalOptions opt;
    opt.precision_bits = bits;
    std::string f = p["function"];
    std::vector<Complex> z;
    for (const auto& t : p["z"]) z.push_back(parse_point(t.get<std::string>(), opt));
    Complex s = parse_point(p["s"].get<std::string>(), opt);
    bool check = p["check"];
    // routes must agree to about 60% of the working bits
    double tol = std::ldexp(1.0, -static_cast<int>(0.6 * static_cast<double>(bits)));
    Json out{{"command", "eval"}, {"function", f}, {"precision_bits", bits}};
    Json routes = Json::object();
    double worst = 0;
    auto compare = [&](const char* name, const Complex& a, const Complex& b) {
        double r = mp::rel_diff(a, b).to_double();
        routes[name] = r;
        worst = std::max(worst, r);
    };
    auto series = [&](const analytic::SeriesValue& v) {
        out["value"] = complex_json(v.value, bits);
        out["error_bound"] = v.err_bound.to_double();
        out["terms"] = v.terms;
    };
    if (f == "G") series(analytic::hyper_G(z[0], s, opt));
    else if (f == "Gt") series(analytic::hyper_Gt(z[0], s, opt));
    else if (f == "j") series(analytic::bessel_j_mod(z[0], s, opt));
    else if (f == "H1") series(analytic::h_1(z[0], s, opt));
    else if (f == "H1star") out["value"] = complex_json(analytic::h_1_star(z[0], s, opt), bits);
    else if (f == "J") {
        Complex v = analytic::bessel_J(z[0], s, opt);
        out["value"] = complex_json(v, bits);
        if (check) compare("direct", v, analytic::bessel_J_direct(z[0], s, opt));
    } else if (f == "B") {
        auto B = analytic::matrix_B(z[0], s, opt);
        out["value"] = Json::array({Json::array({complex_json(B.a, bits), complex_json(B.b, bits)}),
                                    Json::array({complex_json(B.c, bits), complex_json(B.d, bits)})});
        if (check) {
            auto u = analytic::matrix_B_from_u(z[0], s, opt), V = analytic::matrix_B_from_V(z[0], s, opt);
            for (auto [name, m] : {std::pair{"from_u", &u}, {"from_V", &V}}) {
                double r = 0;
                for (auto [x, y] : {std::pair{&m->a, &B.a}, {&m->b, &B.b}, {&m->c, &B.c}, {&m->d, &B.d}})
                    r = std::max(r, mp::abs(*x - *y).to_double());
                routes[name] = r;
                worst = std::max(worst, r);
            }
        }
    } else if (f == "D") {
        Complex v = analytic::kernel_D(z[0], z[1], s, opt);
        out["value"] = complex_json(v, bits);
        if (check) {
            compare("series", v, analytic::kernel_D_series(z[0], z[1], s, opt).value);
            compare("products", v, analytic::kernel_D_products(z[0], z[1], s, opt));
        }
    } else if (f == "Dstar") {
        Complex v = analytic::kernel_Dstar(z[0], z[1], s, opt);
        out["value"] = complex_json(v, bits);
        if (check) compare("rescaled", v, analytic::kernel_Dstar_rescaled(z[0], z[1], s, opt));
    } else {  // Hk
        auto route = analytic::parse_route(p["route"].get<std::string>());
        Complex v = analytic::h_k(z, s, route, opt);
        out["route"] = analytic::route_name(route);
        out["value"] = complex_json(v, bits);
        if (check)
            for (auto r : {analytic::HRoute::trace, analytic::HRoute::factorized, analytic::HRoute::factorized_star,
                           analytic::HRoute::commutator})
                if (r != route) compare(analytic::route_name(r), v, analytic::h_k(z, s, r, opt));
    }
    if (check) {
        out["route_differences"] = routes;
        out["tolerance"] = tol;
        out["pass"] = worst <= tol;
    }
    return out;
}

std::string payload_string(const asym::Payload& pl) {
    if (auto* m = std::get_if<MultiPoly>(&pl)) return m->to_string();
    if (auto* f = std::get_if<FactoredRatFun>(&pl)) return f->to_string();
    return asym::to_json(std::get<asym::Expr>(pl)).dump();
}

Json run_regime(const Json& p, long bits) {
    std::string n = p["name"];
    Json out{{"command", "regime"}, {"name", n}};
    if (n == "epsInf" || n == "q0") {
        int k = p["k"];
        bool inf = n == "epsInf";
        int top = inf ? p["gmax"].get<int>() : p["dmax"].get<int>();
        auto e = inf ? asym::expand_eps_inf(k, top) : asym::expand_q0(k, top);
        auto tab = asym::load_table(inf ? "eps_inf" : "q0");
        auto vars = inf ? asym::lambda_q_vars(k) : asym::lambda_eps_vars(k);
        const char* idx = inf ? "g" : "d";
        Json rows = Json::array(), cmp = Json::array();
        bool pass = asym::check_grading(e);
        for (const auto& c : e.coefficients) {
            rows.push_back(table_row(inf ? "H_k,[g]" : "H_k,d", c.index, payload_string(c.payload)));
            const asym::TableEntry* t = tab.find({{"k", k}, {idx, c.index[0]}});
            if (!t) continue;
            asym::RatFun mine = inf ? asym::RatFun(std::get<MultiPoly>(c.payload))
                                    : asym::to_ratfun(std::get<FactoredRatFun>(c.payload), vars);
            bool eq = mine == asym::to_ratfun(t->expr, vars);
            cmp.push_back({{idx, c.index[0]}, {"equal", eq}});
            pass = pass && eq;
        }
        out["k"] = k;
        out["variables"] = vars->names();
        out["table"] = rows;
        out["table_comparison"] = cmp;
        out["pass"] = pass;
        return out;
    }
    asym::Report rep;
    auto pts = get_doubles(p, "points");
    if (n == "eps0")
        rep = asym::verify_eps0(p["k"], p["gmax"], get_doubles(p, "lambda"), p["q"].get<double>(), pts,
                                asym::load_table("eps0"), std::max(bits, 192L));
    else if (n == "qInf")
        rep = asym::verify_q_inf(p["k"], p["dmax"], get_doubles(p, "lambda"), p["eps"].get<double>(), pts,
                                 asym::load_table("q_inf"), bits);
    else
        rep = asym::debye_check(pts, p["zeta"].get<double>(), asym::load_table("debye"), bits);
    Json r = asym::to_json(rep);
    for (const auto& [key, v] : r.items()) out[key] = v;
    return out;
}

Json run_selftest(const Json& p) {
    std::string level = p["level"];
    std::vector<CheckResult> checks = quick_checks();
    if (level == "full")
        for (auto& c : acceptance_criteria()) checks.push_back(std::move(c));
    Json list = Json::array(), failures = Json::array();
    bool pass = true;
    for (const auto& c : checks) {
        list.push_back(to_json(c));
        if (!c.pass) {
            pass = false;
            failures.push_back(to_json(c));
        }
    }
    return Json{{"command", "selftest"}, {"level", level}, {"pass", pass}, {"checks", list}, {"failures", failures}};
}

}  // namespace

Json execute(const JobSpec& job) {
    validate(job);
    Json p = normalized_params(job);
    const std::string& c = job.command;
    long bits = precision_of(job);
    if (c == "resolvent") return run_resolvent(p);
    if (c == "correlator") return run_correlator(p);
    if (c == "invariant") return run_invariant(p);
    if (c == "one-point") return run_one_point(p);
    if (c == "eval") return run_eval(p, bits);
    if (c == "regime") return run_regime(p, bits);
    return run_selftest(p);
}

}  // namespace gwp1::cli
