#include "gwp1/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

using gwp1::Json;
using gwp1::cli::JobSpec;

namespace {

// Option values land here; only options given on the command line (or in the config file)
// reach the job parameters, so command defaults stay in one place.
struct Opts {
    std::string route, function, s, name, level;
    int order = 0, k = 0, x_order = 0, g = 0, d = 0, m = 0, degree = 0, gmax = 0, dmax = 0;
    std::vector<int> orders, region, ins;
    std::vector<std::string> z;
    std::vector<double> points, lambda;
    double q = 0, eps = 0, zeta = 0;
    bool check = false;
};

template <class T>
void put(Json& p, CLI::App* sub, const char* flag, const char* key, const T& v) {
    if (auto* opt = sub->get_option_no_throw(flag); opt && opt->count() > 0) p[key] = v;
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out) return 1;
    }
    std::filesystem::rename(tmp, path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical tools for the matrix resolvent, correlators and their asymptotics."};
    app.footer(
        "Exit codes: 0 success, 2 invalid input, 3 route disagreement or failed verification,\n"
        "4 insufficient order. Cache directory: --cache-dir, else $GWP1_CACHE_DIR, else ~/.cache/gwp1.\n"
        "Regime tables are read from $GWP1_TABLE_DIR when set.");
    app.set_config("--config", "", "TOML-style file of option defaults; command-line flags win");
    app.require_subcommand(1);
    app.fallthrough();

    JobSpec job;
    std::string output;
    bool no_cache = false;
    app.add_option("--format", job.format, "json or csv (csv only for coefficient tables)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--precision", job.precision_bits, "working precision in bits (>= 53)");
    app.add_option("-o,--output", output, "output file (default stdout)");
    app.add_option("--cache-dir", job.cache_dir, "result cache directory");
    app.add_flag("--no-cache", no_cache, "neither read nor write the cache");
    app.add_flag("--verify-cache", job.verify_cache, "recompute and compare against the cached result");

    Opts o;
    auto* res = app.add_subcommand("resolvent", "resolvent coefficients by recursion, closed form, or both compared");
    res->add_option("--route", o.route, "recursion | closed-form | both (default both)");
    res->add_option("--order", o.order, "truncation order N (coefficients through lambda^-N)");

    auto* cor = app.add_subcommand("correlator", "k-point correlator series F_k in 1/lambda_l");
    cor->add_option("--k", o.k, "number of points (>= 2)");
    cor->add_option("--orders", o.orders, "maximal exponent per variable (one value or k values)")->delimiter(',');
    cor->add_option("--x-order", o.x_order, "keep powers of x through this degree (default 0)");
    cor->add_option("--region", o.region, "expansion region, largest |lambda| first (permutation of 0..k-1)")
        ->delimiter(',');

    auto* inv = app.add_subcommand("invariant", "a single correlator coefficient <tau_i1 ... tau_ik>_g,d");
    inv->add_option("--k", o.k, "number of insertions");
    inv->add_option("--i", o.ins, "insertion indices i_1..i_k")->delimiter(',');
    inv->add_option("--g", o.g, "genus");
    inv->add_option("--d", o.d, "degree (checked against the dimension rule)");
    inv->add_option("--m", o.m, "number of tau_0(1) insertions (default 0)");

    auto* one = app.add_subcommand("one-point", "one-point series F_1 through lambda^-N");
    one->add_option("--order", o.order, "truncation order N");
    one->add_option("--route", o.route, "bernoulli | oracle | both (default bernoulli)");
    one->add_option("--degree", o.degree, "q-degree used by the oracle route (default ceil(N/2))");

    auto* ev = app.add_subcommand("eval", "evaluate an analytic function at complex points");
    ev->add_option("--function", o.function, "G | Gt | B | D | Dstar | H1 | H1star | Hk | J | j");
    ev->add_option("--z", o.z, "point 're' or 're,im'; repeat for D, Dstar (a, b) and Hk (z_1..z_k)");
    ev->add_option("--s", o.s, "second argument 're' or 're,im' (default 1)");
    ev->add_option("--route", o.route, "Hk route: trace | factorized | factorized_star | commutator");
    ev->add_flag("--check", o.check, "also evaluate the independent routes and compare");

    auto* reg = app.add_subcommand("regime", "asymptotic regimes: exact coefficients or numerical verification");
    reg->add_option("--name", o.name, "eps0 | epsInf | q0 | qInf | debye");
    reg->add_option("--k", o.k, "number of points");
    reg->add_option("--gmax", o.gmax, "highest genus (eps0, epsInf)");
    reg->add_option("--dmax", o.dmax, "highest degree (q0, qInf)");
    reg->add_option("--points", o.points, "eps values (eps0), q values (qInf) or nu values (debye)")->delimiter(',');
    reg->add_option("--lambda", o.lambda, "lambda_1..lambda_k")->delimiter(',');
    reg->add_option("--q", o.q, "q (eps0)");
    reg->add_option("--eps", o.eps, "eps (qInf)");
    reg->add_option("--zeta", o.zeta, "zeta (debye)");

    auto* st = app.add_subcommand("selftest", "run the built-in checks");
    st->add_option("--level", o.level, "quick | full (default quick)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "gwp1: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    job.command = sub->get_name();
    job.use_cache = !no_cache;
    Json& p = job.params;
    put(p, sub, "--route", "route", o.route);
    put(p, sub, "--order", "order", o.order);
    put(p, sub, "--k", "k", o.k);
    put(p, sub, "--orders", "orders", o.orders);
    put(p, sub, "--x-order", "x_order", o.x_order);
    put(p, sub, "--region", "region", o.region);
    put(p, sub, "--i", "i", o.ins);
    put(p, sub, "--g", "g", o.g);
    put(p, sub, "--d", "d", o.d);
    put(p, sub, "--m", "m", o.m);
    put(p, sub, "--degree", "degree", o.degree);
    put(p, sub, "--function", "function", o.function);
    put(p, sub, "--z", "z", o.z);
    put(p, sub, "--s", "s", o.s);
    if (job.command == "eval" && o.check) p["check"] = true;
    put(p, sub, "--name", "name", o.name);
    put(p, sub, "--gmax", "gmax", o.gmax);
    put(p, sub, "--dmax", "dmax", o.dmax);
    put(p, sub, "--points", "points", o.points);
    put(p, sub, "--lambda", "lambda", o.lambda);
    put(p, sub, "--q", "q", o.q);
    put(p, sub, "--eps", "eps", o.eps);
    put(p, sub, "--zeta", "zeta", o.zeta);
    put(p, sub, "--level", "level", o.level);

    auto r = gwp1::cli::run(job);
    if (!r.text.empty() && write_output(output, r.text) != 0) {
        std::cerr << "gwp1: cannot write " << output << "\n";
        return 2;
    }
    if (!r.diagnostic.empty()) std::cerr << "gwp1: " << r.diagnostic << "\n";
    return r.exit_code;
}
