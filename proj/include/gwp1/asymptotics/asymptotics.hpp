#pragma once

#include "gwp1/asymptotics/expr.hpp"
#include "gwp1/ring/factored.hpp"
#include "gwp1/ring/json.hpp"
#include "gwp1/ring/multipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gwp1::asym {

// Regimes of H_k(lambda/eps; sqrt(q)/eps).
enum class Regime { eps0, eps_inf, q0, q_inf };
const char* regime_name(Regime r);  // "eps0", "epsInf", "q0", "qInf"
Regime parse_regime(const std::string& name);

using Payload = std::variant<MultiPoly, FactoredRatFun, Expr>;

struct Coefficient {
    std::vector<int> index;  // (g) for eps0/epsInf, (d) for q0, (d, m, sin?) for qInf
    Payload payload;
};

struct RegimeExpansion {
    Regime regime = Regime::eps_inf;
    int k = 1;
    int order = 0;
    std::vector<Coefficient> coefficients;

    const Payload& at(const std::vector<int>& index) const;
};

Json to_json(const RegimeExpansion& e);

// Variable sets {lambda1..lambdak, q} (epsInf payloads) and {lambda1..lambdak, eps} (q0 payloads).
VarSetPtr lambda_q_vars(int k);
VarSetPtr lambda_eps_vars(int k);

// H_{k,[g]}, g = 0..G: coefficients of eps^(-2g) as eps -> infinity, exact polynomials in
// lambda_i and q. Each q-term of G and G~ is expanded in 1/eps and H_k is assembled by the
// trace formula in the ring of truncated 1/eps series (k = 1: H_1 = sum_m t_m / 2m over the
// terms t_m of G). Throws std::logic_error if a structural claim fails (odd powers, a
// non-polynomial quotient).
RegimeExpansion expand_eps_inf(int k, int G);

// H_{k,d}, d = 0..D: coefficients of q^d as q -> 0, exact rational functions of lambda_i and
// eps with linear denominators lambda_i + c eps. Same assembly as above in the ring of
// polynomials in q over FactoredRatFun. Throws std::logic_error if a pole lies outside
// |c| < d, c in Z + 1/2.
RegimeExpansion expand_q0(int k, int D);

// Terms of G/2 - 1/2 and G~/(lambda + eps/2) in powers of w = 1/eps, as polynomials in (lambda, q)
// (variable set lambda_q_vars(1)); index n holds the coefficient of w^n.
std::vector<MultiPoly> eps_inf_block_G(int order);
std::vector<MultiPoly> eps_inf_block_Gt(int order);

// Weight of a homogeneous payload under gr = eps d/deps + 2q d/dq + sum lambda_i d/dlambda_i;
// nullopt when it is not homogeneous (zero is homogeneous of every weight, reported as nullopt too).
std::optional<int> grading_weight(const MultiPoly& p);
std::optional<int> grading_weight(const FactoredRatFun& f);
// Checks every coefficient of an exact expansion against its gr-eigenvalue law.
bool check_grading(const RegimeExpansion& e);

// ---- exact rational functions (no gcd; equality by cross-multiplication) ----

class RatFun {
public:
    explicit RatFun(MultiPoly num);
    RatFun(MultiPoly num, MultiPoly den);
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const { return RatFun(-num_, den_); }
    friend bool operator==(const RatFun& a, const RatFun& b);
    std::string to_string() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

// Evaluates a tree whose symbols are variables of `vars` ("lambda" aliases "lambda1").
RatFun to_ratfun(const Expr& e, const VarSetPtr& vars);
RatFun to_ratfun(const FactoredRatFun& f, const VarSetPtr& vars);
// Polynomial value of a tree; throws if it divides by a non-constant.
MultiPoly to_poly(const Expr& e, const VarSetPtr& vars);

// q-expansion through q^D of a closed form over {lambda_i, q, R_i = (lambda_i^2 - 4q)^(1/2)},
// coefficients in Q(lambda_1..lambda_k). log is allowed on arguments equal to 1 at q = 0.
std::vector<RatFun> q_expand(const Expr& e, int k, int D);

// Small-eps expansion of a q0 coefficient: index j holds the coefficient of eps^j
// (j = 0..order) in Q(lambda_1..lambda_k).
std::vector<RatFun> small_eps_expand(const FactoredRatFun& f, int k, int order);
// Large-eps expansion: index n holds the coefficient of eps^(-n), n = 0..order, as a
// polynomial over lambda_q_vars(k) (no q dependence).
std::vector<MultiPoly> large_eps_expand(const FactoredRatFun& f, int k, int order);

// ---- regime tables (data files) ----

struct TableEntry {
    Json meta;  // every field of the entry except the tree
    Expr expr;
    std::string id() const;  // compact description of the entry's index fields
    int field(const std::string& name, int fallback = -1) const;
};

struct Table {
    std::string regime;
    std::string path;
    std::vector<TableEntry> entries;
    std::vector<TableEntry> blocks;
    // Entry whose listed fields equal the given values; nullptr if absent.
    const TableEntry* find(const std::map<std::string, int>& fields, bool blocks = false) const;
};

// Directory holding eps0.json, eps_inf.json, q0.json, q_inf.json, debye.json:
// $GWP1_TABLE_DIR if set, otherwise the data/tables directory of the source tree.
std::string default_table_dir();
// stem: "eps0", "eps_inf", "q0", "q_inf" or "debye". Malformed entries throw
// ValidationError naming the entry.
Table load_table(const std::string& stem, const std::string& dir = default_table_dir());

// ---- numerical verification ----

struct Report {
    std::string regime;
    int k = 0;
    std::vector<int> orders_checked;
    std::vector<double> points;         // eps, q or nu values
    std::vector<double> residuals;      // |remainder| at each point
    std::vector<double> measured_order; // per consecutive pair of points
    double expected_order = 0;
    double tolerance = 0;               // allowed relative deviation of the residual ratio
    bool pass = false;
    std::string note;
};
Json to_json(const Report& r);

// eps -> 0 at fixed (lambda, q): subtracts sum_{g <= g_max} eps^(2g-2+2k) H_k^[g] (k >= 2) or
// log sqrt(q) - log lambda + sum eps^2g H_1*^[g] (k = 1) and checks that the remainder ratio
// between consecutive eps equals (eps1/eps2)^order within `tolerance`.
// Requires 0 < 2 sqrt(q) < lambda_i and eps > 0.
Report verify_eps0(int k, int g_max, const std::vector<double>& lambda, double q, const std::vector<double>& eps_list,
                   const Table& table, long precision_bits = 192, double tolerance = 0.25);

// q -> infinity at fixed (lambda, eps): evaluates (prod cos(pi lambda_i/eps)) H_k (k >= 2) or
// cos(pi lambda/eps) H_1* (k = 1), subtracts the tabulated terms through q^(-d_max/2) and
// checks the decay q^(-(d_max+1)/2) between consecutive q.
Report verify_q_inf(int k, int d_max, const std::vector<double>& lambda, double eps, const std::vector<double>& q_list,
                    const Table& table, long precision_bits = 128, double tolerance = 0.30);

// J_(nu-1/2)(nu zeta) against (nu-1/2)^(nu-1/2)/Gamma(nu+1/2) exp(nu V0 + V1 + V2/nu + V3/nu^2);
// the log-residual must scale as nu^-3. Requires 0.05 < zeta < 0.95.
Report debye_check(const std::vector<double>& nu_list, double zeta, const Table& table, long precision_bits = 128,
                   double tolerance = 0.30);

// Euler-scaling defect of a tree: |t^-weight f(t x) - f(x)| / |f(x)| with t = 2, under
// (lambda_i, sqrt(q), eps) -> t (lambda_i, sqrt(q), eps), at a fixed generic point
// (absolute |t^-weight f(t x)| when f(x) = 0).
double scaling_defect(const Expr& e, int weight, long precision_bits = 128);

// Degree in w = (1 - zeta^2)^(-1/2) of a Debye coefficient; throws if the tree is not a
// polynomial in w alone.
int debye_w_degree(const Expr& e);

}  // namespace gwp1::asym
