// copperscope command-line front end: small-root solver, capacity analyzer,
// binomial toolkit, and the small-factor forcing analysis.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copperscope/arith.hpp"
#include "copperscope/binomial.hpp"
#include "copperscope/capacity.hpp"
#include "copperscope/coppersmith.hpp"
#include "copperscope/negative.hpp"

using json = nlohmann::json;
using namespace copperscope;

namespace {

bool log_enabled() {
    static const char* env = std::getenv("COPPERSCOPE_LOG");
    return env != nullptr && std::string(env) != "" && std::string(env) != "0" &&
           std::string(env) != "quiet";
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "[copperscope] " << msg << "\n";
}

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw InputError("not a decimal integer: '" + s + "'");
    return v;
}

// Rational literal: "p/q", a decimal like "0.5", or a plain integer.
Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        if (frac == 0) throw InputError("trailing decimal point in '" + s + "'");
        Int num = parse_int(digits);
        Rat r(num, ipow(Int(10), frac));
        r.canonicalize();
        return r;
    }
    return Rat(parse_int(s));
}

// Comma-separated coefficients, constant term first; @path reads the same
// format from a file.
std::vector<Int> parse_poly_coeffs(std::string spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw InputError("cannot read polynomial file '" + spec.substr(1) + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        spec = buf.str();
    }
    std::vector<Int> coeffs;
    std::string token;
    std::stringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        token.erase(0, token.find_first_not_of(" \t\r\n"));
        token.erase(token.find_last_not_of(" \t\r\n") + 1);
        if (token.empty()) throw InputError("empty coefficient in polynomial");
        coeffs.push_back(parse_int(token));
    }
    if (coeffs.empty()) throw InputError("empty polynomial");
    return coeffs;
}

json capacity_json(const LogCapacity& c) {
    json factors = json::array();
    for (const auto& [base, exp] : c.factors())
        factors.push_back({{"base", base.get_str()}, {"exponent", exp.get_str()}});
    return {{"factors", factors}, {"text", c.str()}, {"log_value", c.log_value()}};
}

struct ResultPrinter {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    json timings = json::object();
    std::vector<std::string> warnings;
    bool as_json = false;
    std::vector<std::string> lines;  // human-readable output

    void add_line(const std::string& l) { lines.push_back(l); }

    void emit() const {
        if (as_json) {
            json doc = {{"schema_version", "result.v1"}, {"command", command},
                        {"inputs", inputs},              {"outputs", outputs},
                        {"timings_ms", timings},         {"warnings", warnings}};
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
            for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
        }
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string join_roots(const std::vector<Int>& roots) {
    std::string s = "[";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) s += ", ";
        s += roots[i].get_str();
    }
    return s + "]";
}

int cmd_solve(const std::string& poly_spec, const std::string& modulus_str,
              const std::string& radius_str, int m_opt, int t_opt, bool as_json) {
    ResultPrinter out;
    out.command = "solve";
    out.as_json = as_json;

    std::vector<Int> coeffs = parse_poly_coeffs(poly_spec);
    if (coeffs.back() != 1) throw InputError("polynomial must be monic (leading coefficient 1)");
    IntPoly f{std::vector<Int>(coeffs)};
    Nat N = parse_int(modulus_str);
    Nat X = parse_int(radius_str);
    if (N < 2) throw InputError("modulus must be >= 2");
    if (X < 1) throw InputError("radius must be >= 1");

    Problem prob = make_problem(f, N, X);
    if (m_opt > 0) prob.multiplicity = static_cast<unsigned>(m_opt);
    if (t_opt >= 0) prob.extra_rows = static_cast<unsigned>(t_opt);

    json in;
    in["poly"] = [&] {
        json a = json::array();
        for (const auto& c : coeffs) a.push_back(c.get_str());
        return a;
    }();
    in["modulus"] = N.get_str();
    in["radius"] = X.get_str();
    in["m"] = prob.multiplicity;
    in["t_extra"] = prob.extra_rows;
    out.inputs = in;

    log_line("solve: dimension " + std::to_string(prob.dimension()));
    auto t0 = std::chrono::steady_clock::now();
    SolveReport rep = run(prob);
    out.timings["total"] = ms_since(t0);

    json o;
    o["dimension"] = rep.dimension;
    o["m"] = rep.multiplicity;
    o["t_extra"] = rep.extra_rows;
    o["certified"] = rep.certified;
    o["certified_radius"] = rep.certified_radius.get_str();
    o["swap_count"] = rep.swap_count;
    json roots = json::array();
    for (const auto& r : rep.roots) roots.push_back(r.get_str());
    o["roots"] = roots;
    out.outputs = o;

    out.add_line("roots: " + join_roots(rep.roots));
    out.add_line("dimension: " + std::to_string(rep.dimension) + "  (m = " +
                 std::to_string(rep.multiplicity) + ", t_extra = " +
                 std::to_string(rep.extra_rows) + ")");
    out.add_line(std::string("certified: ") + (rep.certified ? "yes" : "no") +
                 "  certified_radius: " + rep.certified_radius.get_str());
    if (!rep.certified)
        out.warnings.push_back("norm certificate failed at the requested radius; largest "
                               "certified radius is " +
                               rep.certified_radius.get_str());
    out.emit();
    return rep.certified ? 0 : 2;
}

int cmd_capacity(const std::string& modulus_str, unsigned degree,
                 const std::string& exp_str, const std::string& arch, bool as_json) {
    ResultPrinter out;
    out.command = "capacity";
    out.as_json = as_json;

    Nat N = parse_int(modulus_str);
    if (N < 2) throw InputError("modulus must be >= 2");
    if (degree < 1) throw InputError("degree must be >= 1");
    Rat e = parse_rat(exp_str);
    ArchKind kind;
    if (arch == "disk")
        kind = ArchKind::Disk;
    else if (arch == "interval")
        kind = ArchKind::Interval;
    else
        throw InputError("--arch must be 'disk' or 'interval'");

    out.inputs = {{"modulus", N.get_str()},
                  {"degree", degree},
                  {"radius_exp", e.get_str()},
                  {"arch", arch}};

    IntPoly f = IntPoly::monomial(degree);  // only the degree matters
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = coppersmith_feasibility(f, N, LogCapacity::power(N, e), kind);
    out.timings["total"] = ms_since(t0);

    out.outputs = {{"capacity", capacity_json(v.capacity)},
                   {"verdict", to_string(v.status)},
                   {"note", v.note}};
    out.add_line(std::string("verdict: ") + to_string(v.status));
    out.add_line("capacity: " + v.capacity.str());
    out.add_line(v.note);
    out.emit();
    return 0;
}

int cmd_binomial_q0(double tolerance, bool as_json) {
    ResultPrinter out;
    out.command = "binomial.q0";
    out.as_json = as_json;
    out.inputs = {{"tolerance", tolerance}};
    auto t0 = std::chrono::steady_clock::now();
    double q0 = solve_q0(tolerance);
    out.timings["total"] = ms_since(t0);
    out.outputs = {{"q0", q0}, {"residual", q0_equation(q0)}};
    std::ostringstream line;
    line.precision(10);
    line << "q0 = " << q0;
    out.add_line(line.str());
    out.emit();
    return 0;
}

int cmd_binomial_construct(unsigned long t, const std::string& radius_str, bool supnorm_only,
                           bool as_json) {
    ResultPrinter out;
    out.command = supnorm_only ? "binomial.supnorm" : "binomial.construct";
    out.as_json = as_json;
    Rat r = parse_rat(radius_str);
    if (r <= 0) throw InputError("radius must be positive");
    out.inputs = {{"t", t}, {"radius", r.get_str()}};

    auto t0 = std::chrono::steady_clock::now();
    ConstructionParams params = ConstructionParams::make(t, r);
    SupNorm sup = construction_sup_norm(t, r);
    json o = {{"q", params.q.get_str()},
              {"xi", params.xi.get_str()},
              {"supnorm", sup.exact.get_str()},
              {"supnorm_log", sup.log_value},
              {"bounded", sup.exact < 1}};
    if (!supnorm_only) {
        BinomialCombo combo = explicit_construction(t);
        o["degree"] = combo.degree();
        o["integral_coefficients"] = combo.all_integer();
    }
    out.timings["total"] = ms_since(t0);
    out.outputs = o;

    out.add_line("supnorm = " + sup.exact.get_str());
    out.add_line(std::string("bounded: ") + (sup.exact < 1 ? "true" : "false"));
    if (!supnorm_only)
        out.add_line("degree: " + std::to_string(2 * t + 1) + ", integral coefficients: true");
    out.emit();
    return 0;
}

int cmd_binomial_minkowski(const std::string& r_str, const std::string& c_str, bool as_json) {
    ResultPrinter out;
    out.command = "binomial.minkowski";
    out.as_json = as_json;
    Rat r = parse_rat(r_str), c = parse_rat(c_str);
    out.inputs = {{"r", r.get_str()}, {"c", c.get_str()}};
    auto t0 = std::chrono::steady_clock::now();
    std::size_t m = minkowski_degree_bound(r, c);
    out.timings["total"] = ms_since(t0);
    bool budget_met = Rat(static_cast<unsigned long>(m)) <= c * r;
    out.outputs = {{"m", m}, {"budget_met", budget_met}};
    out.add_line("m = " + std::to_string(m));
    out.add_line(std::string("within degree budget c*r: ") + (budget_met ? "true" : "false"));
    if (!budget_met)
        out.warnings.push_back(
            "certified degree exceeds the requested budget; the box-volume bound needs "
            "m/r of about e^(3/2)");
    out.emit();
    return 0;
}

int cmd_binomial_cutoff(double target, bool as_json) {
    ResultPrinter out;
    out.command = "binomial.cutoff";
    out.as_json = as_json;
    out.inputs = {{"delta_logn", target}};
    auto t0 = std::chrono::steady_clock::now();
    Nat y = min_prime_cutoff_for_existence(target);
    out.timings["total"] = ms_since(t0);
    bool exact = target <= 15.5;
    out.outputs = {{"cutoff", y.get_str()}, {"exact", exact}};
    out.add_line("cutoff = " + y.get_str());
    if (!exact)
        out.warnings.push_back("target beyond sieve range; cutoff is an analytic estimate");
    out.emit();
    return 0;
}

int cmd_negative(const std::string& modulus_str, unsigned degree, const std::string& eps_str,
                 unsigned long M, bool as_json) {
    ResultPrinter out;
    out.command = "negative";
    out.as_json = as_json;
    Nat N = parse_int(modulus_str);
    Rat eps = parse_rat(eps_str);
    if (N < 2) throw InputError("modulus must be >= 2");
    if (eps <= 0) throw InputError("epsilon must be positive");
    out.inputs = {{"modulus", N.get_str()},
                  {"degree", degree},
                  {"epsilon", eps.get_str()},
                  {"M", M}};

    auto t0 = std::chrono::steady_clock::now();
    NegativeAnalysis a = analyze(N, degree, eps, M);
    out.timings["total"] = ms_since(t0);

    out.outputs = {{"verdict", to_string(a.verdict)},
                   {"small_factor", a.small_factor ? a.small_factor->get_str() : ""},
                   {"prime_product_log", a.prime_product_log},
                   {"capacity_log", a.capacity_log},
                   {"constant_condition", a.constant_condition},
                   {"exact_condition", a.exact_condition},
                   {"note", a.note}};
    out.add_line(std::string("verdict: ") + to_string(a.verdict));
    if (a.small_factor) out.add_line("small factor: " + a.small_factor->get_str());
    std::ostringstream cl;
    cl << "capacity_log = " << a.capacity_log
       << "  (prime product log = " << a.prime_product_log << ")";
    out.add_line(cl.str());
    out.add_line(a.note);
    out.emit();
    return 0;
}

int cmd_demo(unsigned bits, unsigned long seed, bool as_json) {
    ResultPrinter out;
    out.command = "demo";
    out.as_json = as_json;
    out.inputs = {{"bits", bits}, {"seed", seed}};

    DemoReport rep = demo_stereotyped_rsa(bits, seed);

    out.timings = {{"build", rep.build_ms}, {"reduce", rep.reduce_ms}, {"total", rep.total_ms}};
    json roots = json::array();
    for (const auto& r : rep.roots) roots.push_back(r.get_str());
    out.outputs = {{"modulus", rep.modulus.get_str()},
                   {"known_prefix", rep.known_prefix.get_str()},
                   {"planted", rep.planted.get_str()},
                   {"radius", rep.radius.get_str()},
                   {"roots", roots},
                   {"recovered", rep.recovered},
                   {"m", rep.multiplicity},
                   {"t_extra", rep.extra_rows},
                   {"dimension", rep.dimension},
                   {"certified", rep.certified},
                   {"certified_radius", rep.certified_radius.get_str()}};

    out.add_line("modulus: " + rep.modulus.get_str() + " (" + std::to_string(bits) + " bits)");
    out.add_line("planted: " + rep.planted.get_str() + "  radius: " + rep.radius.get_str());
    out.add_line("recovered: " + std::string(rep.recovered ? "yes" : "no") +
                 "  roots: " + join_roots(rep.roots));
    out.add_line("m: " + std::to_string(rep.multiplicity) + "  t_extra: " +
                 std::to_string(rep.extra_rows) + "  dimension: " +
                 std::to_string(rep.dimension) + "  certified_radius: " +
                 rep.certified_radius.get_str());
    out.emit();
    return rep.recovered ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact small-root solver and auxiliary-polynomial feasibility analyzer"};
    app.require_subcommand(1);

    // solve
    std::string poly_spec, modulus_str, radius_str;
    int m_opt = 0, t_opt = -1;
    bool solve_json = false;
    auto* solve_cmd = app.add_subcommand("solve", "Find all small modular roots of a monic polynomial");
    solve_cmd->add_option("--poly", poly_spec, "coefficients, constant first (or @file)")->required();
    solve_cmd->add_option("--modulus", modulus_str)->required();
    solve_cmd->add_option("--radius", radius_str)->required();
    solve_cmd->add_option("--m", m_opt, "multiplicity override");
    solve_cmd->add_option("--t-extra", t_opt, "extra shift rows override");
    solve_cmd->add_flag("--json", solve_json);

    // capacity
    std::string cap_modulus, cap_exp, cap_arch = "disk";
    unsigned cap_degree = 0;
    bool cap_json = false;
    auto* cap_cmd = app.add_subcommand("capacity", "Auxiliary-polynomial feasibility at radius N^e");
    cap_cmd->add_option("--modulus", cap_modulus)->required();
    cap_cmd->add_option("--degree", cap_degree)->required();
    cap_cmd->add_option("--radius-exp", cap_exp, "exponent e as num/den")->required();
    cap_cmd->add_option("--arch", cap_arch, "disk or interval");
    cap_cmd->add_flag("--json", cap_json);

    // binomial with nested subcommands
    auto* bin_cmd = app.add_subcommand("binomial", "Binomial-basis toolkit");
    bin_cmd->require_subcommand(1);
    double q0_tol = 1e-9;
    bool q0_json = false;
    auto* q0_cmd = bin_cmd->add_subcommand("q0", "Threshold ratio for bounded constructions");
    q0_cmd->add_option("--tolerance", q0_tol);
    q0_cmd->add_flag("--json", q0_json);

    unsigned long con_t = 0;
    std::string con_radius;
    bool con_json = false;
    auto* con_cmd = bin_cmd->add_subcommand("construct", "Explicit bounded construction");
    con_cmd->add_option("--t", con_t)->required();
    con_cmd->add_option("--radius", con_radius)->required();
    con_cmd->add_flag("--json", con_json);

    unsigned long sup_t = 0;
    std::string sup_radius;
    bool sup_json = false;
    auto* sup_cmd = bin_cmd->add_subcommand("supnorm", "Exact disk sup-norm of the construction");
    sup_cmd->add_option("--t", sup_t)->required();
    sup_cmd->add_option("--radius", sup_radius)->required();
    sup_cmd->add_flag("--json", sup_json);

    std::string mink_r, mink_c;
    bool mink_json = false;
    auto* mink_cmd = bin_cmd->add_subcommand("minkowski", "Degree bound from the box-volume argument");
    mink_cmd->add_option("--r", mink_r)->required();
    mink_cmd->add_option("--c", mink_c)->required();
    mink_cmd->add_flag("--json", mink_json);

    double cutoff_target = 0;
    bool cutoff_json = false;
    auto* cutoff_cmd = bin_cmd->add_subcommand("cutoff", "Prime cutoff for capacity below one");
    cutoff_cmd->add_option("--delta-logn", cutoff_target)->required();
    cutoff_cmd->add_flag("--json", cutoff_json);

    // negative
    std::string neg_modulus, neg_eps;
    unsigned neg_degree = 0;
    unsigned long neg_M = 0;
    bool neg_json = false;
    auto* neg_cmd = app.add_subcommand("negative", "Small-factor forcing analysis");
    neg_cmd->add_option("--modulus", neg_modulus)->required();
    neg_cmd->add_option("--degree", neg_degree)->required();
    neg_cmd->add_option("--epsilon", neg_eps)->required();
    neg_cmd->add_option("--M", neg_M)->required();
    neg_cmd->add_flag("--json", neg_json);

    // demo
    unsigned demo_bits = 60;
    unsigned long demo_seed = 1;
    bool demo_json = false;
    auto* demo_cmd = app.add_subcommand("demo", "Self-checking stereotyped-message recovery");
    demo_cmd->add_option("--bits", demo_bits);
    demo_cmd->add_option("--seed", demo_seed);
    demo_cmd->add_flag("--json", demo_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return cmd_solve(poly_spec, modulus_str, radius_str, m_opt, t_opt, solve_json);
        if (cap_cmd->parsed())
            return cmd_capacity(cap_modulus, cap_degree, cap_exp, cap_arch, cap_json);
        if (q0_cmd->parsed()) return cmd_binomial_q0(q0_tol, q0_json);
        if (con_cmd->parsed()) return cmd_binomial_construct(con_t, con_radius, false, con_json);
        if (sup_cmd->parsed()) return cmd_binomial_construct(sup_t, sup_radius, true, sup_json);
        if (mink_cmd->parsed()) return cmd_binomial_minkowski(mink_r, mink_c, mink_json);
        if (cutoff_cmd->parsed()) return cmd_binomial_cutoff(cutoff_target, cutoff_json);
        if (neg_cmd->parsed())
            return cmd_negative(neg_modulus, neg_degree, neg_eps, neg_M, neg_json);
        if (demo_cmd->parsed()) return cmd_demo(demo_bits, demo_seed, demo_json);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BoundNotCertified& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
