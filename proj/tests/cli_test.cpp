#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "schema_validator.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& log_env = "") {
    std::string cmd = "COPPERSCOPE_LOG=" + (log_env.empty() ? std::string("quiet") : log_env) +
                      " " + std::string(COPPERSCOPE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

json schema() {
    std::ifstream in(std::string(COPPERSCOPE_SOURCE_DIR) + "/schemas/result.v1.json");
    REQUIRE(in.good());
    return json::parse(in);
}

json parse_and_validate(const std::string& output) {
    json doc = json::parse(output);
    std::vector<std::string> errors;
    bool ok = copperscope_tests::validate_schema(schema(), doc, errors);
    for (const auto& e : errors) MESSAGE(e);
    CHECK(ok);
    return doc;
}

}  // namespace

TEST_CASE("solve: trivial instance and exit codes") {
    RunResult r = run_cli("solve --poly 0,1 --modulus 4 --radius 1 --json");
    CHECK(r.exit_code == 0);
    json doc = parse_and_validate(r.output);
    CHECK(doc["command"] == "solve");
    CHECK(doc["outputs"]["roots"] == json::array({"0"}));
    CHECK(doc["outputs"]["certified"] == true);
}

TEST_CASE("solve: non-monic input exits 1") {
    RunResult r = run_cli("solve --poly 0,2 --modulus 4 --radius 1");
    CHECK(r.exit_code == 1);
    RunResult garbage = run_cli("solve --poly 0,,1 --modulus 4 --radius 1");
    CHECK(garbage.exit_code == 1);
}

TEST_CASE("solve: uncertified radius exits 2 and reports the fallback") {
    // x^2 = 0 mod 10007^2 at the radius N^{1/2} cannot be certified
    RunResult r = run_cli("solve --poly 0,0,1 --modulus 100140049 --radius 10007 --m 1 --json");
    CHECK(r.exit_code == 2);
    json doc = parse_and_validate(r.output);
    CHECK(doc["outputs"]["certified"] == false);
    CHECK(doc["outputs"]["roots"] == json::array());
    CHECK(doc["warnings"].size() > 0);
}

TEST_CASE("solve: recovers a planted root from an instance file") {
    // (prefix + x)^3 - c mod N with c = (prefix + 42)^3, N = 1009 * 1013:
    // coefficients reduced modulo N, constant term first.
    // prefix = 500000 -> f = x^3 + 3*500000 x^2 + 3*500000^2 x + (500000^3 - c)
    // computed exactly below and written to the instance file.
    const long long n = 1009LL * 1013LL;  // 1022117
    const long long prefix = 500000 % n, planted = 42;
    auto mod = [&](long long v) { return ((v % n) + n) % n; };
    long long c = 1;
    for (int i = 0; i < 3; ++i) c = mod(c * mod(prefix + planted));
    long long f0 = mod(mod(mod(prefix * prefix) * prefix) - c);
    long long f1 = mod(3 * mod(prefix * prefix));
    long long f2 = mod(3 * prefix);
    std::string path = "/tmp/copperscope_cli_poly.txt";
    std::ofstream(path) << f0 << ", " << f1 << ", " << f2 << ", 1\n";

    RunResult r = run_cli("solve --poly @" + path + " --modulus " + std::to_string(n) +
                          " --radius 50 --json");
    CHECK(r.exit_code == 0);
    json doc = parse_and_validate(r.output);
    bool found = false;
    for (const auto& root : doc["outputs"]["roots"])
        if (root == "42") found = true;
    CHECK(found);
}

TEST_CASE("capacity: boundary and threshold verdicts") {
    RunResult boundary = run_cli(
        "capacity --modulus 994009 --degree 3 --radius-exp 1/3 --arch disk --json");
    CHECK(boundary.exit_code == 0);
    json doc = parse_and_validate(boundary.output);
    CHECK(doc["outputs"]["verdict"] == "Boundary");

    RunResult denied = run_cli(
        "capacity --modulus 994009 --degree 3 --radius-exp 103/300 --arch disk --json");
    CHECK(parse_and_validate(denied.output)["outputs"]["verdict"] == "NotExists");

    // interval at the same exponent: verdict from the exact comparison of
    // N^{3/100} against 2^3; here N^{1/100} < 2 so a polynomial still exists
    RunResult ival = run_cli(
        "capacity --modulus 994009 --degree 3 --radius-exp 103/300 --arch interval --json");
    CHECK(parse_and_validate(ival.output)["outputs"]["verdict"] == "Exists");

    RunResult bad = run_cli("capacity --modulus 994009 --degree 3 --radius-exp x");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("binomial subcommands") {
    RunResult q0 = run_cli("binomial q0 --json");
    json q0doc = parse_and_validate(q0.output);
    CHECK(q0doc["outputs"]["q0"].get<double>() == doctest::Approx(3.80572).epsilon(1e-5));

    RunResult con = run_cli("binomial construct --t 1 --radius 0.5 --json");
    json condoc = parse_and_validate(con.output);
    CHECK(condoc["outputs"]["supnorm"] == "5/48");
    CHECK(condoc["outputs"]["bounded"] == true);
    CHECK(condoc["outputs"]["integral_coefficients"] == true);

    RunResult sup = run_cli("binomial supnorm --t 1 --radius 10 --json");
    CHECK(parse_and_validate(sup.output)["outputs"]["bounded"] == false);

    RunResult mink = run_cli("binomial minkowski --r 100 --c 5 --json");
    json minkdoc = parse_and_validate(mink.output);
    CHECK(minkdoc["outputs"]["m"].get<int>() > 100);
    CHECK(minkdoc["outputs"]["budget_met"] == true);

    RunResult cut = run_cli("binomial cutoff --delta-logn 1.0 --json");
    CHECK(parse_and_validate(cut.output)["outputs"]["cutoff"] == "3");
}

TEST_CASE("negative subcommand") {
    RunResult even = run_cli(
        "negative --modulus 2305843009213693962 --degree 3 --epsilon 1/10 --M 319 --json");
    json doc = parse_and_validate(even.output);
    CHECK(doc["outputs"]["verdict"] == "SmallFactorFound");
    CHECK(doc["outputs"]["small_factor"] == "2");

    // 1099511627791 * 1099511627803, two 41-bit primes: no factor below 319
    RunResult forces = run_cli(
        "negative --modulus 1208925819660808663073173 --degree 3 --epsilon 1/10 --M 319 "
        "--json");
    json fdoc = parse_and_validate(forces.output);
    CHECK(fdoc["outputs"]["verdict"] == "ForcesSmallFactor");
    CHECK(fdoc["outputs"]["capacity_log"].get<double>() > 0);

    RunResult tiny = run_cli(
        "negative --modulus 1208925819614629174706189 --degree 3 --epsilon 1/1000000 --M 10 "
        "--json");
    CHECK(parse_and_validate(tiny.output)["outputs"]["verdict"] == "Inconclusive");

    RunResult bad = run_cli("negative --modulus 10 --degree 3 --epsilon 0 --M 319");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("COPPERSCOPE_LOG adds diagnostics on stderr") {
    RunResult r = run_cli("solve --poly 0,1 --modulus 4 --radius 1");  // env unset: quiet
    CHECK(r.output.find("[copperscope]") == std::string::npos);
    RunResult verbose = run_cli("solve --poly 0,1 --modulus 4 --radius 1", "debug");
    CHECK(verbose.exit_code == 0);
    CHECK(verbose.output.find("[copperscope]") != std::string::npos);
}

TEST_CASE("demo runs deterministically for a fixed seed") {
    RunResult a = run_cli("demo --bits 24 --seed 5 --json");
    CHECK(a.exit_code == 0);
    json da = parse_and_validate(a.output);
    CHECK(da["outputs"]["recovered"] == true);

    RunResult b = run_cli("demo --bits 24 --seed 5 --json");
    json db = parse_and_validate(b.output);
    da.erase("timings_ms");
    db.erase("timings_ms");
    CHECK(da == db);
}

TEST_CASE("json output is deterministic apart from timings") {
    RunResult a = run_cli("solve --poly 0,1 --modulus 4 --radius 1 --json");
    RunResult b = run_cli("solve --poly 0,1 --modulus 4 --radius 1 --json");
    json da = json::parse(a.output), db = json::parse(b.output);
    da.erase("timings_ms");
    db.erase("timings_ms");
    CHECK(da == db);
    CHECK(da.dump() == db.dump());  // sorted keys make the text form canonical
}
