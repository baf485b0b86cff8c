#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* path = std::getenv("BCDIM_CLI_PATH");
    if (!path) throw std::runtime_error("BCDIM_CLI_PATH is not set");
    const std::string cmd = std::string(path) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CliResult r;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse(const CliResult& r) { return json::parse(r.out); }

} // namespace

TEST_CASE("conductor: single supercuspidal at a ramified prime") {
    const CliResult r = run_cli(
        "conductor --p 7 --splitting ramified --ext ram-epspi --rep sc "
        "--sc-ext ram-epspi --cond 1");
    REQUIRE(r.exit_code == 0);
    const json rec = parse(r);
    CHECK(rec["p"] == 7);
    CHECK(rec["splitting"] == "ramified");
    CHECK(rec["base_exponent"] == 2);
    CHECK(rec["exponent"] == 2);
}

TEST_CASE("conductor: inert primes preserve the exponent") {
    const CliResult r = run_cli("conductor --p 3 --splitting inert --rep special --cond 0");
    REQUIRE(r.exit_code == 0);
    const json rec = parse(r);
    CHECK(rec["base_exponent"] == 1);
    CHECK(rec["exponent"] == 1);
}

TEST_CASE("conductor: ramified twist dies over the ramified completion") {
    const CliResult r = run_cli(
        "conductor --p 5 --splitting ramified --ext ram-pi --rep special --cond 1o2");
    REQUIRE(r.exit_code == 0);
    const json rec = parse(r);
    CHECK(rec["base_exponent"] == 2);
    CHECK(rec["exponent"] == 1);
}

TEST_CASE("conductor: p = 2 cannot ramify") {
    const CliResult r = run_cli(
        "conductor --p 2 --splitting ramified --ext ram-pi --rep special --cond 0");
    CHECK(r.exit_code == 2);
    const json rec = parse(r);
    CHECK(rec["error"].get<std::string>().find("wild") != std::string::npos);
}

TEST_CASE("conductor: level mode assembles all ramified data") {
    const CliResult r = run_cli(
        "conductor --disc -7 --local 11:special:0 --local 7:sc:ram-epspi:1");
    REQUIRE(r.exit_code == 0);
    const json rec = parse(r);
    CHECK(rec["disc"] == -7);
    REQUIRE(rec["entries"].size() == 2);
    CHECK(rec["entries"][0]["p"] == 7);
    CHECK(rec["entries"][0]["splitting"] == "ramified");
    CHECK(rec["entries"][0]["exponents"] == json::array({2}));
    CHECK(rec["entries"][1]["p"] == 11);
    CHECK(rec["entries"][1]["splitting"] == "split");
    CHECK(rec["entries"][1]["exponents"] == json::array({1, 1}));
}

TEST_CASE("dims: single points") {
    json rec = parse(run_cli("dims --space new --level 11 --weight 2"));
    REQUIRE(rec.is_array());
    REQUIRE(rec.size() == 1);
    CHECK(rec[0]["value"] == 1);
    CHECK(rec[0]["disc"].is_null());
    CHECK(rec[0]["formula_path"] == "engine");

    rec = parse(run_cli("dims --space omega --ell 23 --level 1 --weight 3"));
    REQUIRE(rec.size() == 1);
    CHECK(rec[0]["value"] == 3);
    CHECK(rec[0]["disc"] == -23);

    rec = parse(run_cli("dims --space corr --ell 7 --level 1 --weight 2"));
    REQUIRE(rec.size() == 1);
    CHECK(rec[0]["value"] == 1);
}

TEST_CASE("dims: csv format") {
    const CliResult r = run_cli("dims --space new --level 11 --weight 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "disc,N,k,space,value,integral,formula_path\n,11,2,new,1,true,engine\n");
}

TEST_CASE("dims: ranges skip out-of-domain points") {
    const CliResult r = run_cli("dims --space new --level 10..14 --weight 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "disc,N,k,space,value,integral,formula_path\n"
          ",10,2,new,0,true,engine\n"
          ",11,2,new,1,true,engine\n"
          ",13,2,new,0,true,engine\n"
          ",14,2,new,1,true,engine\n");
}

TEST_CASE("dims: output is independent of the thread count") {
    const std::string base = "dims --space corr --ell 7 --level 1..20 --weight 2..8";
    const CliResult one = run_cli(base + " --jobs 1");
    const CliResult four = run_cli(base + " --jobs 4");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("dims: explicitly-named invalid points are rejected") {
    CHECK(run_cli("dims --space new --level 12 --weight 2").exit_code == 2);
    CHECK(run_cli("dims --space new --level 11 --weight 3").exit_code == 2);
    CHECK(run_cli("dims --space omega --ell 5 --level 1 --weight 3").exit_code == 2);
    CHECK(run_cli("dims --space omega --ell 23 --level 1 --weight 4").exit_code == 2);
    CHECK(run_cli("dims --space new --ell 7 --level 11 --weight 2").exit_code == 2);
}

TEST_CASE("dims: --output writes the same bytes to a file") {
    const std::string file = "/tmp/bcdim_cli_test_output.json";
    std::remove(file.c_str());
    const CliResult direct = run_cli("dims --space new --level 11 --weight 2..12");
    const CliResult redirected =
        run_cli("dims --space new --level 11 --weight 2..12 --output " + file);
    REQUIRE(redirected.exit_code == 0);
    CHECK(redirected.out.empty());
    std::ifstream in(file);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(file.c_str());
}

TEST_CASE("bianchi: integral and half-integral values") {
    json rec = parse(run_cli("bianchi --disc -7 --level 5 --weight 2"));
    REQUIRE(rec.size() == 1);
    CHECK(rec[0]["value"] == "1");
    CHECK(rec[0]["integral"] == true);
    CHECK(rec[0]["cm_contamination"] == false);
    CHECK(rec[0]["new_part"] == 0);
    CHECK(rec[0]["corr_part"] == 2);
    CHECK(rec[0]["parity"] == "even");

    rec = parse(run_cli("bianchi --disc -7 --level 1 --weight 2"));
    CHECK(rec[0]["value"] == "1/2");
    CHECK(rec[0]["integral"] == false);
    CHECK(rec[0]["cm_contamination"] == true);

    rec = parse(run_cli("bianchi --disc -23 --level 1 --weight 3"));
    CHECK(rec[0]["value"] == "3/2");
    CHECK(rec[0]["omega_part"] == 3);
    CHECK(rec[0]["parity"] == "odd");
}

TEST_CASE("bianchi: weight conventions agree") {
    const json elliptic = parse(run_cli("bianchi --disc -7 --level 5 --weight 2"));
    const json bianchi = parse(run_cli("bianchi --disc -7 --level 5 --bianchi-weight 0"));
    CHECK(bianchi[0]["k"] == 2);
    CHECK(bianchi[0]["value"] == elliptic[0]["value"]);
    CHECK(bianchi[0]["weight_convention"] == "bianchi");
    CHECK(elliptic[0]["weight_convention"] == "elliptic");
}

TEST_CASE("bianchi: rejects composite discriminants and missing weights") {
    CHECK(run_cli("bianchi --disc -15 --level 1 --weight 2").exit_code == 2);
    CHECK(run_cli("bianchi --disc 7 --level 1 --weight 2").exit_code == 2);
    CHECK(run_cli("bianchi --disc -7 --level 1").exit_code == 2);
    CHECK(run_cli("bianchi --disc -7 --level 1 --weight 2 --bianchi-weight 0").exit_code == 2);
    CHECK(run_cli("bianchi --disc -7 --level 7 --weight 2").exit_code == 2);
}

TEST_CASE("errors are machine-readable json") {
    const CliResult r = run_cli("dims --space nope --level 1 --weight 2");
    CHECK(r.exit_code == 2);
    const json rec = parse(r);
    CHECK(rec.contains("error"));
}

TEST_CASE("validate: character-table suite") {
    const CliResult r = run_cli("validate --suite chartable");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const json rec = json::parse(line);
        CHECK(rec["pass"] == true);
        CHECK(rec["cases"].get<long long>() > 0);
        ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("dims --help").exit_code == 0);
}
