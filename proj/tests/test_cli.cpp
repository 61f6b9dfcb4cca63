#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "polylog/hardcore.hpp"
#include "polylog/series.hpp"
#include "testutil.hpp"

using nlohmann::json;

namespace {

struct run_result {
    int exit_code;
    std::string output; // stdout + stderr
};

run_result run_cli(const std::string& args) {
    std::string cmd = std::string(POLYLOG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string fixture(const char* name) { return std::string(POLYLOG_FIXTURE_DIR) + "/" + name; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("logz hardcore on K1 prints log(1+x)") {
    auto r = run_cli("logz hardcore --graph " + fixture("k1.txt") + " --order 3 --json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["model"] == "log Z hardcore");
    CHECK(j["scalar"] == "exact");
    std::vector<std::string> want{"0", "1", "-1/2", "1/3"};
    CHECK(j["coefficients"].get<std::vector<std::string>>() == want);
}

TEST_CASE("json coefficients round-trip to the exact series") {
    auto r = run_cli("logz hardcore --graph " + fixture("k4.txt") + " --order 4 --json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    auto coeffs = j["coefficients"].get<std::vector<std::string>>();
    auto parsed = polylog::series_from_coeff_strings<polylog::rational>(coeffs);
    CHECK(parsed == polylog::log_z_hc<polylog::rational>(testutil::complete_graph(4), 4));
}

TEST_CASE("float backend emits parseable doubles") {
    auto r = run_cli("logz hardcore --graph " + fixture("k4.txt") + " --order 3 --float --json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["scalar"] == "float");
    auto coeffs = j["coefficients"].get<std::vector<std::string>>();
    auto parsed = polylog::series_from_coeff_strings<double>(coeffs);
    CHECK(parsed[1] == doctest::Approx(4.0)); // 4 vertices
}

TEST_CASE("sfo on K4 certifies the count within exp(0.7)") {
    auto r = run_cli("sfo --graph " + fixture("k4.txt") + " --epsilon 0.7 --json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 6);
    CHECK(j["delta"] == 3);
    CHECK(j["bound"].get<double>() <= 0.7);
    double count = std::stod(j["count_decimal"].get<std::string>());
    CHECK(count / 32.0 <= std::exp(0.7));
    CHECK(count / 32.0 >= std::exp(-0.7));
    // exact rational value survives the trip
    auto f = polylog::rational::from_string(j["f_k_half"].get<std::string>());
    CHECK(std::fabs(f.to_double() + std::log(2.0)) < 0.62);
}

TEST_CASE("sfo rejects minimum degree below 3 with exit code 2") {
    auto r = run_cli("sfo --graph " + fixture("c3.txt") + " --epsilon 0.1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("degree") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("sfo --graph x.txt").exit_code == 1);           // missing --epsilon
    CHECK(run_cli("frobnicate").exit_code == 1);                  // unknown subcommand
    CHECK(run_cli("logz hardcore --graph x --order -1").exit_code == 1);
}

TEST_CASE("input validation errors exit with 2") {
    CHECK(run_cli("logz hardcore --graph " + fixture("nonexistent.txt") + " --order 2").exit_code ==
          2);
    auto r = run_cli("logz hardcore --graph " + fixture("bad_dup.txt") + " --order 2");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);
    CHECK(run_cli("sfo --graph " + fixture("k4.txt") + " --epsilon 0.5 --delta-override 7")
              .exit_code == 2);
}

TEST_CASE("logp and logh subcommands") {
    auto rp = run_cli("logp chromatic --graph " + fixture("c3.txt") + " --order 2 --json");
    REQUIRE(rp.exit_code == 0);
    json jp = json::parse(rp.output);
    std::vector<std::string> want{"0", "3", "-5/2"};
    CHECK(jp["coefficients"].get<std::vector<std::string>>() == want);

    auto rh = run_cli("logh hom --graph " + fixture("k2.txt") + " --matrix " + fixture("a2.txt") +
                      " --order 2 --json");
    REQUIRE(rh.exit_code == 0);
    json jh = json::parse(rh.output);
    std::vector<std::string> wanth{"0", "-1/2", "-1/8"};
    CHECK(jh["coefficients"].get<std::vector<std::string>>() == wanth);
}

TEST_CASE("trees count and oracle subcommands") {
    auto rt = run_cli("trees count --graph " + fixture("k33.txt") + " --anchor 0 --max-edges 2 --json");
    REQUIRE(rt.exit_code == 0);
    json jt = json::parse(rt.output);
    CHECK(jt["subtrees"] == 12);

    auto ro = run_cli("oracle sfo-count --graph " + fixture("k33.txt") + " --json");
    REQUIRE(ro.exit_code == 0);
    CHECK(json::parse(ro.output)["count"] == 174);

    auto ri = run_cli("oracle indep --graph " + fixture("c3.txt") + " --json");
    REQUIRE(ri.exit_code == 0);
    std::vector<std::string> wanti{"1", "3"};
    CHECK(json::parse(ri.output)["coefficients"].get<std::vector<std::string>>() == wanti);
}

TEST_CASE("edge-order flag changes nothing in log P") {
    auto r1 = run_cli("logp chromatic --graph " + fixture("k4.txt") + " --order 3 --json");
    auto r2 = run_cli("logp chromatic --graph " + fixture("k4.txt") + " --order 3 --edge-order " +
                      fixture("k4_order.txt") + " --json");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    CHECK(json::parse(r1.output)["coefficients"] == json::parse(r2.output)["coefficients"]);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("sfo --help").exit_code == 0);
}

TEST_CASE("human-readable output") {
    auto r = run_cli("logz hardcore --graph " + fixture("k1.txt") + " --order 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("0 + 1*x + -1/2*x^2 + 1/3*x^3") != std::string::npos);

    auto rs = run_cli("sfo --graph " + fixture("k4.txt") + " --epsilon 0.7 --profile");
    REQUIRE(rs.exit_code == 0);
    CHECK(rs.output.find("count~=") != std::string::npos);
    CHECK(rs.output.find("profile:") != std::string::npos);
}

TEST_CASE("POLYLOG_THREADS is honored without changing results") {
    auto base = run_cli("logz hardcore --graph " + fixture("k4.txt") + " --order 5 --json");
    auto env = run_cli("logz hardcore --graph " + fixture("k4.txt") + " --order 5 --json");
    // re-run under the env var
    std::string cmd = "POLYLOG_THREADS=3 " + std::string(POLYLOG_CLI_PATH) + " logz hardcore --graph " +
                      fixture("k4.txt") + " --order 5 --json 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    pclose(pipe);
    CHECK(base.output == env.output);
    CHECK(base.output == out);
}

TEST_CASE("thread count does not change output") {
    auto r1 = run_cli("--threads 1 sfo --graph " + fixture("petersen.txt") + " --epsilon 2 --json");
    auto r8 = run_cli("--threads 8 sfo --graph " + fixture("petersen.txt") + " --epsilon 2 --json");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r8.exit_code == 0);
    CHECK(r1.output == r8.output);
}

} // TEST_SUITE
