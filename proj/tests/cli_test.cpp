#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_tool(const std::string& args) {
    const std::string cmd =
        std::string(HAPDC_TOOL_PATH) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) {
        r.exit_code = WEXITSTATUS(status);
    }
    r.out = slurp("cli_stdout.txt");
    r.err = slurp("cli_stderr.txt");
    return r;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) {
        if (c == '\n') ++n;
    }
    return n;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

const std::string kReference = std::string(HAPDC_CONFIG_DIR) + "/reference.json";
const std::string kFlying40 = std::string(HAPDC_CONFIG_DIR) + "/flying_40.json";
const std::string kDelay = std::string(HAPDC_CONFIG_DIR) + "/delay.json";

}  // namespace

TEST_CASE("flying-condition emits one row per day") {
    const auto r = run_tool("--config " + kFlying40 + " flying-condition");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "day,lat,n_servers,feasible,max_utilization,max_arrival_rate");
    CHECK(count_lines(r.out) == 366);  // header + 365 days
    CHECK(r.err.empty());
}

TEST_CASE("cost-sweep covers the standard scenario variants") {
    const auto r = run_tool("--config " + kReference + " cost-sweep");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "day,scenario,cost,savings_pct");
    // terrestrial, 1-hap and 4-hap variants, 365 days each
    CHECK(count_lines(r.out) == 1 + 3 * 365);
    CHECK(r.out.find("terrestrial") != std::string::npos);
    CHECK(r.out.find("1-hap") != std::string::npos);
    CHECK(r.out.find("4-hap") != std::string::npos);
}

TEST_CASE("cost-sweep output is byte-identical across runs and job counts") {
    const auto a = run_tool("--config " + kReference + " --jobs 2 cost-sweep");
    const auto b = run_tool("--config " + kReference + " --jobs 2 cost-sweep");
    const auto c = run_tool("--config " + kReference + " --jobs 1 cost-sweep");
    const auto d = run_tool("--config " + kReference + " --jobs 4 cost-sweep");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out == d.out);
}

TEST_CASE("delay-compare walks both task classes") {
    const auto r = run_tool("--config " + kDelay + " delay-compare");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "arrival_rate,task_class,queuing_s,rtt_s,relay_s");
    CHECK(count_lines(r.out) == 1 + 38);  // 19 grid points per class
    CHECK(r.out.find("short") != std::string::npos);
    CHECK(r.out.find("long") != std::string::npos);
}

TEST_CASE("scenario prints the comparison table") {
    const auto r = run_tool("--config " + kReference + " scenario");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) ==
          "scenario,offered_rate,cost_per_day,savings_pct,terrestrial_kwh,cooling_kwh,"
          "transmission_kwh,queuing_s,rtt_s,relay_s,outage,feasible");
    CHECK(count_lines(r.out) == 4);  // header + terrestrial + 1-hap + 4-hap
}

TEST_CASE("--out redirects the csv to a file") {
    std::remove("cli_out.csv");
    const auto r =
        run_tool("--config " + kFlying40 + " flying-condition --out cli_out.csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const std::string written = slurp("cli_out.csv");
    CHECK(first_line(written) == "day,lat,n_servers,feasible,max_utilization,max_arrival_rate");
    CHECK(count_lines(written) == 366);
}

TEST_CASE("--set overrides reach the engine") {
    const auto base = run_tool("--config " + kFlying40 + " flying-condition");
    const auto derated = run_tool("--config " + kFlying40 +
                                  " --set hap.harvest_derating=0.004 flying-condition");
    REQUIRE(base.exit_code == 0);
    REQUIRE(derated.exit_code == 0);
    CHECK(base.out != derated.out);
}

TEST_CASE("config problems exit with code 1") {
    const auto missing = run_tool("--config /no/such/config.json scenario");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("error") != std::string::npos);

    const auto bad_key = run_tool("--set bogus.key=1 scenario");
    CHECK(bad_key.exit_code == 1);
    CHECK(bad_key.err.find("unknown key") != std::string::npos);

    const auto bad_flag = run_tool("--no-such-flag scenario");
    CHECK(bad_flag.exit_code == 1);
}

TEST_CASE("infeasible runs exit with code 2") {
    const auto r = run_tool("--config " + kReference +
                            " --set scenario.offered_policy=fixed"
                            " --set workload.arrival_rate=2000000 scenario");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("--dump-config round-trips through the tool") {
    std::remove("cli_dump.json");
    const auto first = run_tool("--config " + kReference + " --dump-config scenario");
    REQUIRE(first.exit_code == 0);
    std::ofstream("cli_dump.json", std::ios::binary) << first.out;
    const auto second = run_tool("--config cli_dump.json --dump-config scenario");
    REQUIRE(second.exit_code == 0);
    CHECK(first.out == second.out);
}
