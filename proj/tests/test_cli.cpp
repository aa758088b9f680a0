// End-to-end checks of the installed command-line interface.  Each case
// spawns the real binary (path injected by the build as PROPCOLOR_CLI_PATH)
// and asserts on the exit-code contract: 0 = verified / exists,
// 1 = refuted / witness, 2 = unknown (budget), 3 = usage or parse error.
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string command = std::string(PROPCOLOR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    int raw = pclose(pipe);
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string temp_path(const char* name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("decide reports witnesses and exit codes") {
    RunResult verified = run_cli("decide --family path --n 5 --k 2");
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("\"status\": \"choosable\"") != std::string::npos);

    RunResult refuted = run_cli("decide --family cycle --n 4 --k 2");
    CHECK(refuted.exit_code == 1);
    CHECK(refuted.output.find("\"witness\"") != std::string::npos);

    RunResult budgeted = run_cli("decide --family path --n 5 --k 2 --budget 3");
    CHECK(budgeted.exit_code == 2);
    CHECK(budgeted.output.find("\"status\": \"unknown\"") != std::string::npos);

    RunResult list_mode = run_cli("decide --family path --n 6 --k 2 --mode list");
    CHECK(list_mode.exit_code == 0);
}

TEST_CASE("decide writes certificates that cert-verify accepts") {
    std::string cert = temp_path("propcolor_cli_test_cert.json");
    RunResult refuted =
        run_cli("decide --family cycle --n 4 --k 2 --cert " + cert);
    REQUIRE(refuted.exit_code == 1);

    RunResult accepted = run_cli("cert-verify " + cert);
    CHECK(accepted.exit_code == 0);
    CHECK(accepted.output.find("accepted") != std::string::npos);

    // A tampered file must be rejected with exit code 1.
    std::ifstream in(cert);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("not_prop_choosable");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("not_prop_choosable").size(), "not_choosable");
    std::string forged = temp_path("propcolor_cli_test_forged.json");
    std::ofstream(forged) << text;
    RunResult rejected = run_cli("cert-verify " + forged);
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.output.find("rejected") != std::string::npos);

    std::remove(cert.c_str());
    std::remove(forged.c_str());
}

TEST_CASE("chi-pc honors the exit-code contract") {
    RunResult exact = run_cli("chi-pc --family star --n 3");
    CHECK(exact.exit_code == 0);
    CHECK(exact.output.find("\"exact\": 3") != std::string::npos);

    RunResult bounded = run_cli("chi-pc --family path --n 6 --kmax 2");
    CHECK(bounded.exit_code == 2);
    CHECK(bounded.output.find("\"lower_bound\": 3") != std::string::npos);
}

TEST_CASE("gen emits the text format and accepts files back via --input") {
    RunResult gen = run_cli("gen --family linear-forest --orders 2 3");
    CHECK(gen.exit_code == 0);
    CHECK(gen.output.substr(0, 4) == "5 3\n");

    std::string path = temp_path("propcolor_cli_test_graph.txt");
    std::ofstream(path) << gen.output;
    RunResult decide = run_cli("decide --input " + path + " --k 2");
    CHECK(decide.exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("usage and parse errors exit with code 3") {
    CHECK(run_cli("decide --family path --n 5").exit_code == 3);  // missing --k
    CHECK(run_cli("decide --k 2").exit_code == 3);                // no graph source
    CHECK(run_cli("nonsense-subcommand").exit_code == 3);
    CHECK(run_cli("decide --family cycle --n 2 --k 2").exit_code == 3);
    CHECK(run_cli("cert-verify /nonexistent/cert.json").exit_code == 3);

    std::string bad = temp_path("propcolor_cli_test_bad.txt");
    std::ofstream(bad) << "2 1\n0 0\n";
    CHECK(run_cli("decide --input " + bad + " --k 2").exit_code == 3);
    std::remove(bad.c_str());
}

TEST_CASE("bench exits 0 when configurations agree") {
    RunResult bench =
        run_cli("bench --family cycle --n 4 --k 2 --vary-pruning");
    CHECK(bench.exit_code == 0);
    CHECK(bench.output.find("\"verdicts_agree\": true") != std::string::npos);
}

TEST_CASE("suite runs a scaled-down sweep to completion") {
    RunResult suite = run_cli("suite --nmax 4");
    CHECK(suite.exit_code == 0);
    CHECK(suite.output.find("RESULT: all claims verified") != std::string::npos);
}
