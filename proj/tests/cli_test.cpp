#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI through the shell, capturing stdout by default or stderr when
// asked. The other stream goes to /dev/null.
RunResult run_cli(const std::string& args, bool capture_stderr = false) {
    std::string command = std::string("\"") + LEGCORD_CLI_PATH + "\" " + args;
    command += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& stem) {
    return std::filesystem::temp_directory_path() /
           (stem + "." + std::to_string(::getpid()) + ".tmp");
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

} // namespace

TEST_CASE("symbol prints the sign and nothing else") {
    CHECK(run_cli("symbol 2 7").output == "1\n");
    CHECK(run_cli("symbol 2 7").exit_code == 0);
    CHECK(run_cli("symbol 3 5").output == "-1\n");
    CHECK(run_cli("symbol 11 7").output == "1\n"); // reduced to 4, a residue
}

TEST_CASE("symbol rejects divisible arguments without touching stdout") {
    const RunResult out = run_cli("symbol 3 3");
    CHECK(out.exit_code == 1);
    CHECK(out.output.empty());
    const RunResult err = run_cli("symbol 3 3", true);
    CHECK(err.output.find("divisible") != std::string::npos);
}

TEST_CASE("non-prime moduli are rejected with exit code 1") {
    const RunResult out = run_cli("check 4 4");
    CHECK(out.exit_code == 1);
    CHECK(out.output.empty());
    const RunResult err = run_cli("check 4 4", true);
    CHECK(err.output.find("p must be an odd prime") != std::string::npos);

    CHECK(run_cli("check 1 3").exit_code == 1); // n below the CLI range
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("").exit_code == 1); // missing subcommand
}

TEST_CASE("check text output carries the verdict") {
    const RunResult yes = run_cli("check 3 3 --method all");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("cordial: true") != std::string::npos);
    CHECK(yes.output.find("agreement: true") != std::string::npos);
    CHECK(yes.output.find('\x1b') == std::string::npos); // not a tty, no color

    const RunResult no = run_cli("check 4 3");
    CHECK(no.exit_code == 0);
    CHECK(no.output.find("cordial: false") != std::string::npos);
}

TEST_CASE("check json output mirrors the verdict fields") {
    const RunResult all = run_cli("check 3 3 --method all --format json");
    CHECK(all.exit_code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(all.output);
    CHECK(parsed.at("cordial") == true);
    CHECK(parsed.at("agreement") == true);
    REQUIRE(parsed.at("verdicts").size() == 3);
    CHECK(parsed.at("verdicts")[0].at("method") == "direct");
    CHECK(parsed.at("verdicts")[0].at("counts").at("e0") == 2);
    CHECK(parsed.at("verdicts")[0].at("counts").at("e1") == 1);
    CHECK(parsed.at("verdicts")[1].at("method") == "theorem");
    CHECK(parsed.at("verdicts")[1].at("s_value") == 0);
    CHECK(parsed.at("verdicts")[1].at("t_value") == 2);
    CHECK(parsed.at("verdicts")[2].at("method") == "paper_algorithm");

    const nlohmann::json single =
        nlohmann::json::parse(run_cli("check 4 5 --method paper-alg --format json").output);
    CHECK(single.at("method") == "paper_algorithm");
    CHECK(single.at("cordial") == false);
    CHECK(single.at("s_value") == 0);
    CHECK(single.at("t_value") == 4);
}

TEST_CASE("graph exports match the library formats") {
    CHECK(run_cli("graph 4 3 +1").output == "1 3\n3 4\n");
    CHECK(run_cli("graph 4 3 -1").output == "1 4\n2 3\n");
    const std::string dot = run_cli("graph 3 3 +1 --format dot").output;
    CHECK(dot.find("graph legendre {") != std::string::npos);
    CHECK(dot.find("1 -- 3;") != std::string::npos);
}

TEST_CASE("size breakdown and verification") {
    const RunResult out = run_cli("size 4 3 +1 --breakdown --verify");
    CHECK(out.exit_code == 0);
    CHECK(out.output.find("q: 1") != std::string::npos);
    CHECK(out.output.find("psi: 0") != std::string::npos);
    CHECK(out.output.find("S1: 0") != std::string::npos);
    CHECK(out.output.find("size: 2") != std::string::npos);
    CHECK(out.output.find("enumerated: 2") != std::string::npos);
    CHECK(out.output.find("match: true") != std::string::npos);
}

TEST_CASE("survey emits CSV on stdout and artifacts to files") {
    CHECK(run_cli("survey --n-min 2 --n-max 2 --m 10").output == "n,m,J\n2,10,3\n");

    const auto csv_path = temp_file("legcord_cli_csv");
    const auto svg_path = temp_file("legcord_cli_svg");
    const RunResult run = run_cli("survey --n-min 2 --n-max 4 --m 10,50 --csv " +
                                  csv_path.string() + " --svg " + svg_path.string());
    CHECK(run.exit_code == 0);
    CHECK(run.output.empty());
    const std::string csv = slurp(csv_path);
    CHECK(csv.starts_with("n,m,J\n"));
    CHECK(csv.find("2,10,3\n") != std::string::npos);
    const std::string svg = slurp(svg_path);
    CHECK(svg.starts_with("<svg "));
    CHECK(svg.find("<polyline ") != std::string::npos);
    std::filesystem::remove(csv_path);
    std::filesystem::remove(svg_path);

    const RunResult sets = run_cli("survey --n-min 2 --n-max 2 --m 10 --with-sets");
    CHECK(sets.output.find("J-set n=2 m=10: 3 5 7") != std::string::npos);

    CHECK(run_cli("survey --n-min 2 --n-max 4 --m 10,x").exit_code == 1);
    CHECK(run_cli("survey --n-min 5 --n-max 4 --m 10").exit_code == 1);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::string args = "survey --n-min 2 --n-max 12 --m 10,50,100";
    CHECK(run_cli(args).output == run_cli(args).output);
    CHECK(run_cli("check 9 7 --method all --format json").output ==
          run_cli("check 9 7 --method all --format json").output);
}

TEST_CASE("--out writes exactly what stdout would have received") {
    const auto out_path = temp_file("legcord_cli_out");
    const RunResult run = run_cli("check 3 3 --format json --out " + out_path.string());
    CHECK(run.exit_code == 0);
    CHECK(run.output.empty());
    CHECK(slurp(out_path) == run_cli("check 3 3 --format json").output);
    std::filesystem::remove(out_path);

    CHECK(run_cli("check 3 3 --out /nonexistent-dir/x").exit_code == 1);
}

TEST_CASE("verify runs the cross-check suites") {
    const RunResult run = run_cli("verify --n-max 12 --p-max 13");
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("[PASS] size formula vs enumeration") != std::string::npos);
    CHECK(run.output.find("6/6 suites passed") != std::string::npos);
}

TEST_CASE("help is printed on stdout with exit code 0") {
    const RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("symbol") != std::string::npos);
    CHECK(help.output.find("survey") != std::string::npos);
}
