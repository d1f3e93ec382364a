// End-to-end checks of the command-line tool. The binary path arrives in the
// QMF_CLI environment variable (set by CTest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const char* binary = std::getenv("QMF_CLI");
    REQUIRE(binary != nullptr);
    std::string command = std::string(binary) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, output};
}

}  // namespace

TEST_CASE("expand: csv rows are exponent,coefficient") {
    auto result = run_cli("expand Q2 --order 8 --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "0,1\n1,24\n2,24\n3,96\n4,24\n5,144\n6,96\n7,192\n");
}

TEST_CASE("expand: b-file starts at the valuation") {
    auto result = run_cli("expand j3 --order 5 --format bfile");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "-1 1\n0 42\n1 783\n2 8672\n3 65367\n4 371520\n");
}

TEST_CASE("expand: JSON matches the series schema") {
    auto result = run_cli("expand Delta --order 3 --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "{\"coeffs\":[\"1\",\"-24\"],\"precision\":3,\"valuation\":1}\n");
}

TEST_CASE("expand: error exits") {
    CHECK(run_cli("expand NoSuchForm --order 8").exit_code == 2);
    CHECK(run_cli("expand Q2 --order 8 --format yaml").exit_code == 3);
}

TEST_CASE("verify: sl2 suite prints nine passes") {
    auto result = run_cli("verify sl2");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("9/9 checks passed") != std::string::npos);
    CHECK(result.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify: quiet mode keeps the summary only") {
    auto result = run_cli("verify chazy --quiet");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "2/2 checks passed\n");
}

TEST_CASE("tau: methods and crosscheck") {
    auto eta = run_cli("tau --which tau2 --n 5 --method eta");
    CHECK(eta.exit_code == 0);
    CHECK(eta.output == "-210\n");
    auto rec = run_cli("tau --which tau3 --n 7 --method recursion");
    CHECK(rec.exit_code == 0);
    CHECK(rec.output == "-40\n");
    auto cross = run_cli("tau --which tau --n 1 --method crosscheck");
    CHECK(cross.exit_code == 0);
    CHECK(cross.output == "1, agreement\n");
}

TEST_CASE("scan: reports and exit codes") {
    auto clean = run_cli("scan tau2-mod24 --upto 300");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output == "no violation up to 300\n");
    CHECK(run_cli("scan made-up-rule --upto 10").exit_code == 2);
}

TEST_CASE("dims, basis and sturm") {
    auto dims = run_cli("dims --p 2 --k 8");
    CHECK(dims.exit_code == 0);
    CHECK(dims.output.find("genus 0") != std::string::npos);
    CHECK(dims.output.find("dim M_8(Gamma0(2)) = 3") != std::string::npos);
    CHECK(dims.output.find("dim S_8(Gamma0(2)) = 1") != std::string::npos);

    auto basis = run_cli("basis --group gamma0_2 --k 8");
    CHECK(basis.exit_code == 0);
    CHECK(basis.output == "Q2^4\nQ2^2*R2\nR2^2\nrank 3, dim 3 (independent)\n");

    auto sturm = run_cli("sturm --group gamma0_2 --k 8");
    CHECK(sturm.exit_code == 0);
    CHECK(sturm.output == "2\n");
}

TEST_CASE("identical invocations produce byte-identical output") {
    auto first = run_cli("expand Delta2 --order 32 --format bfile");
    auto second = run_cli("expand Delta2 --order 32 --format bfile");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    auto v1 = run_cli("verify identities --order 24");
    auto v2 = run_cli("verify identities --order 24");
    CHECK(v1.output == v2.output);
}
