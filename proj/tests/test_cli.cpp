#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    std::string out;
    int exit_code = -1;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(OGS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(OGS_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_golden(const std::string& args, const std::string& file) {
    const CliResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden(file));
}

}  // namespace

TEST_CASE("golden: conversions") {
    check_golden("convert --n 5 --from perm --to ogs \"[3;2;5;4;1]\"",
                 "convert_perm_s5.txt");
    check_golden("convert --n 9 --from ogs --to normal \"t2 t3 t4^3 t5^3 t6^2 t7^2 t9^2\"",
                 "normal_s9.txt");
    check_golden(
        "convert --n 9 --from normal --to ogs "
        "\"s1 | s3 s2 | s4 s3 s2 | s6 s5 s4 s3 | s7 s6 | s8 s7\"",
        "normal_back_s9.txt");
}

TEST_CASE("golden: multiplication") {
    check_golden("multiply --n 5 \"t2 t3^2 t4 t5^4\" \"t2 t3 t4^2 t5^2\"",
                 "multiply_s5.txt");
    check_golden("multiply --group dih:Z9+Z3 \"a1^4 a2^2 b\" \"a1^7 a2 b\"",
                 "multiply_dih.txt");
    check_golden("multiply --group i2:7 \"b a^3\" \"a^5\"", "multiply_i2.txt");
}

TEST_CASE("golden: length, descents, factorization") {
    check_golden("length --n 10 \"t3 t4^2 t6^4 t7^3 t9^3 t10^2\"", "length_s10.txt");
    check_golden("descents --n 10 \"t3 t4^2 t6^4 t7^3 t9^3 t10^2\"", "descents_s10.txt");
    check_golden("factorize --n 10 \"t3 t4^2 t6^4 t7^3 t9^3 t10^2\"", "factorize_s10.txt");
}

TEST_CASE("golden: inversion") {
    check_golden("invert --n 24 \"t17^9 t19^2 t22^3 t24^3\"",
                 "invert_elementary_s24.txt");
    check_golden("invert --n 18 --explain \"t9^3 t10^3 t12^5 t13^3 t15^5 t17^2 t18^7\"",
                 "invert_explain_s18.txt");
}

TEST_CASE("json output round-trips byte-identically") {
    const CliResult r = run_cli("invert --n 5 --format json \"t2 t3^2 t4 t5^4\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("invert_json_s5.json"));
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(doc["group"] == "S5");
    CHECK(doc["output"]["result"] == "t2 t3 t4^3 t5^2");
}

TEST_CASE("verify verb summary lines and exit codes") {
    const CliResult ok = run_cli("verify --suite inverse --n 5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "120/120 ok\n");
    // Randomized suites print their seed.
    const CliResult rnd = run_cli("verify --suite inverse-random --n 12 --count 5");
    CHECK(rnd.exit_code == 0);
    CHECK(rnd.out.rfind("seed 20260826\n", 0) == 0);
    // A fixed seed is reproducible.
    const CliResult rnd2 = run_cli("verify --suite inverse-random --n 12 --count 5 --seed 7");
    const CliResult rnd3 = run_cli("verify --suite inverse-random --n 12 --count 5 --seed 7");
    CHECK(rnd2.out == rnd3.out);
    CHECK(rnd2.out.rfind("seed 7\n", 0) == 0);
}

TEST_CASE("exchange suite reports branch coverage") {
    const CliResult r = run_cli("verify --suite exchange --q 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("standard exchange case counts: [35,35,15]") != std::string::npos);
    CHECK(r.out.find("dual exchange case counts: [35,35,15]") != std::string::npos);
}

TEST_CASE("error handling exits 1") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("convert --n 5 --from perm --to ogs \"[1;1;2]\"").exit_code == 1);
    CHECK(run_cli("length --n 5 \"t9\"").exit_code == 1);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 1);
    CHECK(run_cli("multiply --n 5 --group i2:7 a a").exit_code == 1);
}

TEST_CASE("OGS_VERIFY_WORKERS does not change output") {
    const CliResult par = run_cli("verify --suite multiply --n 4");
    CliResult seq;
    {
        const std::string cmd = std::string("OGS_VERIFY_WORKERS=1 ") + OGS_CLI_PATH +
                                " verify --suite multiply --n 4 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) seq.out.append(buf, got);
        seq.exit_code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(par.exit_code == 0);
    CHECK(seq.exit_code == 0);
    CHECK(par.out == seq.out);
    CHECK(par.out == "576/576 ok\n");
}
