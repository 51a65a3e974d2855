// End-to-end checks of the hk-lab binary: output shapes, determinism, and
// the exit-code contract (0 clean, 1 failed check, 2 input error, 3 budget).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef HK_LAB_BINARY
#error "HK_LAB_BINARY must point at the built CLI"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HK_LAB_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kQuadricSpec = "/tmp/hklab_test_quadric.hk";
const char* kQuadricNoIdealSpec = "/tmp/hklab_test_quadric_m.hk";

void write_quadric_spec() {
    std::ofstream f(kQuadricSpec);
    f << "char 5;\nvars x y z;\nrel x^2+y^2+z^2;\nideal J = y, z;\n";
    // without ideals, ehk falls back to the maximal ideal
    std::ofstream g(kQuadricNoIdealSpec);
    g << "char 5;\nvars x y z;\nrel x^2+y^2+z^2;\n";
}

}  // namespace

TEST_CASE("stirling prints the bare value") {
    RunResult r = run("stirling 4 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "6\n");
}

TEST_CASE("segre reports exact closed forms and exits clean") {
    RunResult r = run("segre 2 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"exact\": \"4/3\"") != std::string::npos);
    CHECK(r.out.find("\"exact\": \"2/3\"") != std::string::npos);
}

TEST_CASE("byte-identical output across reruns") {
    RunResult a = run("segre 2 3 --q-ladder 2,4,8");
    RunResult b = run("segre 2 3 --q-ladder 2,4,8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    write_quadric_spec();
    RunResult c = run(std::string("mhk --spec ") + kQuadricSpec + " --emax 2");
    RunResult d = run(std::string("mhk --spec ") + kQuadricSpec + " --emax 2");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("failed checks exit 1") {
    RunResult r = run("bounds --e 2 --ehk 3/2 --mhk 3/4 --d 2 --hypersurface");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"status\": \"fail\"") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(run("ehk --spec /nonexistent.hk").exit_code == 2);
    std::ofstream bad("/tmp/hklab_test_bad.hk");
    bad << "char 4; vars x;\n";
    bad.close();
    CHECK(run("ehk --spec /tmp/hklab_test_bad.hk").exit_code == 2);
    CHECK(run("quotient --order 10 --mu 3 --p 5").exit_code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
    write_quadric_spec();
    RunResult r = run(std::string("ehk --spec ") + kQuadricNoIdealSpec + " --emax 3 --budget 10");
    CHECK(r.exit_code == 3);
}

TEST_CASE("csv output carries the sample table") {
    write_quadric_spec();
    RunResult r = run(std::string("ehk --spec ") + kQuadricNoIdealSpec + " --emax 2 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("e,length,q,ratio_exact,ratio_decimal", 0) == 0);
    CHECK(r.out.find("1,37,5,37/25,1.480000000000") != std::string::npos);
}

TEST_CASE("probe reports without claims") {
    RunResult r = run("probe-q26 --p 5 --d 2 --emax 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("conjectural_value") != std::string::npos);
}

TEST_CASE("veronese and rees subcommands run clean") {
    CHECK(run("veronese 2 --q-ladder 3,9,27").exit_code == 0);
    CHECK(run("rees 3").exit_code == 0);
    CHECK(run("quotient --order 2 --mu 3 --p 5").exit_code == 0);
}

TEST_CASE("relhk runs on a named colength-1 pair") {
    std::ofstream f("/tmp/hklab_test_pair.hk");
    f << "char 5;\nvars x y z;\nrel x^2+y^2+z^2;\nideal J = y, z;\nideal m = x, y, z;\n";
    f.close();
    RunResult r = run("relhk --spec /tmp/hklab_test_pair.hk --inner J --outer m --emax 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"exact\": \"13/25\"") != std::string::npos);

    // swapped names: containment fails, input error
    RunResult bad = run("relhk --spec /tmp/hklab_test_pair.hk --inner m --outer J --emax 2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("mhk at emax 3 lands near one half") {
    write_quadric_spec();
    RunResult r = run(std::string("mhk --spec ") + kQuadricSpec + " --emax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"decimal\": \"0.499840000000\"") != std::string::npos);
    CHECK(r.out.find("\"exact\": \"7813/15625\"") != std::string::npos);
}

TEST_CASE("csv output reaches nested sample tables") {
    write_quadric_spec();
    RunResult r = run(std::string("mhk --spec ") + kQuadricSpec + " --emax 2 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("difference,e,length_inner,length_outer,q,ratio_exact,ratio_decimal", 0) ==
          0);
    CHECK(r.out.find("13,1,50,37,5,13/25,0.520000000000") != std::string::npos);
}
