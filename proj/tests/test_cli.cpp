#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "cantor_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(CANTOR_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

fs::path write_box_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("iterate emits the frozen interval table") {
    RunResult r = run_cli("iterate --depth 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "index,left,right,left_rounded,right_rounded\n"
          "0,0/1,1/9,0,0.111111111111\n"
          "1,2/9,1/3,0.222222222222,0.333333333333\n"
          "2,2/3,7/9,0.666666666667,0.777777777778\n"
          "3,8/9,1/1,0.888888888889,1\n");

    RunResult zero = run_cli("iterate --depth 0");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.out, "0,0/1,1/1,0,1"));
}

TEST_CASE("svc emits the fat-construction intervals") {
    RunResult r = run_cli("svc --m 4 --depth 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0,0/1,3/8,0,0.375"));
    CHECK(contains(r.out, "1,5/8,1/1,0.625,1"));
}

TEST_CASE("member reports the containing gap") {
    RunResult r = run_cli("member --x 5/27 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"in_set\": false"));
    CHECK(contains(r.out, "\"gap_left\": \"1/9\""));
    CHECK(contains(r.out, "\"gap_right\": \"2/9\""));

    RunResult member = run_cli("member --x 1/4");
    CHECK(member.exit_code == 0);
    CHECK(contains(member.out, "1/4,true,0.(02)_3"));
}

TEST_CASE("approx at level 1 lists the four breakpoints") {
    RunResult r = run_cli("approx --depth 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "index,x,y,x_rounded,y_rounded\n"
          "0,0/1,0/1,0,0\n"
          "1,1/3,1/2,0.333333333333,0.5\n"
          "2,2/3,1/2,0.666666666667,0.5\n"
          "3,1/1,1/1,1,1\n");
}

TEST_CASE("staircase sampling is monotone and exact") {
    RunResult r = run_cli("staircase --grid 27");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    double prev = -1.0;
    int rows = 0;
    while (std::getline(lines, line)) {
        std::size_t last = line.rfind(',');
        std::size_t second_last = line.rfind(',', last - 1);
        double f = std::stod(line.substr(last + 1));
        (void)second_last;
        CHECK(f >= prev);
        prev = f;
        ++rows;
    }
    CHECK(rows == 28);
    CHECK(prev == 1.0);
}

TEST_CASE("curve subcommands emit samples with the right shape") {
    RunResult two = run_cli("curve2 --depth 1");
    CHECK(two.exit_code == 0);
    CHECK(contains(two.out, "1,1/3,1/2,1/1,true"));

    RunResult three = run_cli("curve3 --depth 1 --format json");
    CHECK(three.exit_code == 0);
    CHECK(contains(three.out, "\"dimension\": 3"));
    CHECK(contains(three.out, "\"z\""));

    RunResult strided = run_cli("curve2 --depth 2 --stride 4");
    CHECK(strided.exit_code == 0);
    CHECK(contains(strided.out, "\n3,1/1,"));
}

TEST_CASE("preimage doubles binary digits into a parameter") {
    RunResult r = run_cli("preimage --coord 1/2 --coord 1/2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1/9,0.00(2)_3,true"));

    RunResult cube = run_cli("preimage --coord 1/2 --coord 1/2 --coord 1/2");
    CHECK(cube.exit_code == 0);
    CHECK(contains(cube.out, "1/27"));
}

TEST_CASE("quotient lists slopes with ratio 9/4") {
    RunResult r = run_cli("quotient --x 0/1 --depth 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0,1,2/3,3/4,,0.75"));
    CHECK(contains(r.out, "1,3,2/27,27/16,9/4,"));
    CHECK(contains(r.out, "2,5,2/243,243/64,9/4,"));
}

TEST_CASE("hausdorff builds a cover from a box file and traces parameters") {
    fs::path box = write_box_file("square.box", "dimension 2\nbox 0/1 0/1 1/1 1/1\n");
    RunResult r = run_cli("hausdorff --input " + box.string() +
                          " --depth 3 --x 0/1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"block_widths\": \"0 2 4\""));
    CHECK(contains(r.out, "\"leaf_count\": 64"));
    CHECK(contains(r.out, "\"point\": \"1/8 1/8\""));
}

TEST_CASE("hausdorff surfaces parse errors with their line number") {
    fs::path box = write_box_file("bad.box", "dimension 2\nbox 0/1 0/1 1/1\n");
    RunResult r = run_cli("hausdorff --input " + box.string() + " --depth 2");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "line 2"));

    RunResult missing = run_cli("hausdorff --input /nonexistent.box --depth 2");
    CHECK(missing.exit_code == 1);
    CHECK(contains(missing.err, "/nonexistent.box"));
}

TEST_CASE("verify passes its suites and rejects unknown selections") {
    RunResult ok = run_cli("verify --select measure");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "[PASS] measure"));
    CHECK(contains(ok.out, "1/1 properties passed"));

    RunResult note = run_cli("verify --select quotient-growth");
    CHECK(note.exit_code == 0);
    CHECK(contains(note.out, "9/4"));
    CHECK(contains(note.out, "note:"));

    RunResult unknown = run_cli("verify --select bogus");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("iterate").exit_code == 2);
    CHECK(run_cli("member --x notanumber").exit_code == 2);
    CHECK(run_cli("member --x 1/0").exit_code == 2);
    CHECK(run_cli("member --x 1/2 --format svg").exit_code == 2);
    CHECK(run_cli("curve3 --depth 1 --format svg").exit_code == 2);
    CHECK(run_cli("iterate --depth 2 --format yaml").exit_code == 2);
    CHECK(run_cli("preimage --coord 1/2").exit_code == 2);
}

TEST_CASE("construction failures exit with status 1") {
    CHECK(run_cli("iterate --depth 30").exit_code == 1);
    CHECK(run_cli("svc --m 2 --depth 1").exit_code == 1);
    CHECK(run_cli("quotient --x 1/2 --depth 1").exit_code == 1);
    CHECK(run_cli("preimage --coord 3/2 --coord 0/1").exit_code == 1);
}

TEST_CASE("out flag writes the artifact to the given path") {
    fs::path target = scratch_dir() / "artifact.csv";
    fs::remove(target);
    RunResult r = run_cli("iterate --depth 1 --out " + target.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::string content = slurp(target);
    CHECK(contains(content, "0,0/1,1/3,"));

    RunResult bad = run_cli("iterate --depth 1 --out /nonexistent_dir/x.csv");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
    fs::path box = write_box_file("det.box",
                                  "dimension 2\n"
                                  "box 0/1 0/1 1/1 1/2\n"
                                  "box 0/1 0/1 1/2 1/1\n");
    const std::string invocations[] = {
        "iterate --depth 4 --format csv",
        "iterate --depth 4 --format svg",
        "iterate --depth 4 --format json",
        "svc --m 5 --depth 3 --format json",
        "staircase --grid 81 --format svg",
        "approx --depth 5 --format csv",
        "curve2 --depth 3 --format svg",
        "curve3 --depth 2 --format json",
        "member --x 17/24 --format json",
        "quotient --x 1/4 --depth 6 --format csv",
        "preimage --coord 3/7 --coord 5/9 --format json",
        "hausdorff --input " + box.string() + " --depth 3 --x 0/1 --x 3/4 --format json",
        "verify --select partition",
    };
    for (const std::string& inv : invocations) {
        RunResult a = run_cli(inv);
        RunResult b = run_cli(inv);
        CAPTURE(inv);
        REQUIRE(a.exit_code == 0);
        REQUIRE(a.exit_code == b.exit_code);
        REQUIRE_FALSE(a.out.empty());
        REQUIRE(a.out == b.out);
    }
}
