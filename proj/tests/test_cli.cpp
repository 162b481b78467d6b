#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "lrc/lr.hpp"
#include "verify.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(LRCHARGE_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("kpoly") {
    CHECK(run("kpoly --rects 1x1,1x1 --shape 2").out == "q\n");
    CHECK(run("kpoly --rects 1x1,1x1 --shape 1,1").out == "1\n");
    CHECK(run("kpoly --rects 2x1 --shape 2").out == "1\n");
    CHECK(run("kpoly --rects 1x1,1x1,1x1 --shape 2,1").out == "q + q^2\n");
    CHECK(run("kpoly --rects 1x1,1x1,1x1 --shape 2,1 --format json").out == "[0,1,1]\n");
    CHECK(run("kpoly --rects 1x1,1x1 --shape 3").out == "0\n");
}

TEST_CASE("lrt listing and generating function") {
    Run r = run("lrt --rects 3x2,2x2,1x3 --shape 6,4,2,1");
    CHECK(r.code == 0);
    CHECK(r.out.find("6\t7462224111335\n") != std::string::npos);
    Run sum = run("lrt --rects 3x2,2x2,1x3 --shape 6,4,2,1 --sum");
    CHECK(sum.code == 0);
    CHECK(sum.out == run("kpoly --rects 3x2,2x2,1x3 --shape 6,4,2,1").out);
    Run empty = run("lrt --rects 3x2 --shape 2,2,2");
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
    auto j = nlohmann::json::parse(run("lrt --rects 2x1,1x1 --shape 2,1 --format json").out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["charge"] == 0);
}

TEST_CASE("poset export") {
    Run dot = run("poset --rects 1x1,1x1,1x1");
    CHECK(dot.code == 0);
    CHECK(dot.out.find("label=\"123\\nrank 3\"") != std::string::npos);
    CHECK(dot.out.find("label=\"321\\nrank 0\"") != std::string::npos);
    auto j = nlohmann::json::parse(run("poset --rects 2x1,1x1 --format json").out);
    CHECK(j["nodes"].size() == 2);
}

TEST_CASE("verify suites and exit codes") {
    Run main = run("verify main --max-n 6");
    CHECK(main.code == 0);
    CHECK(main.out.rfind("main: PASS", 0) == 0);
    CHECK(run("verify action --t 3 --max-cells 6").code == 0);
    CHECK(run("verify chi --max-cells 4 --samples 20 --seed 3").out ==
          run("verify chi --max-cells 4 --samples 20 --seed 3 --jobs 2").out);
    CHECK(run("verify nonsense").code == 1);
    CHECK(run("kpoly --rects 1x3").code == 1);
    CHECK(run("kpoly --rects 3by2 --shape 1").code == 1);
    CHECK(run("kpoly --rects 1x9 --shape 9").code == 3);
    CHECK(run("verify main --max-n 9").code == 3);
    CHECK(run("lrt --rects 5x5 --shape 5,5,5,5,5 --max-cells 20").code == 3);
}

TEST_CASE("rectangle sequence enumeration") {
    using lrc::verify::rect_sequences;
    // Single rectangles with at most 4 cells: 1x1..1x4, 2x1, 2x2, 3x1, 4x1.
    CHECK(rect_sequences(1, 1, 10, 4, true).size() == 8);
    auto dom = rect_sequences(1, 3, 6, 10, true);
    for (const auto& r : dom) {
        CHECK(r.is_dominant());
        CHECK(r.n() <= 6);
        CHECK(r.total_cells() <= 10);
    }
    auto all = rect_sequences(2, 2, 4, 4, false);
    CHECK(all.size() > rect_sequences(2, 2, 4, 4, true).size());
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.total_cells() < b.total_cells();
    }));
}

TEST_CASE("suite results") {
    auto res = lrc::verify::running_example();
    CHECK(res.passed());
    CHECK(lrc::verify::summary(res).rfind("running: PASS", 0) == 0);
    CHECK_THROWS_AS(lrc::verify::run_suite("nope", {}), std::invalid_argument);
}
