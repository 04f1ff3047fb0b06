#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TRIPART_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const char* name) { return std::string(TRIPART_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("cli tripartition json") {
    const Run r = run("tripartition " + data("annulus.bnd") + " --format boundary --json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["p=1"]["tree"].size() == 15);
    CHECK(j["p=1"]["cotree"].size() == 8);
    CHECK(j["p=1"]["leftover"].size() == 1);
}

TEST_CASE("cli betti of a point") {
    const Run r = run("betti " + data("point.smp"));
    CHECK(r.status == 0);
    CHECK(r.out == "-1 0\n0 0\n");
}

TEST_CASE("cli diagram and bases") {
    const Run d = run("diagram " + data("triangle_graph.smp"));
    CHECK(d.status == 0);
    CHECK(d.out.find("1 5 inf") != std::string::npos);
    const Run b = run("bases " + data("triangle_graph.smp") + " --dim 1");
    CHECK(b.status == 0);
    CHECK(b.out.find("5 cycle: 3 4 5") != std::string::npos);
}

TEST_CASE("cli matroid") {
    const Run r = run("matroid " + data("triangle_graph.smp") + " --dim 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli input errors exit with 2") {
    CHECK(run("betti " + data("missing.smp")).status == 2);
    CHECK(run("betti " + data("annulus.bnd") + " --format simplicial").status == 2);
    CHECK(run("frobnicate").status != 0);
}

TEST_CASE("cli output is deterministic") {
    const std::string args = "tripartition " + data("wheel.bnd") + " --json";
    CHECK(run(args).out == run(args).out);
}
