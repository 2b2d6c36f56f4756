#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_out.tmp";
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("detect reports two communities on a static pair of triangles") {
    write_file("k3pair.stream",
               "n 6\nt 0\n+ 0 1\n+ 0 2\n+ 1 2\n+ 3 4\n+ 3 5\n+ 4 5\n");
    auto r = run("detect --stream k3pair.stream --measure cwcn --out k3pair.tl");
    CHECK(r.status == 0);
    CHECK(r.out.find("step 0: 2 communities") != std::string::npos);

    auto tl = slurp("k3pair.tl");
    CHECK(tl.find("t 0") != std::string::npos);
    std::remove("k3pair.stream");
    std::remove("k3pair.tl");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("detect --stream nowhere.stream --measure cosine --out x.tl").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("generate --pattern grow-shrink --out-stream a --out-truth b").status == 2); // no seed
}

TEST_CASE("runtime errors exit with 1") {
    CHECK(run("detect --stream missing.stream --measure cwcn --out x.tl").status == 1);
    write_file("bad.stream", "n 4\nt 0\n+ 0 9\n");
    auto r = run("detect --stream bad.stream --measure cwcn --out x.tl");
    CHECK(r.status == 1);
    CHECK(r.out.find("line") != std::string::npos);
    std::remove("bad.stream");
}

TEST_CASE("generate, detect, evaluate, and colormap run end to end reproducibly") {
    auto gen = run("generate --pattern grow-shrink --n 32 --steps 10 --seed 5"
                   " --out-stream e2e.stream --out-truth e2e.truth");
    REQUIRE(gen.status == 0);
    auto gen2 = run("generate --pattern grow-shrink --n 32 --steps 10 --seed 5"
                    " --out-stream e2e2.stream --out-truth e2e2.truth");
    REQUIRE(gen2.status == 0);
    CHECK(slurp("e2e.stream") == slurp("e2e2.stream"));
    CHECK(slurp("e2e.truth") == slurp("e2e2.truth"));

    auto det = run("detect --stream e2e.stream --measure cwcn --out e2e.tl -q");
    REQUIRE(det.status == 0);
    auto det2 = run("detect --stream e2e.stream --measure cwcn --out e2e2.tl -q");
    REQUIRE(det2.status == 0);
    CHECK(slurp("e2e.tl") == slurp("e2e2.tl"));

    auto ev = run("evaluate --detected e2e.tl --truth e2e.truth");
    REQUIRE(ev.status == 0);
    CHECK(ev.out.find("step,nmi,nvi") != std::string::npos);
    CHECK(ev.out.find("mean,") != std::string::npos);
    // 1 header + 11 steps + 1 mean row
    std::size_t lines = 0;
    for (char c : ev.out) lines += (c == '\n');
    CHECK(lines == 13);

    auto nvi_only = run("evaluate --detected e2e.tl --truth e2e.truth --metric nvi");
    CHECK(nvi_only.out.find("step,nvi") != std::string::npos);
    CHECK(nvi_only.out.find("nmi") == std::string::npos);

    auto cm = run("colormap --timeline e2e.tl --out e2e.ppm");
    REQUIRE(cm.status == 0);
    auto ppm = slurp("e2e.ppm");
    CHECK(ppm.substr(0, 2) == "P6");
    CHECK(ppm.find("11 32") != std::string::npos);

    for (const char* f : {"e2e.stream", "e2e.truth", "e2e2.stream", "e2e2.truth", "e2e.tl",
                          "e2e2.tl", "e2e.ppm"})
        std::remove(f);
}

TEST_CASE("bench emits one csv row per size") {
    auto r = run("bench --sizes 16,32 --steps 3 --reps 2 --measure cwcn --seed 1");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("n,events,mean_seconds") != std::string::npos);
    std::size_t rows = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line))
        if (line.find("n,") == std::string::npos && !line.empty() &&
            line.find(',') != std::string::npos && line.find("stddev") == std::string::npos)
            ++rows;
    CHECK(rows == 2);
}
