#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <string>

#include "geomcolor/io.hpp"

using namespace geomcolor;
namespace fs = std::filesystem;

namespace {

const std::string kCli = CLI_PATH;

int run(const std::string& args) {
    int status = std::system((kCli + " " + args).c_str());
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("geomcolor_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void put(const std::string& path, const std::string& content) {
    std::ofstream(path) << content;
}

}  // namespace

TEST_CASE("gen, color, verify round trip for every route") {
    TempDir tmp;
    const std::pair<const char*, int> routes[] = {
        {"b-points", 2},      {"b-points", 4},      {"b-rects", 2},  {"b-rects", 3},
        {"h-points", 2},      {"h-points", 3},      {"h-rects", 2},  {"h-rects", 4},
        {"bprime-points", 2}, {"bprime-points", 3}, {"bprime-points", 7},
        {"bprime-rects", 3},
    };
    for (const auto& [family, k] : routes) {
        CAPTURE(family);
        CAPTURE(k);
        auto inst = tmp.file("i.json");
        auto col = tmp.file("c.json");
        CHECK(run("gen --family " + std::string(family) + " --n 12 --seed 5 --out " + inst) == 0);
        CHECK(run("color --k " + std::to_string(k) + " --in " + inst + " --out " + col) == 0);
        CHECK(run("verify --k " + std::to_string(k) + " --in " + inst + " --coloring " + col +
                  " --out " + tmp.file("v.json")) == 0);
    }
}

TEST_CASE("same seed twice produces byte-identical files") {
    TempDir tmp;
    REQUIRE(run("gen --family h-rects --n 9 --seed 77 --out " + tmp.file("a.json")) == 0);
    REQUIRE(run("gen --family h-rects --n 9 --seed 77 --out " + tmp.file("b.json")) == 0);
    CHECK(read_file(tmp.file("a.json")) == read_file(tmp.file("b.json")));
}

TEST_CASE("verification failure exits 1 with a witness") {
    TempDir tmp;
    auto inst = tmp.file("i.json");
    auto col = tmp.file("c.json");
    auto verdict = tmp.file("v.json");
    REQUIRE(run("gen --family b-points --n 6 --seed 2 --out " + inst) == 0);
    put(col, "{\"palette\": 2, \"colors\": [0, 0, 0, 0, 0, 0]}\n");
    CHECK(run("verify --k 2 --in " + inst + " --coloring " + col + " --out " + verdict) == 1);
    CHECK(read_file(verdict).find("witness") != std::string::npos);
}

TEST_CASE("error exit codes: unknown family 2, parse 3, validation 4") {
    TempDir tmp;
    CHECK(run("gen --family squares --n 3 --out " + tmp.file("x.json") + " 2>/dev/null") == 2);

    auto bad_family = tmp.file("bad_family.json");
    put(bad_family, "{\"family\": \"squares\", \"points\": []}\n");
    CHECK(run("color --k 2 --in " + bad_family + " 2>/dev/null >/dev/null") == 2);

    auto garbage = tmp.file("garbage.json");
    put(garbage, "{{{\n");
    CHECK(run("color --k 2 --in " + garbage + " 2>/dev/null >/dev/null") == 3);

    auto degenerate = tmp.file("degenerate.json");
    put(degenerate, "{\"family\": \"b-points\", \"points\": [[0, 0], [0, 1]]}\n");
    CHECK(run("color --k 2 --in " + degenerate + " 2>/dev/null >/dev/null") == 4);
    // --perturb lifts the degeneracy instead of failing.
    CHECK(run("color --k 2 --perturb --in " + degenerate + " --out " + tmp.file("c.json")) == 0);

    // No 2-proper algorithm for base-line rectangles.
    auto rects = tmp.file("r.json");
    REQUIRE(run("gen --family bprime-rects --n 4 --seed 1 --out " + rects) == 0);
    CHECK(run("color --k 2 --in " + rects + " 2>/dev/null >/dev/null") == 4);
}

TEST_CASE("chromatic reports the committed lower bound") {
    TempDir tmp;
    auto inst = tmp.file("i.json");
    put(inst, read_file(std::string(DATA_DIR) + "/b_12points.json"));
    auto out = tmp.file("out.json");
    REQUIRE(run("chromatic --k 3 --max-colors 2 --in " + inst + " --out " + out) == 0);
    CHECK(read_file(out).find("\"colors\": null") != std::string::npos);
    REQUIRE(run("chromatic --k 3 --max-colors 3 --in " + inst + " --out " + out) == 0);
    CHECK(read_file(out).find("\"colors\": 3") != std::string::npos);
}

TEST_CASE("cf and render produce usable artifacts") {
    TempDir tmp;
    auto inst = tmp.file("i.json");
    auto col = tmp.file("c.json");
    auto svg = tmp.file("p.svg");
    REQUIRE(run("gen --family b-points --n 20 --seed 3 --out " + inst) == 0);
    CHECK(run("cf --k 2 --in " + inst + " --out " + col) == 0);
    CHECK(parse_coloring(read_file(col)).colors.size() == 20);
    CHECK(run("render --in " + inst + " --coloring " + col + " --out " + svg) == 0);
    CHECK(read_file(svg).rfind("<svg", 0) == 0);
}
