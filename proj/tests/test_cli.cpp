// Copyright 2026 The Scriptogen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "scriptogen/cli.hpp"

using namespace scriptogen;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "scriptogen");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "scriptogen_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("synth is byte-for-byte reproducible") {
    std::vector<std::string> names;
    for (int k = 0; k < 2; ++k) {
        const std::string base = scratch("run" + std::to_string(k)).string();
        const auto r = run({"synth", "--word", "aeiou", "--E", "20", "--seed", "7", "--traj", base + ".traj",
                            "--svg", base + ".svg", "--png", base + ".png"});
        REQUIRE(r.code == 0);
        names.push_back(base);
    }
    for (const char* ext : {".traj", ".svg", ".png"}) {
        const auto a = slurp(names[0] + ext);
        CHECK(!a.empty());
        CHECK(a == slurp(names[1] + ext));
    }
}

TEST_CASE("analyze and compare") {
    const std::string base = scratch("cmp").string();
    REQUIRE(run({"synth", "--word", "ae", "--E", "50", "--seed", "3", "--traj", base + ".traj", "--png",
                 base + "_a.png"})
                .code == 0);
    REQUIRE(run({"synth", "--word", "ae", "--E", "50", "--seed", "4", "--png", base + "_b.png"}).code == 0);

    const auto peaks = run({"analyze", base + ".traj"});
    CHECK(peaks.code == 0);
    CHECK(std::stoi(peaks.out) > 0);

    const auto self = run({"compare", base + "_a.png", base + "_a.png"});
    CHECK(self.code == 0);
    CHECK(std::stod(self.out) == 1.0);
    const auto other = run({"compare", base + "_a.png", base + "_b.png"});
    CHECK(std::stod(other.out) < 1.0);
    CHECK(std::stod(other.out) > 0.0);
}

TEST_CASE("sweep table") {
    const auto r = run({"sweep", "--word", "aeiou", "--E", "100,50,20", "--seeds", "10"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "E,mean_peaks,mean_static_strokes,sim_q1,sim_q2,sim_q3,sim_min");
    CHECK(lines[1].rfind("100,", 0) == 0);
    CHECK(lines[3].rfind("20,", 0) == 0);

    const auto file = scratch("sweep.csv");
    CHECK(run({"sweep", "--E", "100,50,20", "--seeds", "10", "--out", file.string()}).code == 0);
    CHECK(slurp(file) == r.out);
}

TEST_CASE("config file overrides flags") {
    const auto cfg = scratch("run.json");
    const auto traj = scratch("cfg.traj");
    std::ofstream(cfg) << R"({"word": "ou", "E": 40, "seed": 9, "traj": ")" << traj.string() << "\"}";
    const auto r = run({"synth", "--word", "aeiou", "--E", "100", "--config", cfg.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("word=ou E=40 seed=9") != std::string::npos);
    CHECK(fs::exists(traj));
}

TEST_CASE("errors exit nonzero and write nothing") {
    const auto out = scratch("never.traj");
    fs::remove(out);
    auto r = run({"synth", "--word", "aeiou", "--E", "10", "--traj", out.string()});
    CHECK(r.code != 0);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK_FALSE(fs::exists(out));

    r = run({"synth", "--word", "xyz", "--traj", out.string()});
    CHECK(r.code != 0);
    CHECK(r.err.find("'x'") != std::string::npos);
    CHECK_FALSE(fs::exists(out));

    CHECK(run({"synth", "--bogus"}).code != 0);
    CHECK(run({}).code != 0);
    CHECK(run({"analyze", scratch("missing.traj").string()}).code != 0);
    CHECK(run({"glyphs", "--file", scratch("missing.txt").string()}).code != 0);
}

TEST_CASE("glyph listing") {
    const auto r = run({"glyphs"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5 glyphs ok") != std::string::npos);
}

TEST_CASE("installed binary runs") {
    const std::string cmd = std::string(SCRIPTOGEN_CLI_PATH) + " glyphs > " + scratch("bin.txt").string();
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(slurp(scratch("bin.txt")).find("glyphs ok") != std::string::npos);
}
