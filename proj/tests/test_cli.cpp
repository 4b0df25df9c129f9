// Copyright 2026 The acekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "acekit/circuit.hpp"
#include "cli.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "acekit");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = acekit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("acekit_cli_test_" + name);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("channel prints alpha and its order") {
    auto r = run({"channel", "--preset", "P:Si", "--gate-time", "1e-6"});
    CHECK(r.code == 0);
    CHECK(r.err.find("order 10^6") != std::string::npos);
    CHECK(r.out.rfind("p_i,p_x,p_y,p_z,", 0) == 0);
    CHECK(r.out.find(",6\n") != std::string::npos);

    auto q = run({"channel", "--p-total", "1e-5", "--alpha", "10", "--quiet"});
    CHECK(q.code == 0);
    CHECK(q.err.empty());
}

TEST_CASE("schedule writes the ACE circuit") {
    auto r = run({"schedule", "--template", "memory5", "-q"});
    CHECK(r.code == 0);
    auto c = acekit::parse_circuit(r.out);
    CHECK(c.count(acekit::OpKind::XEC) == 2);
    CHECK(c.count(acekit::OpKind::ZEC) == 7);
    auto conv = run({"schedule", "--scheme", "conventional", "-q"});
    CHECK(acekit::parse_circuit(conv.out).count(acekit::OpKind::XEC) == 6);
}

TEST_CASE("schedule reads circuit files") {
    auto path = temp_path("in.ftc");
    std::ofstream(path) << "qubits 2\nH 0\nCX 0 1\n";
    auto r = run({"schedule", "--input", path.string(), "-q"});
    CHECK(r.code == 0);
    CHECK(acekit::parse_circuit(r.out).n_qubits() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("sweep reproduces the comparison grid") {
    auto r = run({"sweep", "--template", "memory5", "--levels", "2", "--p-total", "1e-5", "--alpha", "1:100:log",
                  "--schemes", "conventional,ace", "-q"});
    CHECK(r.code == 0);
    size_t lines = std::count(r.out.begin(), r.out.end(), '\n');
    CHECK(lines == 1 + 41 * 2);
    CHECK(r.out.rfind("alpha,p_total,scheme,levels,depth,", 0) == 0);
}

TEST_CASE("identical configs give byte-identical CSV") {
    auto cfg = temp_path("run.cfg");
    std::ofstream(cfg) << "# simulation config\ntemplate = bell\np-total = 1e-3\nalpha = 10\nshots = 20000\nseed = 5\n";
    auto a = run({"simulate", "--config", cfg.string(), "--workers", "1", "-q"});
    auto b = run({"simulate", "--config", cfg.string(), "--workers", "4", "-q"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find(",20000,5,") != std::string::npos);
    std::filesystem::remove(cfg);
}

TEST_CASE("analyze and output files") {
    auto out = temp_path("analyze.csv");
    auto r = run({"analyze", "--p-total", "1e-5", "--alpha", "100", "--levels", "1,2", "--output", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("lower bound") != std::string::npos);
    auto csv = slurp(out);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    std::filesystem::remove(out);
}

TEST_CASE("verify passes") {
    auto r = run({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("distance3,weight1_corrected,21,21") != std::string::npos);
    CHECK(r.out.find("type_preservation,z_subsets_preserved,128,128") != std::string::npos);
}

TEST_CASE("input errors exit with status 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"channel"}).code == 1);
    CHECK(run({"channel", "--bogus"}).code == 1);
    CHECK(run({"channel", "--preset", "P:Si", "--p-total", "1e-3", "--alpha", "2"}).code == 1);
    CHECK(run({"channel", "--preset", "nowhere"}).code == 1);
    CHECK(run({"channel", "--p-total", "1e-3"}).code == 1);
    CHECK(run({"sweep", "--p-total", "1e-5", "--alpha", "5:1:log"}).code == 1);
    CHECK(run({"sweep", "--p-total", "1e-5", "--alpha", "0:1:log"}).code == 1);
    CHECK(run({"sweep", "--p-total", "1e-5", "--alpha", "1:2:cubic"}).code == 1);
    CHECK(run({"analyze", "--p-total", "1e-5", "--alpha", "1:10:log"}).code == 1);
    CHECK(run({"analyze", "--p-total", "1e-5", "--alpha", "2", "--levels", "3"}).code == 1);
    CHECK(run({"schedule", "--input", "/nonexistent/file.ftc"}).code == 1);
    CHECK(run({"schedule", "--template", "memory5", "--input", "x.ftc"}).code == 1);
    CHECK(run({"simulate", "--p-total", "1e-3", "--alpha", "2", "--shots", "0"}).code == 1);
    CHECK(run({"channel", "--p-total", "1e-3", "--alpha", "2", "--output", "/nonexistent/dir/x.csv"}).code == 1);
    CHECK(run({"channel", "--config", "/nonexistent.cfg"}).code == 1);
    auto r = run({"channel", "--preset", "nowhere"});
    CHECK(r.err.find("unknown preset") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}
