#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "flipdist/io.hpp"
#include "flipdist/solver.hpp"
#include "helpers.hpp"

using namespace flipdist;
using testutil::E;
using testutil::fan;
using testutil::tri;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

std::string binary_path() {
    const char* bin = std::getenv("FLIPDIST_BIN");
    if (!bin) SKIP("FLIPDIST_BIN is not set");
    return bin;
}

RunResult run_cli(const std::string& args) {
    std::string cmd = "'" + binary_path() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int rc = pclose(pipe);
    REQUIRE(WIFEXITED(rc));
    res.status = WEXITSTATUS(rc);
    return res;
}

std::string temp_file(const std::string& tag, const std::string& content) {
    static int counter = 0;
    std::string path = "/tmp/flipdist_cli_" + std::to_string(getpid()) + "_" +
                       std::to_string(counter++) + "_" + tag;
    std::ofstream out(path);
    out << content;
    REQUIRE(out.good());
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kZigzag = "m 6\ninit 0 2 2 4 0 4\nfinal 1 3 3 5 1 5\n";

}  // namespace

TEST_CASE("solve reports the distance") {
    std::string file = temp_file("zig", kZigzag);
    RunResult r = run_cli("solve '" + file + "'");
    REQUIRE(r.status == 0);
    REQUIRE(r.out == "distance 4\n");
}

TEST_CASE("solve answers decision queries via exit codes") {
    std::string file = temp_file("zig", kZigzag);
    RunResult no = run_cli("solve '" + file + "' --k 3");
    REQUIRE(no.status == 1);
    REQUIRE(no.out == "no\n");
    RunResult yes = run_cli("solve '" + file + "' --k 4");
    REQUIRE(yes.status == 0);
    REQUIRE(yes.out == "yes\n");
}

TEST_CASE("a budget in the file is used and the flag overrides it") {
    std::string file = temp_file("zigk", std::string(kZigzag) + "k 4\n");
    RunResult fromfile = run_cli("solve '" + file + "'");
    REQUIRE(fromfile.status == 0);
    REQUIRE(fromfile.out == "yes\n");
    RunResult overridden = run_cli("solve '" + file + "' --k 3");
    REQUIRE(overridden.status == 1);
    REQUIRE(overridden.out == "no\n");
}

TEST_CASE("distance prints the bare number") {
    std::string file = temp_file("zig", kZigzag);
    RunResult r = run_cli("distance '" + file + "'");
    REQUIRE(r.status == 0);
    REQUIRE(r.out == "4\n");
}

TEST_CASE("oracle answers by search of the whole flip graph") {
    std::string file = temp_file("zig", kZigzag);
    RunResult plain = run_cli("oracle '" + file + "'");
    REQUIRE(plain.status == 0);
    REQUIRE(plain.out == "4\n");

    std::string filek = temp_file("zigk", std::string(kZigzag) + "k 3\n");
    RunResult no = run_cli("oracle '" + filek + "'");
    REQUIRE(no.status == 1);
    REQUIRE(no.out == "no\n");
}

TEST_CASE("oracle refuses polygons beyond its size limit") {
    Instance big{fan(15, 0), fan(15, 1), std::nullopt};
    std::string file = temp_file("big", serialize_instance(big));
    REQUIRE(run_cli("oracle '" + file + "'").status == 2);
    // the exact solver handles the same instance fine
    RunResult r = run_cli("distance '" + file + "'");
    REQUIRE(r.status == 0);
    REQUIRE(r.out == "12\n");
}

TEST_CASE("solver and oracle agree on generated instances") {
    for (int seed = 1; seed <= 5; ++seed) {
        RunResult gen = run_cli("gen --m 7 --seed " + std::to_string(seed));
        REQUIRE(gen.status == 0);
        std::string file = temp_file("gen", gen.out);
        RunResult solver = run_cli("distance '" + file + "'");
        RunResult oracle = run_cli("oracle '" + file + "'");
        REQUIRE(solver.status == 0);
        REQUIRE(oracle.status == 0);
        REQUIRE(solver.out == oracle.out);
    }
}

TEST_CASE("gen emits a parseable deterministic instance") {
    RunResult a = run_cli("gen --m 9 --seed 12");
    RunResult b = run_cli("gen --m 9 --seed 12");
    REQUIRE(a.status == 0);
    REQUIRE(a.out == b.out);
    Instance inst = parse_instance(a.out);
    REQUIRE(inst.initial.vertex_count() == 9);
    REQUIRE_FALSE(inst.budget.has_value());

    RunResult walk0 = run_cli("gen --m 8 --seed 3 --walk 0");
    Instance still = parse_instance(walk0.out);
    REQUIRE(still.initial == still.target);

    RunResult walk2 = run_cli("gen --m 8 --seed 3 --walk 2");
    Instance near = parse_instance(walk2.out);
    REQUIRE(exact_distance(near.initial, near.target).distance <= 2);
}

TEST_CASE("convert turns a tree pair into an instance") {
    std::string trees = temp_file("trees", "# a rotation pair\n((. .) .)\n(. (. .))\n");
    RunResult r = run_cli("convert --trees '" + trees + "'");
    REQUIRE(r.status == 0);
    REQUIRE(r.out == "m 4\ninit 0 2\nfinal 1 3\n");

    std::string file = temp_file("conv", r.out);
    RunResult d = run_cli("distance '" + file + "'");
    REQUIRE(d.out == "1\n");
}

TEST_CASE("convert rejects bad tree files") {
    std::string one = temp_file("one", "(. .)\n");
    REQUIRE(run_cli("convert --trees '" + one + "'").status == 2);
    std::string sizes = temp_file("sizes", "(. .)\n((. .) .)\n");
    REQUIRE(run_cli("convert --trees '" + sizes + "'").status == 2);
    std::string junk = temp_file("junk", "((. .) .)\nnot a tree\n");
    REQUIRE(run_cli("convert --trees '" + junk + "'").status == 2);
}

TEST_CASE("emitted sequences replay to the target") {
    std::string file = temp_file("zig", kZigzag);
    RunResult r = run_cli("solve '" + file + "' --emit-sequence");
    REQUIRE(r.status == 0);

    std::istringstream lines(r.out);
    std::string first;
    std::getline(lines, first);
    REQUIRE(first == "distance 4");

    Instance inst = parse_instance(kZigzag);
    Triangulation t = inst.initial;
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        int a, b, c, d;
        char arrow[3] = {0};
        REQUIRE(std::sscanf(line.c_str(), "%d %d %2s %d %d", &a, &b, arrow, &c, &d) == 5);
        REQUIRE(std::string(arrow) == "->");
        REQUIRE(t.flip(make_edge(a, b)).created == make_edge(c, d));
        ++count;
    }
    REQUIRE(count == 4);
    REQUIRE(t == inst.target);
}

TEST_CASE("dag export includes every flip and dependency") {
    std::string file = temp_file("zig", kZigzag);
    std::string dot = temp_file("dot", "");
    RunResult r = run_cli("solve '" + file + "' --emit-dag '" + dot + "'");
    REQUIRE(r.status == 0);
    std::string content = slurp(dot);
    REQUIRE(content.substr(0, 14) == "digraph D_F {\n");
    REQUIRE(content.find("0 [label=\"0: (") != std::string::npos);
    REQUIRE(content.find("3 [label=\"3: (") != std::string::npos);
    REQUIRE(content.find(" -> ") != std::string::npos);
    REQUIRE(content.substr(content.size() - 2) == "}\n");
}

TEST_CASE("dag export of a solved instance is empty") {
    Instance same{fan(5, 0), fan(5, 0), std::nullopt};
    std::string file = temp_file("same", serialize_instance(same));
    std::string dot = temp_file("dot", "");
    RunResult r = run_cli("solve '" + file + "' --emit-dag '" + dot + "'");
    REQUIRE(r.status == 0);
    REQUIRE(r.out == "distance 0\n");
    REQUIRE(slurp(dot) == "digraph D_F { }\n");
}

TEST_CASE("stats output carries the search counters") {
    std::string file = temp_file("zig", kZigzag);
    RunResult r = run_cli("solve '" + file + "' --stats");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("distance 4\n") == 0);
    REQUIRE(r.out.find("n=3\n") != std::string::npos);
    REQUIRE(r.out.find("base_cost=0\n") != std::string::npos);
    REQUIRE(r.out.find("tree_nodes=") != std::string::npos);
    REQUIRE(r.out.find("total_tree_nodes=") != std::string::npos);
    REQUIRE(r.out.find("subset_count=") != std::string::npos);
    REQUIRE(r.out.find("bound=") != std::string::npos);

    // identical reruns produce identical counters
    RunResult again = run_cli("solve '" + file + "' --stats");
    REQUIRE(again.out == r.out);
}

TEST_CASE("bench writes a csv battery") {
    std::string csv = temp_file("csv", "");
    RunResult r = run_cli("bench --m-range 5..6 --samples 3 --seed 1 --csv '" + csv + "'");
    REQUIRE(r.status == 0);
    std::string content = slurp(csv);
    std::istringstream lines(content);
    std::string header;
    std::getline(lines, header);
    REQUIRE(header == "m,n,k_answer,tree_nodes,tree_leaves,bound,time_ms,seed");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        int commas = 0;
        for (char ch : line)
            if (ch == ',') ++commas;
        REQUIRE(commas == 7);
        ++rows;
    }
    REQUIRE(rows == 6);
}

TEST_CASE("bench with an empty range leaves only the header") {
    std::string csv = temp_file("csv", "");
    RunResult r = run_cli("bench --m-range 7..6 --samples 3 --seed 1 --csv '" + csv + "'");
    REQUIRE(r.status == 0);
    REQUIRE(slurp(csv) == "m,n,k_answer,tree_nodes,tree_leaves,bound,time_ms,seed\n");
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run_cli("").status == 2);
    REQUIRE(run_cli("frobnicate").status == 2);
    REQUIRE(run_cli("solve").status == 2);
    REQUIRE(run_cli("solve /nonexistent/path").status == 2);
    REQUIRE(run_cli("bench --m-range 5..6 --samples 1 --seed 1").status == 2);
    REQUIRE(run_cli("gen --m 9").status == 2);
    REQUIRE(run_cli("bench --m-range nonsense --samples 1 --seed 1 --csv /tmp/x.csv").status == 2);

    std::string bad = temp_file("bad", "m 6\ninit 0 2\n");
    REQUIRE(run_cli("solve '" + bad + "'").status == 2);
}

TEST_CASE("help exits cleanly") {
    REQUIRE(run_cli("--help").status == 0);
    REQUIRE(run_cli("solve --help").status == 0);
}
