#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "flipdist/bintree.hpp"
#include "flipdist/gen.hpp"
#include "flipdist/oracle.hpp"
#include "helpers.hpp"

using namespace flipdist;
using testutil::E;
using testutil::fan;
using testutil::tri;

TEST_CASE("fibonacci values and guard") {
    REQUIRE(fibonacci(0) == 0);
    REQUIRE(fibonacci(1) == 1);
    REQUIRE(fibonacci(2) == 1);
    REQUIRE(fibonacci(5) == 5);
    REQUIRE(fibonacci(10) == 55);
    REQUIRE(fibonacci(93) == 12200160415121876738ULL);
    REQUIRE_THROWS_AS(fibonacci(-1), std::invalid_argument);
    REQUIRE_THROWS_AS(fibonacci(94), std::invalid_argument);
}

TEST_CASE("fibonacci addition law") {
    // F(a+b) = F(a+1) F(b) + F(a) F(b-1), a sharp consistency check on the
    // whole table up to index 40.
    for (int a = 1; a <= 20; ++a)
        for (int b = 1; b <= 20; ++b)
            REQUIRE(fibonacci(a + b) ==
                    fibonacci(a + 1) * fibonacci(b) + fibonacci(a) * fibonacci(b - 1));
}

TEST_CASE("enumeration counts match the Catalan numbers") {
    const std::uint64_t want[] = {2, 5, 14, 42, 132, 429, 1430};
    for (int m = 4; m <= 10; ++m) {
        auto all = enumerate_triangulations(m);
        REQUIRE(all.size() == want[m - 4]);
        // Each entry is sorted and the list is strictly increasing, so the
        // enumeration has no duplicates and a stable order.
        for (std::size_t i = 0; i < all.size(); ++i) {
            REQUIRE(std::is_sorted(all[i].begin(), all[i].end()));
            if (i > 0) REQUIRE(all[i - 1] < all[i]);
            REQUIRE_NOTHROW(tri(m, all[i]));
        }
    }
    REQUIRE(enumerate_triangulations(3).size() == 1);
    REQUIRE(enumerate_triangulations(3)[0].empty());
    REQUIRE_THROWS_AS(enumerate_triangulations(2), std::invalid_argument);
    REQUIRE_THROWS_AS(enumerate_triangulations(15), std::invalid_argument);
}

TEST_CASE("breadth-first distances on small polygons") {
    REQUIRE(bfs_distance(tri(4, {E(0, 2)}), tri(4, {E(1, 3)})) == 1);
    REQUIRE(bfs_distance(tri(4, {E(0, 2)}), tri(4, {E(0, 2)})) == 0);
    REQUIRE(bfs_distance(tri(6, {E(0, 2), E(2, 4), E(0, 4)}),
                         tri(6, {E(1, 3), E(3, 5), E(1, 5)})) == 4);
    REQUIRE(bfs_distance(fan(6, 0), fan(6, 1)) == 3);
    REQUIRE_THROWS_AS(bfs_distance(fan(15, 0), fan(15, 1)), std::invalid_argument);
    REQUIRE_THROWS_AS(bfs_distance(fan(6, 0), fan(7, 0)), std::invalid_argument);
}

TEST_CASE("breadth-first distance is symmetric") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 30; ++rep) {
        int m = 5 + static_cast<int>(rng() % 4);
        Instance inst = gen_uniform(m, rng());
        REQUIRE(bfs_distance(inst.initial, inst.target) ==
                bfs_distance(inst.target, inst.initial));
    }
}

TEST_CASE("the flip graph is connected") {
    auto dist = bfs_distance_map(fan(7, 0));
    REQUIRE(dist.size() == 42);
    int diameter = 0;
    for (const auto& [key, d] : dist) diameter = std::max(diameter, d);
    // Eccentricity of a fan is m-3: every triangulation is reachable by
    // flipping its non-fan diagonals one by one.
    REQUIRE(diameter == 4);
}

namespace {

// Count matchings of a rooted tree by brute force over all edge subsets.
std::uint64_t matchings_brute(const BinTree& t) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
        if (t.nodes[v].left >= 0) edges.emplace_back(v, t.nodes[v].left);
        if (t.nodes[v].right >= 0) edges.emplace_back(v, t.nodes[v].right);
    }
    REQUIRE(edges.size() < 30);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << edges.size()); ++mask) {
        std::set<int> used;
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            if (!(mask & (1ULL << i))) continue;
            ok = used.insert(edges[i].first).second && used.insert(edges[i].second).second;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("matching counts on hand-built trees") {
    BinTree single;
    single.nodes.resize(1);
    single.root = 0;
    REQUIRE(count_matchings_dp(single) == 1);

    BinTree pair;
    pair.nodes.resize(2);
    pair.nodes[0].left = 1;
    pair.root = 0;
    REQUIRE(count_matchings_dp(pair) == 2);

    // Path on four nodes: 5 matchings, the Fibonacci pattern.
    BinTree path;
    path.nodes.resize(4);
    path.nodes[0].left = 1;
    path.nodes[1].left = 2;
    path.nodes[2].left = 3;
    path.root = 0;
    REQUIRE(count_matchings_dp(path) == 5);
}

TEST_CASE("matching dp agrees with brute force on dual trees") {
    for (int m = 4; m <= 8; ++m) {
        for (const auto& ds : enumerate_triangulations(m)) {
            DualTree dual = dual_tree(tri(m, ds));
            REQUIRE(count_matchings_dp(dual.tree) == matchings_brute(dual.tree));
        }
    }
}

TEST_CASE("matching dp agrees with brute force on random full trees") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        BinTree t = random_full_tree(1 + static_cast<int>(rng() % 8), rng);
        REQUIRE(count_matchings_dp(t) == matchings_brute(t));
    }
}

TEST_CASE("matchings of an n-node tree never exceed fib(n+1)") {
    for (int m = 4; m <= 9; ++m) {
        for (const auto& ds : enumerate_triangulations(m)) {
            BinTree t = dual_tree(tri(m, ds)).tree;
            int n = static_cast<int>(t.nodes.size());
            REQUIRE(count_matchings_dp(t) <= fibonacci(n + 1));
        }
    }
}
