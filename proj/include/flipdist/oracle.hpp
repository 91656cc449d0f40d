#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "flipdist/bintree.hpp"
#include "flipdist/triangulation.hpp"

namespace flipdist {

// F_0 = 0, F_1 = 1, ...; F_93 is the largest value fitting in 64 bits.
inline std::uint64_t fibonacci(int n) {
    if (n < 0 || n > 93) throw std::invalid_argument("fibonacci argument out of range");
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

namespace detail {

// Compact hashable key for a triangulation with m <= 14: one byte per
// diagonal, diagonals sorted.
inline std::string state_key(const std::vector<Edge>& sorted_diags) {
    std::string key;
    key.reserve(sorted_diags.size());
    for (Edge d : sorted_diags)
        key.push_back(static_cast<char>(d.a * 16 + d.b));
    return key;
}

inline void check_oracle_size(int m) {
    if (m > 14)
        throw std::invalid_argument("exhaustive oracle is limited to m <= 14");
}

}  // namespace detail

// All triangulations of the m-gon as sorted diagonal lists, in ascending
// lexicographic order.  There are Catalan(m-2) of them.
inline std::vector<std::vector<Edge>> enumerate_triangulations(int m) {
    if (m < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    detail::check_oracle_size(m);
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> acc;
    // Triangulate the region lo..hi, then run the continuation: the apex of
    // the triangle resting on the chord (lo,hi) ranges over the vertices
    // strictly between, splitting the region in two.
    std::function<void(int, int, const std::function<void()>&)> rec =
        [&](int lo, int hi, const std::function<void()>& k) {
            if (hi - lo < 2) {
                k();
                return;
            }
            for (int v = lo + 1; v < hi; ++v) {
                std::size_t mark = acc.size();
                Edge lchord{lo, v}, rchord{v, hi};
                if (is_diagonal_shape(lchord, m)) acc.push_back(lchord);
                if (is_diagonal_shape(rchord, m)) acc.push_back(rchord);
                rec(lo, v, [&] { rec(v, hi, k); });
                acc.resize(mark);
            }
        };
    rec(0, m - 1, [&] {
        auto diags = acc;
        std::sort(diags.begin(), diags.end());
        out.push_back(std::move(diags));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Shortest flip path length by breadth-first search over the flip graph.
inline int bfs_distance(const Triangulation& t1, const Triangulation& t2) {
    detail::check_oracle_size(t1.vertex_count());
    if (t1.vertex_count() != t2.vertex_count())
        throw std::invalid_argument("triangulations must share a polygon");
    const int m = t1.vertex_count();
    std::string goal = detail::state_key(t2.sorted_diagonals());
    std::unordered_map<std::string, int> dist;
    std::deque<std::vector<Edge>> queue;
    auto start = t1.sorted_diagonals();
    dist[detail::state_key(start)] = 0;
    if (detail::state_key(start) == goal) return 0;
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        std::vector<Edge> diags = std::move(queue.front());
        queue.pop_front();
        int d = dist[detail::state_key(diags)];
        Triangulation t = Triangulation::validated(m, diags);
        for (Edge e : diags) {
            FlipRecord r = t.flip(e);
            auto next = t.sorted_diagonals();
            std::string key = detail::state_key(next);
            if (!dist.count(key)) {
                if (key == goal) return d + 1;
                dist[key] = d + 1;
                queue.push_back(std::move(next));
            }
            t.unflip(r);
        }
    }
    throw std::logic_error("flip graph must be connected");
}

// Distances from one source to every triangulation, keyed by state_key.
inline std::unordered_map<std::string, int> bfs_distance_map(const Triangulation& src) {
    detail::check_oracle_size(src.vertex_count());
    const int m = src.vertex_count();
    std::unordered_map<std::string, int> dist;
    std::deque<std::vector<Edge>> queue;
    auto start = src.sorted_diagonals();
    dist[detail::state_key(start)] = 0;
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        std::vector<Edge> diags = std::move(queue.front());
        queue.pop_front();
        int d = dist[detail::state_key(diags)];
        Triangulation t = Triangulation::validated(m, diags);
        for (Edge e : diags) {
            FlipRecord r = t.flip(e);
            auto next = t.sorted_diagonals();
            std::string key = detail::state_key(next);
            if (!dist.count(key)) {
                dist[key] = d + 1;
                queue.push_back(std::move(next));
            }
            t.unflip(r);
        }
    }
    return dist;
}

namespace detail {

struct MatchStates {
    std::uint64_t unmatched;  // matchings of the subtree leaving the root unmatched
    std::uint64_t total;
};

inline MatchStates matchings_states(const BinTree& t, int node) {
    std::uint64_t unmatched = 1;
    std::uint64_t matched = 0;
    for (int child : {t.nodes[node].left, t.nodes[node].right}) {
        if (child < 0) continue;
        MatchStates c = matchings_states(t, child);
        matched = matched * c.total + unmatched * c.unmatched;
        unmatched *= c.total;
    }
    return MatchStates{unmatched, unmatched + matched};
}

}  // namespace detail

// Number of matchings (including the empty one) in the tree, by a
// two-state DP over the parent-child edges.
inline std::uint64_t count_matchings_dp(const BinTree& t) {
    if (t.nodes.empty()) return 1;
    return detail::matchings_states(t, t.root).total;
}

}  // namespace flipdist
