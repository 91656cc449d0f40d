#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "flipdist/rng.hpp"
#include "flipdist/triangulation.hpp"

namespace flipdist {

// An executable flip sequence: replaying `flips` in order on `start` must
// succeed, each flip creating exactly its recorded edge.
struct FlipSequence {
    Triangulation start;
    std::vector<FlipRecord> flips;
};

// Applies the sequence and returns the end triangulation; throws if a flip
// is inapplicable or creates something other than its recorded edge.
inline Triangulation replay(const FlipSequence& seq) {
    Triangulation t = seq.start;
    for (const FlipRecord& r : seq.flips) {
        if (!t.has_diagonal(r.underlying))
            throw std::invalid_argument("sequence flips a non-diagonal");
        FlipRecord done = t.flip(r.underlying);
        if (done.created != r.created)
            throw std::invalid_argument("sequence records the wrong created edge");
    }
    return t;
}

// Dependency DAG over the flips of a sequence: arc (i,j) with i < j when
// flip i's created edge is still present just before flip j and touches
// (equals or neighbors) flip j's underlying edge.  Every topological order
// of this DAG is itself a valid flip sequence with the same endpoints.
struct FlipDag {
    int node_count = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted, each with first < second
};

inline FlipDag build_dag(const FlipSequence& seq) {
    FlipDag dag;
    dag.node_count = static_cast<int>(seq.flips.size());
    Triangulation t = seq.start;
    for (int j = 0; j < dag.node_count; ++j) {
        Edge uj = seq.flips[j].underlying;
        if (!t.has_diagonal(uj))
            throw std::invalid_argument("sequence flips a non-diagonal");
        for (int i = 0; i < j; ++i) {
            Edge ci = seq.flips[i].created;
            if (!t.has_diagonal(ci)) continue;
            if (ci == uj || t.neighbors(uj).contains(ci))
                dag.arcs.emplace_back(i, j);
        }
        FlipRecord done = t.flip(uj);
        if (done.created != seq.flips[j].created)
            throw std::invalid_argument("sequence records the wrong created edge");
    }
    std::sort(dag.arcs.begin(), dag.arcs.end());
    return dag;
}

// Graphviz rendering, deterministic: nodes in index order, arcs sorted.
inline std::string dot_export(const FlipDag& dag, const FlipSequence& seq) {
    if (dag.node_count == 0) return "digraph D_F { }\n";
    std::ostringstream out;
    out << "digraph D_F {\n";
    for (int i = 0; i < dag.node_count; ++i) {
        const FlipRecord& r = seq.flips[i];
        out << "  " << i << " [label=\"" << i << ": (" << r.underlying.a << ','
            << r.underlying.b << ")->(" << r.created.a << ',' << r.created.b << ")\"];\n";
    }
    for (auto [i, j] : dag.arcs) out << "  " << i << " -> " << j << ";\n";
    out << "}\n";
    return out.str();
}

// Draws `samples` random topological orders of the sequence's DAG and
// checks each one: it must replay (every flip creating its recorded edge),
// land on the same end triangulation, and rebuild the same DAG up to the
// index relabeling.
inline bool topo_replay_check(const FlipSequence& seq, int samples, std::uint64_t seed) {
    const FlipDag dag = build_dag(seq);
    const Triangulation end = replay(seq);
    const int r = dag.node_count;
    std::vector<std::vector<int>> succ(r);
    std::vector<int> indeg_base(r, 0);
    for (auto [i, j] : dag.arcs) {
        succ[i].push_back(j);
        ++indeg_base[j];
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<int> indeg = indeg_base;
        std::vector<int> avail;
        for (int i = 0; i < r; ++i)
            if (indeg[i] == 0) avail.push_back(i);
        std::vector<int> order;  // position -> original flip index
        Triangulation t = seq.start;
        while (!avail.empty()) {
            std::size_t pick = static_cast<std::size_t>(uniform_below(rng, avail.size()));
            int i = avail[pick];
            avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
            order.push_back(i);
            if (!t.has_diagonal(seq.flips[i].underlying)) return false;
            FlipRecord done = t.flip(seq.flips[i].underlying);
            if (done.created != seq.flips[i].created) return false;
            for (int j : succ[i])
                if (--indeg[j] == 0) avail.push_back(j);
        }
        if (static_cast<int>(order.size()) != r) return false;
        if (!(t == end)) return false;
        FlipSequence perm{seq.start, {}};
        for (int i : order) perm.flips.push_back(seq.flips[i]);
        FlipDag rebuilt = build_dag(perm);
        std::set<std::pair<int, int>> mapped;
        for (auto [p, q] : rebuilt.arcs) mapped.emplace(order[p], order[q]);
        std::set<std::pair<int, int>> original(dag.arcs.begin(), dag.arcs.end());
        if (mapped != original) return false;
    }
    return true;
}

}  // namespace flipdist
