#pragma once

#include <random>

#include "flipdist/bintree.hpp"
#include "flipdist/io.hpp"
#include "flipdist/rng.hpp"

namespace flipdist {

// Remy's urn process: each step grafts a fresh leaf onto a uniformly chosen
// node of the tree so far, on a uniformly chosen side.  After s steps the
// shape is uniform over full binary trees with s internal nodes.
inline BinTree random_full_tree(int internal_nodes, std::mt19937_64& rng) {
    BinTree t;
    t.nodes.push_back({});
    t.root = 0;
    for (int step = 0; step < internal_nodes; ++step) {
        std::uint64_t pick = uniform_below(rng, 2 * t.nodes.size());
        int v = static_cast<int>(pick >> 1);
        // graft in place: the chosen node's content moves to a fresh slot,
        // its old slot becomes the new internal node, so the root index and
        // all parent links stay valid
        int moved = static_cast<int>(t.nodes.size());
        t.nodes.push_back(t.nodes[v]);
        int leaf = static_cast<int>(t.nodes.size());
        t.nodes.push_back({});
        t.nodes[v] = (pick & 1) ? BinTree::Node{leaf, moved} : BinTree::Node{moved, leaf};
    }
    return t;
}

// Uniform over all triangulations of the m-gon (Catalan-many).
inline Triangulation random_triangulation(int m, std::mt19937_64& rng) {
    return tree_to_triangulation(random_full_tree(m - 2, rng));
}

inline Triangulation random_walk(Triangulation t, int steps, std::mt19937_64& rng) {
    for (int i = 0; i < steps && t.diagonal_count() > 0; ++i) {
        std::vector<Edge> ds = t.sorted_diagonals();
        t.flip(ds[uniform_below(rng, ds.size())]);
    }
    return t;
}

// Two independent uniform triangulations.
inline Instance gen_uniform(int m, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed));
    Instance ins;
    ins.initial = random_triangulation(m, rng);
    ins.target = random_triangulation(m, rng);
    return ins;
}

// A uniform triangulation and a random-walk perturbation of it; steps caps
// the distance from above, handy for instances with a known-small answer.
inline Instance gen_walk(int m, std::uint64_t seed, int steps) {
    std::mt19937_64 rng(mix_seed(seed));
    Instance ins;
    ins.initial = random_triangulation(m, rng);
    ins.target = random_walk(ins.initial, steps, rng);
    return ins;
}

}  // namespace flipdist
