#pragma once

#include <deque>
#include <numeric>
#include <optional>
#include <vector>

#include "flipdist/flip_dag.hpp"
#include "flipdist/partition.hpp"
#include "flipdist/triangulation.hpp"

namespace flipdist {

// Greedily flips free diagonals of t1 until none remain, always testing the
// neighbours of each created edge next.  Flipping one free diagonal never
// spoils another, so the fixed point is unique and the instance is solvable
// this way iff the greedy run ends exactly at t2.  Returns the flips on
// success.  The lifo flag only changes the visiting order, never the result.
inline std::optional<std::vector<FlipRecord>> trivial_flip_sequence(
    Triangulation t1, const Triangulation& t2, bool lifo = false) {
    const int m = t1.vertex_count();
    std::vector<FlipRecord> out;
    std::deque<Edge> pending;
    for (Edge d : free_diagonals(t1, t2)) pending.push_back(d);
    while (!pending.empty()) {
        Edge e;
        if (lifo) {
            e = pending.back();
            pending.pop_back();
        } else {
            e = pending.front();
            pending.pop_front();
        }
        if (!t1.has_diagonal(e) || !is_free_diagonal(t1, t2, e)) continue;
        FlipRecord rec = t1.flip(e);
        out.push_back(rec);
        // only edges around the changed quad can have become free
        for (Edge nb : t1.neighbors(rec.created))
            if (!is_hull_edge(nb, m) && is_free_diagonal(t1, t2, nb))
                pending.push_back(nb);
    }
    if (t1 == t2) return out;
    return std::nullopt;
}

// Distance if the pair is solvable by free flips alone (then it equals the
// number of greedy flips), nullopt otherwise.
inline std::optional<int> is_trivial(const Triangulation& t1, const Triangulation& t2) {
    auto seq = trivial_flip_sequence(t1, t2);
    if (!seq) return std::nullopt;
    return static_cast<int>(seq->size());
}

// One irreducible piece of a normalized instance: no common diagonals, no
// free diagonals, at least one diagonal.  to_original maps its vertex
// labels back to the original polygon.
struct SubInstance {
    Triangulation initial;
    Triangulation target;
    std::vector<VertexId> to_original;
};

// Result of normalization: dist(t1, t2) = base_cost + sum of the subs'
// distances, and witness_prefix replays the base_cost free flips on t1.
struct NormalizedSet {
    int base_cost = 0;
    std::vector<SubInstance> subs;
    FlipSequence witness_prefix;
    int phi_total() const {
        int n = 0;
        for (const SubInstance& s : subs) n += s.initial.diagonal_count();
        return n;
    }
};

namespace detail {

// pick_largest flips the partition-cut choice; exposed so tests can check
// that the outcome's base_cost and total size do not depend on it.
inline NormalizedSet normalize_impl(const Triangulation& t1, const Triangulation& t2,
                                    bool pick_largest) {
    struct Item {
        Triangulation init;
        Triangulation tgt;
        std::vector<VertexId> to_orig;
    };
    NormalizedSet result;
    result.witness_prefix.start = t1;
    std::vector<VertexId> identity(t1.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    std::deque<Item> work;
    work.push_back(Item{t1, t2, std::move(identity)});
    while (!work.empty()) {
        Item item = std::move(work.front());
        work.pop_front();
        while (true) {
            std::vector<Edge> commons = common_diagonals(item.init, item.tgt);
            if (!commons.empty()) {
                Edge ce = pick_largest ? commons.back() : commons.front();
                Partition p = partition(item.init, item.tgt, PairSet{}, ce);
                auto compose = [&](const std::vector<VertexId>& to_parent) {
                    std::vector<VertexId> v(to_parent.size());
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] = item.to_orig[to_parent[i]];
                    return v;
                };
                work.push_back(Item{std::move(p.a.initial), std::move(p.a.target),
                                    compose(p.a.to_parent)});
                work.push_back(Item{std::move(p.b.initial), std::move(p.b.target),
                                    compose(p.b.to_parent)});
                break;
            }
            std::vector<Edge> frees = free_diagonals(item.init, item.tgt);
            if (!frees.empty()) {
                FlipRecord rec = item.init.flip(frees.front());
                ++result.base_cost;
                result.witness_prefix.flips.push_back(map_record(rec, item.to_orig));
                continue;  // the created edge is common, so the next round splits
            }
            if (item.init.diagonal_count() > 0)
                result.subs.push_back(SubInstance{std::move(item.init), std::move(item.tgt),
                                                  std::move(item.to_orig)});
            break;
        }
    }
    return result;
}

}  // namespace detail

// Splits off everything cheap: partitions along common diagonals, flips free
// diagonals (each is surely part of some shortest sequence), recursively,
// until only irreducible sub-instances remain.
inline NormalizedSet normalize(const Triangulation& t1, const Triangulation& t2) {
    return detail::normalize_impl(t1, t2, false);
}

}  // namespace flipdist
