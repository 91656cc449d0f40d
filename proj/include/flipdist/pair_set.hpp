#pragma once

#include <algorithm>
#include <vector>

#include "flipdist/edge.hpp"

namespace flipdist {

// An unordered pair of edges, stored canonically (first < second).
struct EdgePair {
    Edge first;
    Edge second;

    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

inline EdgePair make_edge_pair(Edge x, Edge y) {
    return x < y ? EdgePair{x, y} : EdgePair{y, x};
}

// A small deduplicated collection of edge pairs.  The search branches on at
// most three choices per pair, so sizes stay tiny and linear scans win over
// anything fancier.
class PairSet {
public:
    void add(Edge x, Edge y) {
        EdgePair p = make_edge_pair(x, y);
        if (std::find(pairs_.begin(), pairs_.end(), p) == pairs_.end())
            pairs_.push_back(p);
    }

    void remove_containing(Edge e) {
        std::erase_if(pairs_, [e](const EdgePair& p) {
            return p.first == e || p.second == e;
        });
    }

    bool member_edge(Edge e) const {
        for (const EdgePair& p : pairs_)
            if (p.first == e || p.second == e) return true;
        return false;
    }

    const std::vector<EdgePair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

private:
    std::vector<EdgePair> pairs_;
};

}  // namespace flipdist
