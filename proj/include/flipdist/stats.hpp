#pragma once

#include <cstdint>

namespace flipdist {

// Counters for one search run.  A "node" is one recursive search call;
// a "leaf" is a call that spawned no further calls.
struct SearchStats {
    std::uint64_t tree_nodes = 0;
    std::uint64_t tree_leaves = 0;
    std::uint64_t flips_performed = 0;
    std::uint64_t partitions = 0;
    std::uint64_t subset_count = 0;

    SearchStats& operator+=(const SearchStats& o) {
        tree_nodes += o.tree_nodes;
        tree_leaves += o.tree_leaves;
        flips_performed += o.flips_performed;
        partitions += o.partitions;
        subset_count += o.subset_count;
        return *this;
    }
};

}  // namespace flipdist
