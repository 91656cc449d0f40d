#pragma once

#include <vector>

#include "flipdist/triangulation.hpp"

namespace testutil {

inline flipdist::Edge E(int a, int b) { return flipdist::make_edge(a, b); }

inline flipdist::Triangulation tri(int m, const std::vector<flipdist::Edge>& ds) {
    return flipdist::Triangulation::validated(m, ds);
}

// The fan with every diagonal incident on vertex c.
inline flipdist::Triangulation fan(int m, int c) {
    std::vector<flipdist::Edge> ds;
    for (int v = 0; v < m; ++v) {
        if (v == c) continue;
        flipdist::Edge e = flipdist::make_edge(c, v);
        if (flipdist::is_diagonal_shape(e, m)) ds.push_back(e);
    }
    return flipdist::Triangulation::validated(m, ds);
}

}  // namespace testutil
