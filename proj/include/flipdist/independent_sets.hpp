#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flipdist/triangulation.hpp"

namespace flipdist {

namespace detail {

template <typename Visit>
bool independent_subsets_rec(std::span<const Edge> cands,
                             const std::vector<std::vector<int>>& later_nbrs,
                             std::vector<int>& blocked, std::vector<Edge>& chosen,
                             std::size_t i, Visit&& visit) {
    if (i == cands.size())
        return visit(std::span<const Edge>(chosen.data(), chosen.size()));
    if (independent_subsets_rec(cands, later_nbrs, blocked, chosen, i + 1, visit))
        return true;
    if (blocked[i] == 0) {
        chosen.push_back(cands[i]);
        for (int j : later_nbrs[i]) ++blocked[j];
        bool stop = independent_subsets_rec(cands, later_nbrs, blocked, chosen, i + 1, visit);
        for (int j : later_nbrs[i]) --blocked[j];
        chosen.pop_back();
        if (stop) return true;
    }
    return false;
}

}  // namespace detail

// Enumerates every subset of the triangulation's diagonals in which no two
// members share a triangle.  Subsets arrive sorted ascending; for each
// candidate the excluding branch is explored before the including one, so
// the empty set comes first.  The visitor returns true to stop the walk
// early; the function returns true iff a visitor did so.
template <typename Visit>
bool for_each_independent_subset(const Triangulation& t, Visit&& visit) {
    std::vector<Edge> cands = t.sorted_diagonals();
    const std::size_t n = cands.size();
    std::vector<std::vector<int>> later_nbrs(n);
    for (std::size_t i = 0; i < n; ++i) {
        EdgeNeighborhood nb = t.neighbors(cands[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            if (nb.contains(cands[j])) later_nbrs[i].push_back(static_cast<int>(j));
    }
    std::vector<int> blocked(n, 0);
    std::vector<Edge> chosen;
    chosen.reserve(n);
    return detail::independent_subsets_rec(std::span<const Edge>(cands), later_nbrs,
                                           blocked, chosen, 0, visit);
}

inline std::vector<std::vector<Edge>> collect_independent_subsets(const Triangulation& t) {
    std::vector<std::vector<Edge>> out;
    for_each_independent_subset(t, [&](std::span<const Edge> s) {
        out.emplace_back(s.begin(), s.end());
        return false;
    });
    return out;
}

inline std::uint64_t count_independent_subsets(const Triangulation& t) {
    std::uint64_t total = 0;
    for_each_independent_subset(t, [&](std::span<const Edge>) {
        ++total;
        return false;
    });
    return total;
}

}  // namespace flipdist
