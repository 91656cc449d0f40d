#pragma once

#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "flipdist/gen.hpp"
#include "flipdist/oracle.hpp"
#include "flipdist/solver.hpp"

namespace flipdist {

// Upper bound on accepting-run search leaves for an irreducible instance
// with n diagonals solved with budget k: F_{n+1} * 9^{k-n}.  Summing it
// over the pieces of a normalized instance stays below the same formula
// taken at the totals, so one row-level number covers the whole solve.
inline std::uint64_t leaf_bound(int n, int k) {
    if (k < n) throw std::invalid_argument("budget below diagonal count");
    unsigned __int128 v = fibonacci(n + 1);
    for (int i = 0; i < k - n; ++i) {
        v *= 9;
        if (v > static_cast<unsigned __int128>(~0ULL))
            throw std::overflow_error("leaf bound exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

struct BenchRow {
    int m = 0;         // polygon size
    int n = 0;         // diagonals left after normalization
    int k_answer = 0;  // exact distance
    std::uint64_t tree_nodes = 0;   // accepting runs only
    std::uint64_t tree_leaves = 0;  // accepting runs only
    std::uint64_t bound = 0;        // leaf_bound(n, k_answer - base_cost)
    double time_ms = 0.0;
    std::uint64_t seed = 0;  // regenerate with: gen --m <m> --seed <seed>
};

inline const char* bench_csv_header() {
    return "m,n,k_answer,tree_nodes,tree_leaves,bound,time_ms,seed";
}

inline std::vector<BenchRow> run_bench(int m_lo, int m_hi, int samples, std::uint64_t seed,
                                       const SolverOptions& opt = {}) {
    std::vector<BenchRow> rows;
    if (m_hi < m_lo) return rows;  // empty range: no rows, caller still gets a header
    if (m_lo < 3) throw std::invalid_argument("polygon sizes start at 3");
    std::uint64_t idx = 0;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int s = 0; s < samples; ++s, ++idx) {
            std::uint64_t inst_seed =
                mix_seed(seed ^ (static_cast<std::uint64_t>(m) << 40) ^ idx);
            Instance ins = gen_uniform(m, inst_seed);
            auto t0 = std::chrono::steady_clock::now();
            SolveResult res = exact_distance(ins.initial, ins.target, opt);
            auto t1 = std::chrono::steady_clock::now();
            if (res.distance < 0) throw std::logic_error("unbounded solve returned no answer");
            BenchRow row;
            row.m = m;
            row.n = res.n;
            row.k_answer = res.distance;
            row.tree_nodes = res.accepted.tree_nodes;
            row.tree_leaves = res.accepted.tree_leaves;
            row.bound = leaf_bound(row.n, res.distance - res.base_cost);
            row.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            row.seed = inst_seed;
            rows.push_back(row);
        }
    }
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << bench_csv_header() << '\n';
    for (const BenchRow& r : rows)
        os << r.m << ',' << r.n << ',' << r.k_answer << ',' << r.tree_nodes << ','
           << r.tree_leaves << ',' << r.bound << ',' << std::fixed << std::setprecision(3)
           << r.time_ms << ',' << r.seed << '\n';
}

}  // namespace flipdist
