#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flipdist/flip_dag.hpp"
#include "flipdist/independent_sets.hpp"
#include "flipdist/normalize.hpp"
#include "flipdist/pair_set.hpp"
#include "flipdist/partition.hpp"
#include "flipdist/stats.hpp"
#include "flipdist/triangulation.hpp"

namespace flipdist {

struct SolverOptions {
    // Upper end of the per-piece budget search; -1 means twice the piece's
    // diagonal count, which always suffices.
    int max_cap = -1;
    // Re-verify structural invariants of the search at every step (costly).
    bool check_invariants = false;
};

namespace detail {

// The two pairs flanking a created edge: the other two edges of each of its
// triangles.  These are exactly the edges whose quadrilateral the flip
// changed, so any diagonal that just became free is in one of them.
inline void add_flank_pairs(const Triangulation& t, Edge created, PairSet& s) {
    const EdgeTriangles& inc = t.incident_triangles(created);
    assert(inc.count == 2);
    for (int i = 0; i < inc.count; ++i) {
        Edge other[2];
        int n = 0;
        for (Edge e : inc.tri[i].edges())
            if (e != created) other[n++] = e;
        assert(n == 2);
        s.add(other[0], other[1]);
    }
}

inline std::vector<VertexId> compose_labels(const std::vector<VertexId>& outer,
                                            const std::vector<VertexId>& inner) {
    std::vector<VertexId> v(inner.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = outer[inner[i]];
    return v;
}

// Walks the per-pair branching: for each pair in order, take neither edge,
// the first, or the second, skipping an edge that is gone, already chosen,
// or adjacent to a chosen one.  Each complete non-empty choice arrives as a
// sorted vector; the visitor returns true to stop.
template <typename Visit>
bool for_each_pair_choice_set(const Triangulation& cur, const PairSet& s, Visit&& visit) {
    std::vector<Edge> chosen;
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == s.size()) {
            if (chosen.empty()) return false;
            std::vector<Edge> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            return visit(sorted);
        }
        if (self(self, idx + 1)) return true;
        const EdgePair& p = s.pairs()[idx];
        for (Edge x : {p.first, p.second}) {
            if (!cur.has_diagonal(x)) continue;
            if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
            bool clashes = false;
            for (Edge y : chosen)
                if (!independent(cur, x, y)) {
                    clashes = true;
                    break;
                }
            if (clashes) continue;
            chosen.push_back(x);
            bool stop = self(self, idx + 1);
            chosen.pop_back();
            if (stop) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// Test hook: the choice sets the branching above would deliver, in order.
inline std::vector<std::vector<Edge>> pair_branch_sets(const Triangulation& cur,
                                                       const PairSet& s) {
    std::vector<std::vector<Edge>> out;
    for_each_pair_choice_set(cur, s, [&](const std::vector<Edge>& I) {
        out.push_back(I);
        return false;
    });
    return out;
}

}  // namespace detail

// One branch-and-bound search over a working triangulation.  All mutation is
// rolled back on every failing return, so a context can be reused across
// budgets; on acceptance the recorded flips (in original-polygon labels) are
// left in *witness.  Sub-searches on polygon pieces run in child contexts
// that share stats and witness.
class SearchContext {
public:
    SearchContext(Triangulation cur, const Triangulation* target,
                  std::vector<VertexId> to_original, SearchStats* stats,
                  std::vector<FlipRecord>* witness, const SolverOptions* opt)
        : cur_(std::move(cur)), target_(target), to_original_(std::move(to_original)),
          stats_(stats), witness_(witness), opt_(opt) {}

    const Triangulation& current() const { return cur_; }

    // Decision entry point for an irreducible instance (no common and no
    // free diagonals; throws otherwise): is the flip distance at most k?
    bool flip_dist(int k) {
        if (!common_diagonals(cur_, *target_).empty())
            throw std::logic_error("flip_dist requires no common diagonals");
        if (!free_diagonals(cur_, *target_).empty())
            throw std::logic_error("flip_dist requires no free diagonals");
        return wrapped([&] { return flip_dist_impl(k); });
    }

    // Commit to flipping the independent set I (sorted), then search on.
    bool flip_dist_i(int k, const std::vector<Edge>& I) {
        return wrapped([&] { return flip_dist_i_impl(k, I); });
    }

    // Search guided by the pair set S of recently disturbed edges.
    bool flip_dist_s(int k, PairSet s) {
        return wrapped([&] { return flip_dist_s_impl(k, std::move(s)); });
    }

private:
    template <typename Impl>
    bool wrapped(Impl&& impl) {
        ++stats_->tree_nodes;
        const std::uint64_t nodes_at_entry = stats_->tree_nodes;
        const std::size_t mark = witness_->size();
        bool ok = impl();
        if (stats_->tree_nodes == nodes_at_entry) ++stats_->tree_leaves;
        if (!ok) witness_->resize(mark);
        return ok;
    }

    bool flip_dist_impl(int k) {
        const int phi = cur_.diagonal_count();
        if (phi > k) return false;
        if (phi == 0) return true;
        return for_each_independent_subset(cur_, [&](std::span<const Edge> I) {
            if (I.empty()) return false;
            ++stats_->subset_count;
            return flip_dist_i(k, std::vector<Edge>(I.begin(), I.end()));
        });
    }

    bool flip_dist_i_impl(int k, const std::vector<Edge>& I) {
        const int isize = static_cast<int>(I.size());
        const int phi = cur_.diagonal_count();
        if (phi > k - isize) return false;
        if (phi == 0) return true;
        // Members of I are pairwise independent: their quadrilaterals are
        // edge-disjoint, so the flips commute and the flank pairs of each
        // created edge are stable under the later flips.
        std::vector<FlipRecord> done;
        done.reserve(I.size());
        PairSet s;
        for (Edge e : I) {
            FlipRecord rec = cur_.flip(e);
            ++stats_->flips_performed;
            witness_->push_back(map_record(rec, to_original_));
            detail::add_flank_pairs(cur_, rec.created, s);
            done.push_back(rec);
        }
        bool ok = flip_dist_s(k - isize, std::move(s));
        if (!ok)
            for (auto it = done.rbegin(); it != done.rend(); ++it) cur_.unflip(*it);
        return ok;
    }

    bool flip_dist_s_impl(int k, PairSet s) {
        const int phi = cur_.diagonal_count();
        if (phi > k) return false;
        if (phi == 0) return true;
        if (opt_->check_invariants) check_s_invariants(s);

        std::vector<Edge> frees = free_diagonals(cur_, *target_);
        if (!frees.empty()) return step_free(k, std::move(s), frees.front());

        // No free diagonal: every shortest sequence starts by flipping some
        // edge of some tracked pair, and no pair contributes both edges.
        return detail::for_each_pair_choice_set(cur_, s, [&](const std::vector<Edge>& I) {
            ++stats_->subset_count;
            return flip_dist_i(k, I);
        });
    }

    // A free diagonal exists, so flipping it first is optimal: flip it, cut
    // the polygon along the created (now shared) edge, and solve the two
    // pieces with the leftover budget split between them.
    bool step_free(int k, PairSet s, Edge e) {
        s.remove_containing(e);
        FlipRecord rec = cur_.flip(e);
        ++stats_->flips_performed;
        witness_->push_back(map_record(rec, to_original_));
        detail::add_flank_pairs(cur_, rec.created, s);

        Partition p = partition(cur_, *target_, s, rec.created);
        ++stats_->partitions;
        const int n1 = p.a.initial.diagonal_count();
        const int n2 = p.b.initial.diagonal_count();
        std::vector<VertexId> map_a = detail::compose_labels(to_original_, p.a.to_parent);
        std::vector<VertexId> map_b = detail::compose_labels(to_original_, p.b.to_parent);

        auto solve_b = [&](int kb) -> bool {
            assert(kb >= n2);
            if (auto greedy = trivial_flip_sequence(p.b.initial, p.b.target)) {
                stats_->flips_performed += greedy->size();
                for (const FlipRecord& r : *greedy)
                    witness_->push_back(map_record(r, map_b));
                return true;
            }
            SearchContext ctx(std::move(p.b.initial), &p.b.target, std::move(map_b),
                              stats_, witness_, opt_);
            return ctx.flip_dist_s(kb, std::move(p.b.pairs));
        };

        bool ok = false;
        if (auto greedy = trivial_flip_sequence(p.a.initial, p.a.target)) {
            // A piece solvable by free flips alone costs exactly n1.
            assert(static_cast<int>(greedy->size()) == n1);
            stats_->flips_performed += greedy->size();
            for (const FlipRecord& r : *greedy)
                witness_->push_back(map_record(r, map_a));
            ok = solve_b(k - 1 - n1);
        } else {
            // The first budget that the piece accepts is its exact distance,
            // so a larger share could never rescue a failing second piece.
            SearchContext ctx(std::move(p.a.initial), &p.a.target, std::move(map_a),
                              stats_, witness_, opt_);
            const int hi = std::min(k - 1 - n2, 2 * n1);
            for (int k1 = n1 + 1; k1 <= hi; ++k1) {
                if (ctx.flip_dist_s(k1, p.a.pairs)) {
                    ok = solve_b(k - 1 - k1);
                    break;
                }
            }
        }
        if (!ok) cur_.unflip(rec);
        return ok;
    }

    // Costly sanity checks, enabled by SolverOptions::check_invariants:
    // the working state shares nothing with the target, and every free
    // diagonal is covered by a tracked pair (what makes step 2 complete).
    void check_s_invariants(const PairSet& s) const {
        if (!common_diagonals(cur_, *target_).empty())
            throw std::logic_error("invariant broken: common diagonal inside search");
        for (Edge f : free_diagonals(cur_, *target_))
            if (!s.member_edge(f))
                throw std::logic_error("invariant broken: free diagonal not tracked");
    }

    Triangulation cur_;
    const Triangulation* target_;
    std::vector<VertexId> to_original_;
    SearchStats* stats_;
    std::vector<FlipRecord>* witness_;
    const SolverOptions* opt_;
};

// Per-piece outcome of a full solve.
struct SubRun {
    int m = 0;         // piece polygon size
    int phi = 0;       // piece diagonal count
    int distance = 0;  // exact flip distance of the piece
    SearchStats accepted;  // the accepting run only
    SearchStats total;     // all budgets tried for this piece
};

struct SolveResult {
    // Exact flip distance, or -1 when the limit or budget cap cut the
    // search off before an answer (for a decision query: the answer is no).
    int distance = -1;
    int base_cost = 0;  // forced flips spent during normalization
    int n = 0;          // diagonals left across all pieces after normalization
    std::vector<SubRun> sub_runs;
    // Replayable shortest sequence from the initial triangulation to the
    // target; meaningful only when distance >= 0.
    FlipSequence witness;
    SearchStats accepted;  // accepting runs across pieces
    SearchStats total;     // including failed budgets
};

// Computes the exact flip distance if it is at most `limit`, else reports
// failure; limit -1 means unlimited.  Works piece by piece: normalize, then
// deepen each irreducible piece's budget from its lower bound upward.  The
// remaining pieces' lower bounds shrink the budget worth trying, which is
// what makes bounded decision queries cheap.
inline SolveResult exact_distance_limited(const Triangulation& t1, const Triangulation& t2,
                                          int limit, const SolverOptions& opt = {}) {
    NormalizedSet ns = normalize(t1, t2);
    SolveResult result;
    result.base_cost = ns.base_cost;
    result.n = ns.phi_total();
    result.witness = std::move(ns.witness_prefix);
    int spent = ns.base_cost;

    // Each piece has no free diagonal, so its distance strictly exceeds its
    // diagonal count.
    std::vector<int> lower(ns.subs.size() + 1, 0);
    for (std::size_t i = ns.subs.size(); i-- > 0;)
        lower[i] = lower[i + 1] + ns.subs[i].initial.diagonal_count() + 1;

    for (std::size_t i = 0; i < ns.subs.size(); ++i) {
        SubInstance& sub = ns.subs[i];
        const int n = sub.initial.diagonal_count();
        SubRun run;
        run.m = sub.initial.vertex_count();
        run.phi = n;
        int cap = opt.max_cap >= 0 ? opt.max_cap : 2 * n;
        if (limit >= 0) cap = std::min(cap, limit - spent - lower[i + 1]);
        int dist = -1;
        for (int k = n + 1; k <= cap; ++k) {
            SearchStats attempt;
            SearchContext fresh(sub.initial, &sub.target, sub.to_original, &attempt,
                                &result.witness.flips, &opt);
            bool ok = fresh.flip_dist(k);
            run.total += attempt;
            if (ok) {
                run.accepted = attempt;
                dist = k;
                break;
            }
        }
        result.total += run.total;
        if (dist < 0) {
            result.sub_runs.push_back(run);
            return result;  // distance stays -1: no answer within the caps
        }
        run.distance = dist;
        spent += dist;
        result.accepted += run.accepted;
        result.sub_runs.push_back(run);
    }
    if (limit >= 0 && spent > limit) return result;  // trivial part alone overshoots
    result.distance = spent;
    return result;
}

inline SolveResult exact_distance(const Triangulation& t1, const Triangulation& t2,
                                  const SolverOptions& opt = {}) {
    return exact_distance_limited(t1, t2, -1, opt);
}

// Is the flip distance at most k?  The result's distance field holds the
// exact distance whenever the answer is yes.
inline SolveResult solve_decision(const Triangulation& t1, const Triangulation& t2, int k,
                                  const SolverOptions& opt = {}) {
    return exact_distance_limited(t1, t2, k, opt);
}

}  // namespace flipdist
