#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "flipdist/pair_set.hpp"
#include "flipdist/triangulation.hpp"

namespace flipdist {

inline Edge map_edge(Edge e, const std::vector<VertexId>& labels) {
    return make_edge(labels[e.a], labels[e.b]);
}

inline FlipRecord map_record(const FlipRecord& r, const std::vector<VertexId>& labels) {
    return FlipRecord{map_edge(r.underlying, labels), map_edge(r.created, labels)};
}

struct PartitionSide {
    Triangulation initial;
    Triangulation target;
    std::vector<VertexId> to_parent;  // local label -> parent label
    PairSet pairs;
};

struct Partition {
    PartitionSide a;  // vertices ce.a..ce.b of the parent
    PartitionSide b;  // the complementary arc, ce.b..ce.a wrapping through 0
    // Pairs whose two edges ended up on opposite sides of the cut.  This
    // only happens when the pair's original triangle was destroyed by the
    // flip that created the cut, in which case both edges reappear inside
    // the freshly added flanking pairs, so dropping the old pair is safe.
    std::vector<EdgePair> dropped;
};

// Split both triangulations along the common diagonal ce.  The cut becomes
// a hull edge of each side; every triangle, diagonal, and tracked pair falls
// entirely on one side because nothing in a triangulation crosses ce.
inline Partition partition(const Triangulation& t1, const Triangulation& t2,
                           const PairSet& s, Edge ce) {
    if (!t1.has_diagonal(ce) || !t2.has_diagonal(ce))
        throw std::invalid_argument("partition cut must be a diagonal of both triangulations");
    const int m = t1.vertex_count();
    assert(t2.vertex_count() == m);

    const int ma = ce.b - ce.a + 1;
    const int mb = m - (ce.b - ce.a) + 1;
    auto in_a = [&](VertexId v) { return v >= ce.a && v <= ce.b; };
    auto in_b = [&](VertexId v) { return v <= ce.a || v >= ce.b; };
    auto to_a = [&](VertexId v) { return v - ce.a; };
    auto to_b = [&](VertexId v) { return v >= ce.b ? v - ce.b : v + (m - ce.b); };

    // 0 = side a, 1 = side b, -1 = straddles the cut
    auto side_of = [&](Edge e) {
        if (in_a(e.a) && in_a(e.b)) return 0;
        if (in_b(e.a) && in_b(e.b)) return 1;
        return -1;
    };

    Partition out;
    out.a.to_parent.resize(ma);
    for (int i = 0; i < ma; ++i) out.a.to_parent[i] = ce.a + i;
    out.b.to_parent.resize(mb);
    for (int i = 0; i < mb; ++i) out.b.to_parent[i] = (ce.b + i) % m;

    auto split_triangulation = [&](const Triangulation& t, Triangulation& outa, Triangulation& outb) {
        std::vector<Edge> da, db;
        for (Edge d : t.diagonals()) {
            if (d == ce) continue;
            int side = side_of(d);
            assert(side >= 0);
            if (side == 0)
                da.push_back(Edge{to_a(d.a), to_a(d.b)});
            else
                db.push_back(make_edge(to_b(d.a), to_b(d.b)));
        }
        std::vector<Triangle> ta, tb;
        for (const Triangle& tr : t.triangles()) {
            if (in_a(tr.v[0]) && in_a(tr.v[1]) && in_a(tr.v[2]))
                ta.push_back(make_triangle(to_a(tr.v[0]), to_a(tr.v[1]), to_a(tr.v[2])));
            else {
                assert(in_b(tr.v[0]) && in_b(tr.v[1]) && in_b(tr.v[2]));
                tb.push_back(make_triangle(to_b(tr.v[0]), to_b(tr.v[1]), to_b(tr.v[2])));
            }
        }
        assert(static_cast<int>(da.size()) == ma - 3 && static_cast<int>(db.size()) == mb - 3);
        outa = Triangulation::from_triangles(ma, std::move(da), ta);
        outb = Triangulation::from_triangles(mb, std::move(db), tb);
    };
    split_triangulation(t1, out.a.initial, out.b.initial);
    split_triangulation(t2, out.a.target, out.b.target);

    for (const EdgePair& p : s.pairs()) {
        assert(p.first != ce && p.second != ce);
        int s1 = side_of(p.first);
        int s2 = side_of(p.second);
        if (s1 == 0 && s2 == 0)
            out.a.pairs.add(make_edge(to_a(p.first.a), to_a(p.first.b)),
                            make_edge(to_a(p.second.a), to_a(p.second.b)));
        else if (s1 == 1 && s2 == 1)
            out.b.pairs.add(make_edge(to_b(p.first.a), to_b(p.first.b)),
                            make_edge(to_b(p.second.a), to_b(p.second.b)));
        else
            out.dropped.push_back(p);
    }
    return out;
}

}  // namespace flipdist
