#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace flipdist {

// Vertices of the convex polygon are labelled 0..m-1 in counterclockwise
// order.  All arithmetic on labels is mod m.
using VertexId = int;

// An undirected chord of the polygon, stored canonically with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Hull edges connect cyclically adjacent vertices; everything else is a
// potential diagonal.
inline bool is_hull_edge(Edge e, int m) {
    return (e.b - e.a == 1) || (e.a == 0 && e.b == m - 1);
}

inline bool is_diagonal_shape(Edge e, int m) {
    return e.a >= 0 && e.b < m && e.a < e.b && !is_hull_edge(e, m);
}

// Two chords cross iff their endpoints strictly interleave around the
// polygon.  Chords sharing an endpoint never cross.
inline bool crossing(Edge d1, Edge d2) {
    return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
           (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

struct EdgeHash {
    std::size_t operator()(Edge e) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.a)) << 32) |
            static_cast<std::uint32_t>(e.b));
    }
};

inline std::ostream& operator<<(std::ostream& os, Edge e) {
    return os << '(' << e.a << ',' << e.b << ')';
}

// A triangle of a triangulation, stored as a sorted vertex triple.
struct Triangle {
    std::array<VertexId, 3> v{};

    friend auto operator<=>(const Triangle&, const Triangle&) = default;

    std::array<Edge, 3> edges() const {
        return {Edge{v[0], v[1]}, Edge{v[0], v[2]}, Edge{v[1], v[2]}};
    }
    bool has_vertex(VertexId x) const {
        return v[0] == x || v[1] == x || v[2] == x;
    }
    // The vertex opposite to edge e; e must be one of the triangle's edges.
    VertexId apex_against(Edge e) const {
        for (VertexId x : v)
            if (x != e.a && x != e.b) return x;
        assert(false && "edge not part of triangle");
        return -1;
    }
};

inline Triangle make_triangle(VertexId a, VertexId b, VertexId c) {
    std::array<VertexId, 3> v{a, b, c};
    if (v[0] > v[1]) std::swap(v[0], v[1]);
    if (v[1] > v[2]) std::swap(v[1], v[2]);
    if (v[0] > v[1]) std::swap(v[0], v[1]);
    assert(v[0] < v[1] && v[1] < v[2]);
    return Triangle{v};
}

inline std::ostream& operator<<(std::ostream& os, const Triangle& t) {
    return os << '(' << t.v[0] << ',' << t.v[1] << ',' << t.v[2] << ')';
}

}  // namespace flipdist
