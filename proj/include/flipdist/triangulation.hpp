#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "flipdist/edge.hpp"

namespace flipdist {

// Raised when an edge list fails structural validation.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The quadrilateral around a diagonal d: the union of the two triangles
// flanking d.  p < q are the apexes; flipping d yields Edge{p, q}.
struct Quad {
    Edge d;
    VertexId p = 0;
    VertexId q = 0;
    Edge opposite() const { return Edge{p, q}; }
};

// One executed flip: `underlying` was removed, `created` took its place.
struct FlipRecord {
    Edge underlying;
    Edge created;

    friend auto operator<=>(const FlipRecord&, const FlipRecord&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const FlipRecord& r) {
    return os << r.underlying << "->" << r.created;
}

// Up to two triangles incident on an edge, kept in sorted order so that
// structurally equal triangulations compare equal field by field.
struct EdgeTriangles {
    int count = 0;
    std::array<Triangle, 2> tri{};

    void add(const Triangle& t) {
        assert(count < 2);
        tri[count++] = t;
        if (count == 2 && tri[1] < tri[0]) std::swap(tri[0], tri[1]);
    }
    void replace(const Triangle& from, const Triangle& to) {
        if (count >= 1 && tri[0] == from) {
            tri[0] = to;
        } else {
            assert(count == 2 && tri[1] == from);
            tri[1] = to;
        }
        if (count == 2 && tri[1] < tri[0]) std::swap(tri[0], tri[1]);
    }
};

// The small, fixed-size neighbourhood of an edge: the other edges of the
// triangle(s) containing it (2 for a hull edge, 4 for a diagonal).
struct EdgeNeighborhood {
    std::array<Edge, 4> edges{};
    int count = 0;

    void add(Edge e) {
        assert(count < 4);
        edges[count++] = e;
    }
    bool contains(Edge e) const {
        for (int i = 0; i < count; ++i)
            if (edges[i] == e) return true;
        return false;
    }
    const Edge* begin() const { return edges.data(); }
    const Edge* end() const { return edges.data() + count; }
};

// A triangulation of the convex m-gon: m-3 pairwise non-crossing diagonals
// plus the incidence structure edge -> containing triangles.  Flips mutate
// in place in O(1) expected time; unflip is the exact inverse, which makes
// backtracking search cheap.
class Triangulation {
public:
    // Validating factory for untrusted input.  Throws ValidationError on
    // wrong diagonal count, out-of-range or hull endpoints, duplicates, or
    // a crossing pair.
    static Triangulation validated(int m, std::span<const Edge> diagonals) {
        if (m < 3) throw ValidationError("polygon needs at least 3 vertices");
        if (static_cast<int>(diagonals.size()) != m - 3)
            throw ValidationError("expected " + std::to_string(m - 3) +
                                  " diagonals, got " + std::to_string(diagonals.size()));
        for (Edge d : diagonals) {
            if (d.a < 0 || d.b >= m)
                throw ValidationError("diagonal endpoint out of range");
            if (d.a >= d.b) throw ValidationError("diagonal endpoints not canonical");
            if (is_hull_edge(d, m)) throw ValidationError("hull edge listed as diagonal");
        }
        for (std::size_t i = 0; i < diagonals.size(); ++i)
            for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
                if (diagonals[i] == diagonals[j])
                    throw ValidationError("duplicate diagonal");
                if (crossing(diagonals[i], diagonals[j]))
                    throw ValidationError("crossing diagonals");
            }
        Triangulation t;
        t.m_ = m;
        for (Edge d : diagonals) t.insert_diagonal(d);
        t.build_incidence();
        return t;
    }

    // Trusted factory for internal construction (partition sides): the
    // triangle list is taken as-is, only debug-checked.
    static Triangulation from_triangles(int m, std::vector<Edge> diagonals,
                                        const std::vector<Triangle>& triangles) {
        Triangulation t;
        t.m_ = m;
        for (Edge d : diagonals) t.insert_diagonal(d);
        for (const Triangle& tr : triangles)
            for (Edge e : tr.edges()) t.incidence_[e].add(tr);
        assert(static_cast<int>(triangles.size()) == m - 2);
        return t;
    }

    int vertex_count() const { return m_; }
    // phi: the number of diagonals, m - 3.
    int diagonal_count() const { return static_cast<int>(diags_.size()); }

    bool has_diagonal(Edge e) const { return diag_index_.count(e) != 0; }
    bool has_edge(Edge e) const {
        return is_hull_edge(e, m_) ? (e.a >= 0 && e.b < m_) : has_diagonal(e);
    }

    // Unordered view; use sorted_diagonals() when determinism matters.
    std::span<const Edge> diagonals() const { return diags_; }

    std::vector<Edge> sorted_diagonals() const {
        std::vector<Edge> v(diags_.begin(), diags_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    // All m-2 triangles, sorted.
    std::vector<Triangle> triangles() const {
        std::vector<Triangle> out;
        out.reserve(m_ - 2);
        for (const auto& [e, inc] : incidence_)
            for (int i = 0; i < inc.count; ++i)
                if (inc.tri[i].edges()[0] == e)  // count each triangle once
                    out.push_back(inc.tri[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    const EdgeTriangles& incident_triangles(Edge e) const {
        auto it = incidence_.find(e);
        if (it == incidence_.end())
            throw std::invalid_argument("not an edge of the triangulation");
        return it->second;
    }

    Quad quad_of(Edge d) const {
        if (!has_diagonal(d)) throw std::invalid_argument("not a diagonal");
        const EdgeTriangles& inc = incidence_.at(d);
        assert(inc.count == 2);
        VertexId p = inc.tri[0].apex_against(d);
        VertexId q = inc.tri[1].apex_against(d);
        if (p > q) std::swap(p, q);
        return Quad{d, p, q};
    }

    // The other edges of the triangle(s) containing e.
    EdgeNeighborhood neighbors(Edge e) const {
        const EdgeTriangles& inc = incident_triangles(e);
        EdgeNeighborhood nb;
        for (int i = 0; i < inc.count; ++i)
            for (Edge s : inc.tri[i].edges())
                if (s != e) nb.add(s);
        return nb;
    }

    // Replace diagonal d by the opposite diagonal of its quadrilateral.
    // Touches only the two triangles of the quad, so O(1) expected.
    FlipRecord flip(Edge d) {
        Quad q = quad_of(d);
        Edge nd = q.opposite();
        Triangle old1 = make_triangle(d.a, q.p, d.b);
        Triangle old2 = make_triangle(d.a, q.q, d.b);
        Triangle new1 = make_triangle(q.p, d.a, q.q);
        Triangle new2 = make_triangle(q.p, d.b, q.q);
        incidence_[Edge{std::min(d.a, q.p), std::max(d.a, q.p)}].replace(old1, new1);
        incidence_[Edge{std::min(d.b, q.p), std::max(d.b, q.p)}].replace(old1, new2);
        incidence_[Edge{std::min(d.a, q.q), std::max(d.a, q.q)}].replace(old2, new1);
        incidence_[Edge{std::min(d.b, q.q), std::max(d.b, q.q)}].replace(old2, new2);
        incidence_.erase(d);
        EdgeTriangles& ne = incidence_[nd];
        ne = EdgeTriangles{};
        ne.add(new1);
        ne.add(new2);
        remove_diagonal(d);
        insert_diagonal(nd);
        return FlipRecord{d, nd};
    }

    // Undo a flip produced by flip(); restores the exact previous state.
    void unflip(const FlipRecord& r) {
        FlipRecord back = flip(r.created);
        assert(back.created == r.underlying);
        (void)back;
    }

    bool operator==(const Triangulation& o) const {
        if (m_ != o.m_ || diags_.size() != o.diags_.size()) return false;
        for (Edge d : diags_)
            if (!o.has_diagonal(d)) return false;
        return true;
    }

private:
    void insert_diagonal(Edge d) {
        if (diag_index_.count(d)) throw ValidationError("duplicate diagonal");
        diag_index_[d] = static_cast<int>(diags_.size());
        diags_.push_back(d);
    }
    void remove_diagonal(Edge d) {
        auto it = diag_index_.find(d);
        assert(it != diag_index_.end());
        int pos = it->second;
        diag_index_.erase(it);
        Edge last = diags_.back();
        diags_.pop_back();
        if (last != d) {
            diags_[pos] = last;
            diag_index_[last] = pos;
        }
    }

    // Derive the triangle set from the diagonals.  Around each vertex the
    // incident edges, sorted by cyclic position, bound a fan of triangles.
    void build_incidence() {
        std::vector<std::vector<VertexId>> adj(m_);
        auto link = [&](VertexId u, VertexId v) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        };
        for (VertexId v = 0; v < m_; ++v) link(v, (v + 1) % m_);
        for (Edge d : diags_) link(d.a, d.b);
        for (VertexId v = 0; v < m_; ++v) {
            // order neighbours by cyclic distance from v
            std::sort(adj[v].begin(), adj[v].end(), [&](VertexId x, VertexId y) {
                return (x - v + m_) % m_ < (y - v + m_) % m_;
            });
            for (std::size_t i = 0; i + 1 < adj[v].size(); ++i) {
                VertexId u = adj[v][i];
                VertexId w = adj[v][i + 1];
                Triangle t = make_triangle(v, u, w);
                if (t.v[0] == v)  // record each triangle at its least vertex
                    for (Edge e : t.edges()) incidence_[e].add(t);
            }
        }
        assert(static_cast<int>(triangles().size()) == m_ - 2);
    }

    int m_ = 3;
    std::vector<Edge> diags_;
    std::unordered_map<Edge, int, EdgeHash> diag_index_;
    std::unordered_map<Edge, EdgeTriangles, EdgeHash> incidence_;
};

// Diagonals present in both triangulations, sorted canonically.
inline std::vector<Edge> common_diagonals(const Triangulation& t1, const Triangulation& t2) {
    std::vector<Edge> out;
    for (Edge d : t1.diagonals())
        if (t2.has_diagonal(d)) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

// Whether flipping d in t1 creates a diagonal of t2.
inline bool is_free_diagonal(const Triangulation& t1, const Triangulation& t2, Edge d) {
    return t2.has_diagonal(t1.quad_of(d).opposite());
}

// Diagonals of t1 whose flip lands in t2, sorted canonically.  Any two free
// diagonals are independent (share no triangle), which the debug build
// checks.
inline std::vector<Edge> free_diagonals(const Triangulation& t1, const Triangulation& t2) {
    std::vector<Edge> out;
    for (Edge d : t1.diagonals())
        if (is_free_diagonal(t1, t2, d)) out.push_back(d);
    std::sort(out.begin(), out.end());
#ifndef NDEBUG
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            assert(!t1.neighbors(out[i]).contains(out[j]));
#endif
    return out;
}

// Distinct diagonals whose quadrilaterals share no edge; their flips commute.
inline bool independent(const Triangulation& t, Edge d1, Edge d2) {
    return d1 != d2 && !t.neighbors(d1).contains(d2);
}

}  // namespace flipdist
