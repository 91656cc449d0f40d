#pragma once

#include <cassert>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "flipdist/io.hpp"
#include "flipdist/triangulation.hpp"

namespace flipdist {

// A rooted binary tree held in an arena.  The rotation-distance front end
// uses full binary trees (every node has 0 or 2 children); dual trees of
// triangulations may have single-child nodes.
struct BinTree {
    struct Node {
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    bool is_leaf(int i) const { return nodes[i].left < 0 && nodes[i].right < 0; }

    int leaf_count() const {
        int n = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (is_leaf(static_cast<int>(i))) ++n;
        return n;
    }
    int internal_count() const { return static_cast<int>(nodes.size()) - leaf_count(); }

    bool is_full_binary() const {
        for (const Node& n : nodes)
            if ((n.left < 0) != (n.right < 0)) return false;
        return true;
    }
};

// Text format: '.' is a leaf, '(L R)' an internal node; whitespace is free.
inline BinTree parse_tree(const std::string& text) {
    BinTree t;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_node = [&](auto&& self) -> int {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of tree text");
        if (text[pos] == '.') {
            ++pos;
            t.nodes.push_back({});
            return static_cast<int>(t.nodes.size()) - 1;
        }
        if (text[pos] != '(')
            throw ParseError(std::string("unexpected character '") + text[pos] + "' in tree text");
        ++pos;
        int left = self(self);
        int right = self(self);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
            throw ParseError("expected ')' in tree text");
        ++pos;
        t.nodes.push_back({left, right});
        return static_cast<int>(t.nodes.size()) - 1;
    };
    t.root = parse_node(parse_node);
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters after tree");
    return t;
}

inline std::string serialize_tree(const BinTree& t, int node = -2) {
    if (node == -2) node = t.root;
    if (t.is_leaf(node)) return ".";
    return "(" + serialize_tree(t, t.nodes[node].left) + " " +
           serialize_tree(t, t.nodes[node].right) + ")";
}

// A full binary tree with t internal nodes maps to a triangulation of the
// (t+2)-gon: the chord (lo,hi) spans a subtree, a leaf forces hi = lo+1,
// and an internal node whose left subtree covers l leaves contributes the
// triangle (lo, lo+l, hi).  Non-hull chords are the diagonals.
inline Triangulation tree_to_triangulation(const BinTree& t) {
    if (!t.is_full_binary())
        throw std::invalid_argument("tree must be full binary (0 or 2 children per node)");
    int m = t.internal_count() + 2;
    std::vector<int> leaves(t.nodes.size(), 0);
    auto count_leaves = [&](auto&& self, int node) -> int {
        if (t.is_leaf(node)) return leaves[node] = 1;
        return leaves[node] = self(self, t.nodes[node].left) + self(self, t.nodes[node].right);
    };
    count_leaves(count_leaves, t.root);

    std::vector<Edge> diags;
    auto emit = [&](auto&& self, int lo, int hi, int node) -> void {
        if (t.is_leaf(node)) {
            assert(hi == lo + 1);
            return;
        }
        int mid = lo + leaves[t.nodes[node].left];
        self(self, lo, mid, t.nodes[node].left);
        self(self, mid, hi, t.nodes[node].right);
        Edge lchord{lo, mid}, rchord{mid, hi};
        if (is_diagonal_shape(lchord, m)) diags.push_back(lchord);
        if (is_diagonal_shape(rchord, m)) diags.push_back(rchord);
    };
    emit(emit, 0, m - 1, t.root);
    return Triangulation::validated(m, diags);
}

// Inverse of tree_to_triangulation.
inline BinTree triangulation_to_tree(const Triangulation& t) {
    const int m = t.vertex_count();
    BinTree out;
    auto build = [&](auto&& self, int lo, int hi) -> int {
        if (hi == lo + 1) {
            out.nodes.push_back({});
            return static_cast<int>(out.nodes.size()) - 1;
        }
        // the triangle on the inner side of the chord (lo,hi)
        const EdgeTriangles& inc = t.incident_triangles(Edge{lo, hi});
        const Triangle* inner = nullptr;
        for (int i = 0; i < inc.count; ++i) {
            VertexId apex = inc.tri[i].apex_against(Edge{lo, hi});
            if (apex > lo && apex < hi) inner = &inc.tri[i];
        }
        assert(inner != nullptr);
        VertexId w = inner->apex_against(Edge{lo, hi});
        int left = self(self, lo, w);
        int right = self(self, w, hi);
        out.nodes.push_back({left, right});
        return static_cast<int>(out.nodes.size()) - 1;
    };
    out.root = build(build, 0, m - 1);
    return out;
}

// The dual tree: one node per triangle, one edge per diagonal, rooted at
// the triangle containing the hull edge (0, m-1).  Children are ordered by
// the canonical order of the shared diagonal.
struct DualTree {
    BinTree tree;
    std::vector<Triangle> triangle_of;  // node index -> triangle
};

inline DualTree dual_tree(const Triangulation& t) {
    const int m = t.vertex_count();
    DualTree out;
    auto build = [&](auto&& self, const Triangle& tri, Edge parent_edge) -> int {
        std::vector<std::pair<Edge, Triangle>> kids;
        for (Edge e : tri.edges()) {
            if (e == parent_edge || !t.has_diagonal(e)) continue;
            const EdgeTriangles& inc = t.incident_triangles(e);
            assert(inc.count == 2);
            kids.emplace_back(e, inc.tri[0] == tri ? inc.tri[1] : inc.tri[0]);
        }
        // canonical edge order fixes the left/right assignment
        if (kids.size() == 2 && kids[1].first < kids[0].first) std::swap(kids[0], kids[1]);
        BinTree::Node node;
        if (!kids.empty()) node.left = self(self, kids[0].second, kids[0].first);
        if (kids.size() == 2) node.right = self(self, kids[1].second, kids[1].first);
        out.tree.nodes.push_back(node);
        out.triangle_of.push_back(tri);
        return static_cast<int>(out.tree.nodes.size()) - 1;
    };
    Edge root_edge{0, m - 1};
    const EdgeTriangles& root_inc = t.incident_triangles(root_edge);
    assert(root_inc.count == 1);
    out.tree.root = build(build, root_inc.tri[0], root_edge);
    return out;
}

}  // namespace flipdist
