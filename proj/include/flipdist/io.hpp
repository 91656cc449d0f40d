#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "flipdist/triangulation.hpp"

namespace flipdist {

// Raised on malformed instance text; structural problems with an otherwise
// well-formed edge list raise ValidationError instead.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A flip-distance problem: two triangulations of the same polygon and an
// optional decision budget.
struct Instance {
    Triangulation initial;
    Triangulation target;
    std::optional<int> budget;
};

namespace detail {

// Next whitespace-delimited token; '#' starts a comment running to end of line.
inline std::optional<std::string> next_token(std::istream& in) {
    std::string tok;
    for (;;) {
        if (!(in >> tok)) return std::nullopt;
        if (tok[0] != '#') return tok;
        std::string rest;
        std::getline(in, rest);
    }
}

inline int parse_int(const std::optional<std::string>& tok, const char* what) {
    if (!tok) throw ParseError(std::string("unexpected end of input, expected ") + what);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(*tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected integer for " + std::string(what) + ", got '" + *tok + "'");
    }
    if (used != tok->size())
        throw ParseError("expected integer for " + std::string(what) + ", got '" + *tok + "'");
    return value;
}

inline void expect_keyword(std::istream& in, const char* kw) {
    auto tok = next_token(in);
    if (!tok) throw ParseError(std::string("unexpected end of input, expected '") + kw + "'");
    if (*tok != kw)
        throw ParseError(std::string("expected '") + kw + "', got '" + *tok + "'");
}

inline std::vector<Edge> parse_edge_list(std::istream& in, int m, const char* what) {
    std::vector<Edge> edges;
    for (int i = 0; i < m - 3; ++i) {
        int a = parse_int(next_token(in), what);
        int b = parse_int(next_token(in), what);
        if (a == b) throw ParseError("degenerate edge in " + std::string(what));
        edges.push_back(make_edge(a, b));
    }
    return edges;
}

}  // namespace detail

// Instance text format, keywords in order, '#' comments allowed anywhere:
//   m <int>
//   init <2(m-3) ints, endpoint pairs>
//   final <2(m-3) ints>
//   k <int>            (optional)
inline Instance parse_instance(std::istream& in) {
    detail::expect_keyword(in, "m");
    int m = detail::parse_int(detail::next_token(in), "m");
    if (m < 3) throw ParseError("m must be at least 3");
    detail::expect_keyword(in, "init");
    std::vector<Edge> init = detail::parse_edge_list(in, m, "init");
    detail::expect_keyword(in, "final");
    std::vector<Edge> fin = detail::parse_edge_list(in, m, "final");
    std::optional<int> budget;
    if (auto tok = detail::next_token(in)) {
        if (*tok != "k") throw ParseError("unexpected token '" + *tok + "'");
        int k = detail::parse_int(detail::next_token(in), "k");
        if (k < 0) throw ParseError("k must be non-negative");
        budget = k;
        if (auto extra = detail::next_token(in))
            throw ParseError("unexpected token '" + *extra + "'");
    }
    return Instance{Triangulation::validated(m, init), Triangulation::validated(m, fin), budget};
}

inline Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

// Deterministic inverse of parse_instance: diagonals in canonical sorted order.
inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "m " << inst.initial.vertex_count() << '\n';
    auto emit = [&out](const char* kw, const Triangulation& t) {
        out << kw;
        for (Edge d : t.sorted_diagonals()) out << ' ' << d.a << ' ' << d.b;
        out << '\n';
    };
    emit("init", inst.initial);
    emit("final", inst.target);
    if (inst.budget) out << "k " << *inst.budget << '\n';
    return out.str();
}

}  // namespace flipdist
