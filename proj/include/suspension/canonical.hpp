#pragma once

#include "structure.hpp"

#include <string>

namespace suspension {

namespace detail {

inline std::string vertex_label(const DecoratedGraph& g, std::size_t i) {
    const auto& v = g.at(i);
    std::string s = v.e.str();
    s += ',';
    s += v.genus.str();
    s += ',';
    s += v.multiplicity ? v.multiplicity->str() : std::string("*");
    for (const auto& m : g.arrow_multiplicities(i)) {
        s += '>';
        s += m.str();
    }
    return s;
}

inline std::string rooted_encoding(const DecoratedGraph& g, std::size_t root) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(g.size(), none), order{root};
    parent[root] = root;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t w : g.neighbors(order[k]))
            if (parent[w] == none) {
                parent[w] = order[k];
                order.push_back(w);
            }
    std::vector<std::vector<std::string>> child_codes(g.size());
    std::string code;
    for (std::size_t k = order.size(); k-- > 0;) {
        std::size_t v = order[k];
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        code = "(" + vertex_label(g, v);
        for (auto& c : kids) code += c;
        code += ")";
        kids.clear();
        kids.shrink_to_fit();
        if (k > 0) child_codes[parent[v]].push_back(std::move(code));
    }
    return code;
}

// One or two centres of a tree, by repeatedly stripping leaves.
inline std::vector<std::size_t> tree_centers(const DecoratedGraph& g) {
    std::size_t remaining = g.size();
    std::vector<std::size_t> deg(g.size());
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < g.size(); ++i) {
        deg[i] = g.edge_degree(i);
        if (deg[i] <= 1) layer.push_back(i);
    }
    while (remaining > 2) {
        std::vector<std::size_t> next;
        remaining -= layer.size();
        for (std::size_t v : layer)
            for (std::size_t w : g.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    return layer;
}

}  // namespace detail

// Centre-rooted AHU encoding; labels carry e, g, multiplicity and arrow multiplicities.
inline std::string canonical_form(const DecoratedGraph& g) {
    require_tree(g);
    if (g.empty()) return {};
    std::string best;
    bool first = true;
    for (std::size_t c : detail::tree_centers(g)) {
        auto code = detail::rooted_encoding(g, c);
        if (first || code < best) best = std::move(code);
        first = false;
    }
    return best;
}

// Copy of g with ids 1..N assigned in a canonical depth-first order, so isomorphic
// trees come out identical.
inline DecoratedGraph canonical_relabel(const DecoratedGraph& g) {
    require_tree(g);
    DecoratedGraph out;
    if (g.empty()) return out;
    std::size_t root = 0;
    std::string best;
    bool first = true;
    for (std::size_t c : detail::tree_centers(g)) {
        auto code = detail::rooted_encoding(g, c);
        if (first || code < best) {
            best = std::move(code);
            root = c;
        }
        first = false;
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(g.size(), none), order{root};
    parent[root] = root;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t w : g.neighbors(order[k]))
            if (parent[w] == none) {
                parent[w] = order[k];
                order.push_back(w);
            }
    std::vector<std::string> code(g.size());
    std::vector<std::vector<std::size_t>> kids(g.size());
    for (std::size_t k = order.size(); k-- > 0;) {
        std::size_t v = order[k];
        auto& ch = kids[v];
        std::sort(ch.begin(), ch.end(), [&](std::size_t a, std::size_t b) { return code[a] < code[b]; });
        code[v] = "(" + detail::vertex_label(g, v);
        for (std::size_t c : ch) code[v] += code[c];
        code[v] += ")";
        if (k > 0) kids[parent[v]].push_back(v);
    }
    std::vector<VertexId> id(g.size());
    std::vector<std::size_t> stack{root};
    std::uint64_t next = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        const auto& src = g.at(v);
        id[v] = out.add_vertex(Vertex{VertexId{next++}, src.e, src.genus, src.multiplicity});
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
    }
    for (std::size_t v : order)
        if (v != root) out.add_edge(id[parent[v]], id[v]);
    for (std::size_t v : order)
        for (const auto& m : g.arrow_multiplicities(v)) out.add_arrow(id[v], m);
    return out;
}

inline bool are_isomorphic(const DecoratedGraph& a, const DecoratedGraph& b) {
    if (a.size() != b.size() || a.arrows().size() != b.arrows().size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace suspension
