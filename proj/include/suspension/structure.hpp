#pragma once

#include "graph.hpp"

#include <deque>

namespace suspension {

// Connected components of the subgraph induced on `mask` (all vertices when mask is empty).
inline std::vector<std::vector<std::size_t>> components(const DecoratedGraph& g, const std::vector<char>& mask = {}) {
    auto inside = [&](std::size_t i) { return mask.empty() || mask[i]; };
    std::vector<char> seen(g.size(), 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (seen[start] || !inside(start)) continue;
        std::vector<std::size_t> comp{start};
        seen[start] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t j : g.neighbors(comp[k]))
                if (!seen[j] && inside(j)) {
                    seen[j] = 1;
                    comp.push_back(j);
                }
        out.push_back(std::move(comp));
    }
    return out;
}

// Number of independent cycles: E - V + #components.
inline std::size_t cycle_rank(const DecoratedGraph& g) {
    return g.edge_count() + components(g).size() - g.size();
}

inline bool is_forest(const DecoratedGraph& g) { return cycle_rank(g) == 0; }

// The empty graph counts as a tree.
inline bool is_tree(const DecoratedGraph& g) {
    return g.empty() || (g.edge_count() + 1 == g.size() && components(g).size() == 1);
}

inline void require_tree(const DecoratedGraph& g) {
    if (!is_tree(g)) throw Error(ErrorCode::NotATree, "graph is not a tree");
}

// Vertex indices along the unique path from `from` to `to`, endpoints included.
inline std::vector<std::size_t> tree_path(const DecoratedGraph& g, std::size_t from, std::size_t to) {
    if (!is_forest(g)) throw Error(ErrorCode::NotATree, "path query on a graph with cycles");
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(g.size(), none);
    parent[from] = from;
    std::deque<std::size_t> queue{from};
    while (!queue.empty() && parent[to] == none) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : g.neighbors(v))
            if (parent[w] == none) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    if (parent[to] == none) throw Error(ErrorCode::InvalidInput, "vertices lie in different components");
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

inline std::vector<VertexId> tree_path(const DecoratedGraph& g, VertexId from, VertexId to) {
    std::vector<VertexId> out;
    for (std::size_t i : tree_path(g, g.index(from), g.index(to))) out.push_back(g.at(i).id);
    return out;
}

inline bool is_rupture(const DecoratedGraph& g, std::size_t i) { return g.at(i).genus > 0 || g.degree(i) >= 3; }

inline std::vector<std::size_t> rupture_indices(const DecoratedGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (is_rupture(g, i)) out.push_back(i);
    return out;
}

inline std::vector<VertexId> rupture_vertices(const DecoratedGraph& g) {
    std::vector<VertexId> out;
    for (std::size_t i : rupture_indices(g)) out.push_back(g.at(i).id);
    std::sort(out.begin(), out.end());
    return out;
}

// Mask of the minimal connected subgraph of a tree containing every vertex in `targets`.
inline std::vector<char> spanning_core(const DecoratedGraph& g, const std::vector<std::size_t>& targets) {
    std::vector<char> core(g.size(), 0);
    if (targets.empty()) return core;
    std::fill(core.begin(), core.end(), 1);
    std::vector<char> target(g.size(), 0);
    for (std::size_t t : targets) target[t] = 1;
    std::vector<std::size_t> deg(g.size());
    std::vector<std::size_t> leaves;
    for (std::size_t i = 0; i < g.size(); ++i) {
        deg[i] = g.edge_degree(i);
        if (deg[i] <= 1 && !target[i]) leaves.push_back(i);
    }
    while (!leaves.empty()) {
        std::size_t v = leaves.back();
        leaves.pop_back();
        if (!core[v]) continue;
        core[v] = 0;
        for (std::size_t w : g.neighbors(v))
            if (core[w] && --deg[w] <= 1 && !target[w]) leaves.push_back(w);
    }
    return core;
}

// Components of G \ core that touch vertex v.
inline std::vector<std::vector<std::size_t>> strings_at(const DecoratedGraph& g, const std::vector<char>& core, std::size_t v) {
    std::vector<char> outside(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) outside[i] = !core[i];
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> seen(g.size(), 0);
    for (std::size_t start : g.neighbors(v)) {
        if (!outside[start] || seen[start]) continue;
        std::vector<std::size_t> comp{start};
        seen[start] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t j : g.neighbors(comp[k]))
                if (outside[j] && !seen[j]) {
                    seen[j] = 1;
                    comp.push_back(j);
                }
        out.push_back(std::move(comp));
    }
    return out;
}

// Components of G minus the vertices flagged in `removed`.
inline std::vector<std::vector<std::size_t>> components_minus(const DecoratedGraph& g, const std::vector<char>& removed) {
    std::vector<char> keep(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) keep[i] = !removed[i];
    return components(g, keep);
}

// The component of G minus `removed` that contains `member`.
inline std::vector<std::size_t> component_containing(const DecoratedGraph& g, const std::vector<char>& removed, std::size_t member) {
    std::vector<std::size_t> comp{member};
    std::vector<char> seen(g.size(), 0);
    seen[member] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
        for (std::size_t j : g.neighbors(comp[k]))
            if (!removed[j] && !seen[j]) {
                seen[j] = 1;
                comp.push_back(j);
            }
    return comp;
}

inline std::vector<char> mask_of(const DecoratedGraph& g, const std::vector<std::size_t>& indices) {
    std::vector<char> m(g.size(), 0);
    for (std::size_t i : indices) m[i] = 1;
    return m;
}

inline std::vector<DecoratedGraph> maximal_strings_at(const DecoratedGraph& g, VertexId v) {
    std::size_t iv = g.index(v);
    auto core = spanning_core(g, rupture_indices(g));
    if (!core[iv]) throw Error(ErrorCode::InvalidInput, "vertex " + to_string(v) + " is not in the rupture core");
    std::vector<DecoratedGraph> out;
    for (const auto& comp : strings_at(g, core, iv)) out.push_back(induced_subgraph(g, mask_of(g, comp)));
    return out;
}

inline std::vector<DecoratedGraph> connected_components_minus(const DecoratedGraph& g, const std::vector<VertexId>& removed) {
    std::vector<char> r(g.size(), 0);
    for (auto id : removed) r[g.index(id)] = 1;
    std::vector<DecoratedGraph> out;
    for (const auto& comp : components_minus(g, r)) out.push_back(induced_subgraph(g, mask_of(g, comp)));
    return out;
}

inline std::vector<DecoratedGraph> connected_components_minus(const DecoratedGraph& g, VertexId removed) {
    return connected_components_minus(g, std::vector<VertexId>{removed});
}

// Number of rupture vertices on the path from w1 to w2, minus one.
inline std::size_t rupture_distance(const DecoratedGraph& g, VertexId w1, VertexId w2) {
    require_tree(g);
    auto path = tree_path(g, g.index(w1), g.index(w2));
    if (path.size() == 1) return 0;
    std::size_t inner = 0;
    for (std::size_t k = 1; k + 1 < path.size(); ++k)
        if (is_rupture(g, path[k])) ++inner;
    return inner + 1;
}

}  // namespace suspension
