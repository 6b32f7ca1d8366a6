#pragma once

#include "structure.hpp"

namespace suspension {

struct DerivedGraph {
    DecoratedGraph graph;
    ProvenanceMap provenance;
};

namespace detail {

// Reason a vertex cannot be blown down, or empty when it can.
inline std::string contraction_obstacle(const Integer& e, const Integer& genus, std::size_t edges, std::size_t arrows,
                                        bool neighbours_adjacent) {
    if (e != -1) return "self-intersection is not -1";
    if (genus != 0) return "positive genus";
    if (edges + arrows > 2) return "degree exceeds 2";
    if (edges == 0 && arrows > 0) return "arrowhead would be orphaned";
    if (neighbours_adjacent) return "neighbours already adjacent";
    return {};
}

}  // namespace detail

inline bool is_contractible(const DecoratedGraph& g, std::size_t i) {
    const auto& n = g.neighbors(i);
    bool adj = n.size() == 2 && g.adjacent_index(n[0], n[1]);
    return detail::contraction_obstacle(g.at(i).e, g.at(i).genus, n.size(), g.arrow_count(i), adj).empty();
}

inline bool is_minimal(const DecoratedGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (is_contractible(g, i)) return false;
    return true;
}

// Contract the rational -1 vertex v: its neighbours gain +1 and become adjacent,
// and an arrowhead on v moves to its unique neighbour.
inline DerivedGraph blow_down(const DecoratedGraph& g, VertexId v) {
    std::size_t i = g.index(v);
    const auto& n = g.neighbors(i);
    bool adj = n.size() == 2 && g.adjacent_index(n[0], n[1]);
    auto obstacle = detail::contraction_obstacle(g.at(i).e, g.at(i).genus, n.size(), g.arrow_count(i), adj);
    if (!obstacle.empty()) throw Error(ErrorCode::NotContractible, "vertex " + to_string(v) + ": " + obstacle);

    DerivedGraph out;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (k == i) continue;
        Vertex copy = g.at(k);
        if (std::find(n.begin(), n.end(), k) != n.end()) copy.e += 1;
        out.graph.add_vertex(std::move(copy));
    }
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v) out.graph.add_edge(a, b);
    if (n.size() == 2) out.graph.add_edge(g.at(n[0]).id, g.at(n[1]).id);
    for (const auto& a : g.arrows()) out.graph.add_arrow(a.vertex == v ? g.at(n[0]).id : a.vertex, a.multiplicity);
    out.provenance = ProvenanceMap::identity(g);
    out.provenance.erase(v);
    return out;
}

// Blow down until no rational -1 vertex of degree at most 2 is left.
inline DerivedGraph minimalize(const DecoratedGraph& g) {
    const std::size_t n = g.size();
    std::vector<Integer> e(n);
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::size_t> arrows(n);
    std::vector<char> alive(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = g.at(i).e;
        adj[i] = g.neighbors(i);
        arrows[i] = g.arrow_count(i);
    }
    std::vector<std::size_t> arrow_owner;
    for (const auto& a : g.arrows()) arrow_owner.push_back(g.index(a.vertex));

    auto contractible = [&](std::size_t i) {
        if (!alive[i] || e[i] != -1 || g.at(i).genus != 0) return false;
        const auto& nb = adj[i];
        bool adjacent = nb.size() == 2 && std::find(adj[nb[0]].begin(), adj[nb[0]].end(), nb[1]) != adj[nb[0]].end();
        return detail::contraction_obstacle(e[i], g.at(i).genus, nb.size(), arrows[i], adjacent).empty();
    };

    std::vector<std::size_t> work;
    for (std::size_t i = n; i-- > 0;) work.push_back(i);
    while (!work.empty()) {
        std::size_t i = work.back();
        work.pop_back();
        if (!contractible(i)) continue;
        alive[i] = 0;
        auto nb = adj[i];
        adj[i].clear();
        for (std::size_t w : nb) {
            e[w] += 1;
            auto& list = adj[w];
            list.erase(std::find(list.begin(), list.end(), i));
        }
        if (nb.size() == 2) {
            adj[nb[0]].push_back(nb[1]);
            adj[nb[1]].push_back(nb[0]);
        }
        if (arrows[i] > 0) {
            for (auto& owner : arrow_owner)
                if (owner == i) owner = nb[0];
            arrows[nb[0]] += arrows[i];
            arrows[i] = 0;
        }
        for (std::size_t w : nb) work.push_back(w);
    }

    DerivedGraph out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        Vertex copy = g.at(i);
        copy.e = e[i];
        out.provenance.set(copy.id, copy.id);
        out.graph.add_vertex(std::move(copy));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i])
            for (std::size_t j : adj[i])
                if (i < j) out.graph.add_edge(g.at(i).id, g.at(j).id);
    for (std::size_t k = 0; k < arrow_owner.size(); ++k)
        out.graph.add_arrow(g.at(arrow_owner[k]).id, g.arrows()[k].multiplicity);
    return out;
}

}  // namespace suspension
