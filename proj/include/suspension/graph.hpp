#pragma once

#include "arithmetic.hpp"
#include "error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace suspension {

struct VertexId {
    std::uint64_t value = 0;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline std::string to_string(VertexId id) { return std::to_string(id.value); }

struct Vertex {
    VertexId id;
    Integer e;
    Integer genus = 0;
    std::optional<Integer> multiplicity;
};

struct Arrow {
    VertexId vertex;
    Integer multiplicity;
};

// Plumbing graph decorated with self-intersections, genera, optional multiplicities
// and arrowheads. Vertices are addressed by stable ids; indices are positions in
// insertion order and are only valid for the graph they came from.
class DecoratedGraph {
public:
    VertexId add_vertex(Integer e, Integer genus = 0, std::optional<Integer> multiplicity = std::nullopt) {
        VertexId id{next_id_};
        insert(Vertex{id, std::move(e), std::move(genus), std::move(multiplicity)});
        return id;
    }

    VertexId add_vertex(Vertex v) {
        if (index_.count(v.id.value)) throw Error(ErrorCode::DuplicateVertex, "vertex " + to_string(v.id) + " already present");
        VertexId id = v.id;
        insert(std::move(v));
        return id;
    }

    void add_edge(VertexId a, VertexId b) {
        std::size_t ia = index(a);
        std::size_t ib = index(b);
        if (ia == ib) throw Error(ErrorCode::InvalidInput, "self-loop at vertex " + to_string(a));
        if (adjacent_index(ia, ib))
            throw Error(ErrorCode::InvalidInput, "second edge between " + to_string(a) + " and " + to_string(b));
        adjacency_[ia].push_back(ib);
        adjacency_[ib].push_back(ia);
        ++edge_count_;
    }

    void add_arrow(VertexId at, Integer multiplicity) {
        std::size_t i = index(at);
        arrows_.push_back(Arrow{at, std::move(multiplicity)});
        ++arrow_count_[i];
    }

    void set_self_intersection(VertexId id, Integer e) { vertices_[index(id)].e = std::move(e); }
    void set_genus(VertexId id, Integer g) { vertices_[index(id)].genus = std::move(g); }
    void set_multiplicity(VertexId id, std::optional<Integer> m) { vertices_[index(id)].multiplicity = std::move(m); }

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& at(std::size_t i) const { return vertices_[i]; }
    const Vertex& vertex(VertexId id) const { return vertices_[index(id)]; }
    bool contains(VertexId id) const { return index_.count(id.value) != 0; }

    std::size_t index(VertexId id) const {
        auto it = index_.find(id.value);
        if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "no vertex " + to_string(id));
        return it->second;
    }

    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }

    std::vector<VertexId> neighbor_ids(VertexId id) const {
        std::vector<VertexId> out;
        for (std::size_t j : adjacency_[index(id)]) out.push_back(vertices_[j].id);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool adjacent(VertexId a, VertexId b) const { return adjacent_index(index(a), index(b)); }

    bool adjacent_index(std::size_t a, std::size_t b) const {
        const auto& n = adjacency_[a];
        return std::find(n.begin(), n.end(), b) != n.end();
    }

    std::size_t edge_count() const { return edge_count_; }

    // Each edge once as (smaller id, larger id), sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j : adjacency_[i])
                if (vertices_[i].id < vertices_[j].id) out.emplace_back(vertices_[i].id, vertices_[j].id);
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t arrow_count(std::size_t i) const { return arrow_count_[i]; }

    Integer arrow_multiplicity_sum(std::size_t i) const {
        Integer sum = 0;
        if (arrow_count_[i] == 0) return sum;
        for (const auto& a : arrows_)
            if (a.vertex == vertices_[i].id) sum += a.multiplicity;
        return sum;
    }

    std::vector<Integer> arrow_multiplicities(std::size_t i) const {
        std::vector<Integer> out;
        if (arrow_count_[i] == 0) return out;
        for (const auto& a : arrows_)
            if (a.vertex == vertices_[i].id) out.push_back(a.multiplicity);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Edges and arrows both count.
    std::size_t degree(std::size_t i) const { return adjacency_[i].size() + arrow_count_[i]; }
    std::size_t edge_degree(std::size_t i) const { return adjacency_[i].size(); }

    VertexId next_id() const { return VertexId{next_id_}; }

    std::vector<std::size_t> indices_by_id() const {
        std::vector<std::size_t> order(vertices_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertices_[a].id < vertices_[b].id; });
        return order;
    }

    bool has_all_multiplicities() const {
        return std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.multiplicity.has_value(); });
    }

private:
    void insert(Vertex v) {
        if (v.genus < 0) throw Error(ErrorCode::InvalidInput, "negative genus at vertex " + to_string(v.id));
        if (v.multiplicity && *v.multiplicity <= 0)
            throw Error(ErrorCode::InvalidInput, "non-positive multiplicity at vertex " + to_string(v.id));
        index_.emplace(v.id.value, vertices_.size());
        next_id_ = std::max(next_id_, v.id.value + 1);
        vertices_.push_back(std::move(v));
        adjacency_.emplace_back();
        arrow_count_.push_back(0);
    }

    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::size_t> arrow_count_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::size_t edge_count_ = 0;
    std::uint64_t next_id_ = 1;
};

// Partial map from the vertices of a source graph to those of a derived graph.
class ProvenanceMap {
public:
    static ProvenanceMap identity(const DecoratedGraph& g) {
        ProvenanceMap p;
        for (const auto& v : g.vertices()) p.map_.emplace(v.id, v.id);
        return p;
    }

    void set(VertexId from, VertexId to) { map_[from] = to; }
    void erase(VertexId from) { map_.erase(from); }

    std::optional<VertexId> image(VertexId from) const {
        auto it = map_.find(from);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    bool defined(VertexId from) const { return map_.count(from) != 0; }

    // (next ∘ this): first this, then next.
    ProvenanceMap then(const ProvenanceMap& next) const {
        ProvenanceMap out;
        for (const auto& [from, mid] : map_)
            if (auto to = next.image(mid)) out.map_.emplace(from, *to);
        return out;
    }

    const std::map<VertexId, VertexId>& entries() const { return map_; }

private:
    std::map<VertexId, VertexId> map_;
};

// Copy of `g` restricted to the vertices flagged in `keep` (indexed like g), keeping ids,
// decorations, and arrows on kept vertices.
inline DecoratedGraph induced_subgraph(const DecoratedGraph& g, const std::vector<char>& keep) {
    DecoratedGraph out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (keep[i]) out.add_vertex(g.at(i));
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j : g.neighbors(i))
            if (keep[j] && i < j) out.add_edge(g.at(i).id, g.at(j).id);
    }
    for (const auto& a : g.arrows())
        if (keep[g.index(a.vertex)]) out.add_arrow(a.vertex, a.multiplicity);
    return out;
}

inline DecoratedGraph induced_subgraph(const DecoratedGraph& g, const std::vector<VertexId>& ids) {
    std::vector<char> keep(g.size(), 0);
    for (auto id : ids) keep[g.index(id)] = 1;
    return induced_subgraph(g, keep);
}

// Same graph with arrows removed and, optionally, multiplicities cleared.
inline DecoratedGraph without_arrows(const DecoratedGraph& g, bool clear_multiplicities = true) {
    DecoratedGraph out;
    for (const auto& v : g.vertices()) {
        Vertex copy = v;
        if (clear_multiplicities) copy.multiplicity.reset();
        out.add_vertex(std::move(copy));
    }
    for (const auto& [a, b] : g.edges()) out.add_edge(a, b);
    return out;
}

}  // namespace suspension
