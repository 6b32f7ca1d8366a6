#pragma once

// Test-side oracles and generators. Nothing here calls into the library's linear algebra.

#include <suspension/graph.hpp>

#include <random>

namespace testing_support {

using suspension::DecoratedGraph;
using suspension::Integer;
using suspension::Rational;
using suspension::VertexId;

using RMatrix = std::vector<std::vector<Rational>>;

// Matrix of -I with rows in the graph's insertion order.
inline RMatrix negated_form(const DecoratedGraph& g) {
    RMatrix m(g.size(), std::vector<Rational>(g.size(), Rational(0)));
    for (std::size_t i = 0; i < g.size(); ++i) {
        m[i][i] = Rational(Integer(-g.at(i).e));
        for (std::size_t j : g.neighbors(i)) m[i][j] = Rational(-1);
    }
    return m;
}

inline Rational gauss_determinant(RMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a[r][k] == 0) ++r;
        if (r == n) return 0;
        if (r != k) {
            std::swap(a[r], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

inline RMatrix gauss_inverse(RMatrix a) {
    const std::size_t n = a.size();
    RMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (a[r][k] == 0) ++r;
        std::swap(a[r], a[k]);
        std::swap(inv[r], inv[k]);
        Rational p = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] /= p;
            inv[k][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

// Sylvester's criterion on the insertion order.
inline bool positive_definite(const RMatrix& m) {
    for (std::size_t k = 1; k <= m.size(); ++k) {
        RMatrix sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
        if (gauss_determinant(sub) <= 0) return false;
    }
    return true;
}

// Random tree shape on `size` vertices (Prüfer-free: attach each new vertex to a random earlier one).
inline std::vector<std::pair<std::size_t, std::size_t>> random_tree_edges(std::mt19937_64& rng, std::size_t size) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < size; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return edges;
}

// Negative definite tree: each e is at most minus the degree, at least one strictly.
inline DecoratedGraph random_definite_tree(std::mt19937_64& rng, std::size_t size, int slack = 2) {
    auto edges = random_tree_edges(rng, size);
    std::vector<int> deg(size, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    std::uniform_int_distribution<int> extra(0, slack);
    DecoratedGraph g;
    std::vector<VertexId> ids;
    bool strict = false;
    for (std::size_t v = 0; v < size; ++v) {
        int x = extra(rng);
        if (v + 1 == size && !strict) x = std::max(x, 1);
        strict = strict || x > 0;
        ids.push_back(g.add_vertex(-deg[v] - x));
    }
    for (auto [a, b] : edges) g.add_edge(ids[a], ids[b]);
    return g;
}

// Rebuild `g` with one blow-up applied, inserting a rational -1 vertex either on an edge
// or as a new leaf.
inline DecoratedGraph random_blow_up(std::mt19937_64& rng, const DecoratedGraph& g) {
    DecoratedGraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v);
    auto edges = g.edges();
    std::uniform_int_distribution<int> coin(0, 1);
    if (!edges.empty() && coin(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        std::size_t chosen = pick(rng);
        auto [a, b] = edges[chosen];
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (k != chosen) out.add_edge(edges[k].first, edges[k].second);
        VertexId x = out.add_vertex(-1);
        out.add_edge(a, x);
        out.add_edge(x, b);
        out.set_self_intersection(a, out.vertex(a).e - 1);
        out.set_self_intersection(b, out.vertex(b).e - 1);
    } else {
        for (auto [a, b] : edges) out.add_edge(a, b);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        VertexId a = g.at(pick(rng)).id;
        VertexId x = out.add_vertex(-1);
        out.add_edge(a, x);
        out.set_self_intersection(a, out.vertex(a).e - 1);
    }
    for (const auto& arrow : g.arrows()) out.add_arrow(arrow.vertex, arrow.multiplicity);
    return out;
}

// Standard E8 tree: a centre with arms of one, two and four vertices, all -2.
inline DecoratedGraph e8() {
    DecoratedGraph g;
    VertexId c = g.add_vertex(-2);
    auto arm = [&](int len) {
        VertexId prev = c;
        for (int i = 0; i < len; ++i) {
            VertexId x = g.add_vertex(-2);
            g.add_edge(prev, x);
            prev = x;
        }
    };
    arm(1);
    arm(2);
    arm(4);
    return g;
}

inline DecoratedGraph chain(const std::vector<int>& es) {
    DecoratedGraph g;
    std::vector<VertexId> ids;
    for (int e : es) ids.push_back(g.add_vertex(e));
    for (std::size_t i = 1; i < ids.size(); ++i) g.add_edge(ids[i - 1], ids[i]);
    return g;
}

// Same graph with vertex ids permuted and insertion order shuffled.
inline DecoratedGraph relabeled(std::mt19937_64& rng, const DecoratedGraph& g) {
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<VertexId, VertexId> rename;
    for (std::size_t i = 0; i < g.size(); ++i) rename[g.at(i).id] = VertexId{1000 + perm[i] * 7};
    DecoratedGraph out;
    std::vector<std::size_t> order(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
        auto v = g.at(i);
        v.id = rename[v.id];
        out.add_vertex(v);
    }
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto [a, b] : edges) out.add_edge(rename[b], rename[a]);
    for (const auto& arrow : g.arrows()) out.add_arrow(rename[arrow.vertex], arrow.multiplicity);
    return out;
}

}  // namespace testing_support
