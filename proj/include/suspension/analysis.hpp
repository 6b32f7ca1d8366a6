#pragma once

#include "linear_algebra.hpp"
#include "structure.hpp"

#include <map>
#include <optional>

namespace suspension {

// A rational number or +infinity (nullopt).
using ExtendedRational = std::optional<Rational>;

inline std::string to_string(const ExtendedRational& x) { return x ? to_string(*x) : "inf"; }

// Strings hanging at one rupture vertex that share a determinant.
struct StringLevel {
    Integer determinant;
    std::vector<std::vector<std::size_t>> strings;  // vertex indices, each ordered from the rupture vertex outwards
    std::size_t count() const { return strings.size(); }
};

namespace detail {

// Order a string component as a path starting next to `root`.
inline std::vector<std::size_t> ordered_string(const DecoratedGraph& g, std::size_t root, const std::vector<std::size_t>& comp) {
    std::vector<char> in(g.size(), 0);
    for (std::size_t i : comp) in[i] = 1;
    std::size_t start = comp.front();
    for (std::size_t i : comp)
        if (g.adjacent_index(i, root)) start = i;
    std::vector<std::size_t> out{start};
    std::size_t prev = root;
    for (;;) {
        std::size_t cur = out.back(), next = g.size();
        for (std::size_t j : g.neighbors(cur))
            if (in[j] && j != prev) next = j;
        if (next == g.size()) break;
        prev = cur;
        out.push_back(next);
    }
    return out;
}

// Components of G minus the core adjacent to v, grouped by determinant (ascending).
inline std::vector<StringLevel> string_levels(const DecoratedGraph& g, const std::vector<char>& core, std::size_t v) {
    std::map<Integer, StringLevel> by_det;
    for (const auto& comp : strings_at(g, core, v)) {
        Integer det = determinant(g, mask_of(g, comp));
        auto& level = by_det[det];
        level.determinant = det;
        level.strings.push_back(ordered_string(g, v, comp));
    }
    std::vector<StringLevel> out;
    for (auto& [det, level] : by_det) out.push_back(std::move(level));
    return out;
}

inline Integer string_det_product(const std::vector<StringLevel>& levels, bool reduced) {
    Integer r = 1;
    for (const auto& l : levels) r *= power(l.determinant, Integer(l.count() - (reduced ? 1 : 0)));
    return r;
}

inline ExtendedRational alpha(const DecoratedGraph& g, std::size_t v, const std::vector<StringLevel>& levels) {
    if (!levels.empty()) {
        Integer r = 1;
        for (const auto& l : levels) r *= l.count();
        return Rational(r);
    }
    if (g.at(v).genus == 0) return Rational(1);
    const Integer delta = g.degree(v);
    if (delta == 2) return std::nullopt;
    const Integer num = 2 * g.at(v).genus;
    return make_rational(num, delta - 2) + 1;
}

inline ExtendedRational ratio(const ExtendedRational& num, const ExtendedRational& den) {
    if (!den) return num ? ExtendedRational(Rational(0)) : std::nullopt;
    if (*den == 0 || !num) return std::nullopt;
    return *num / *den;
}

// Rupture vertices adjacent along paths that avoid other rupture vertices.
inline std::vector<std::vector<std::size_t>> rupture_adjacency(const DecoratedGraph& g, const std::vector<char>& core,
                                                               const std::vector<char>& is_r) {
    std::vector<std::vector<std::size_t>> adj(g.size());
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (!is_r[r]) continue;
        std::vector<std::size_t> stack{r};
        std::vector<char> seen(g.size(), 0);
        seen[r] = 1;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : g.neighbors(x)) {
                if (seen[y] || !core[y]) continue;
                seen[y] = 1;
                if (is_r[y])
                    adj[r].push_back(y);
                else
                    stack.push_back(y);
            }
        }
        std::sort(adj[r].begin(), adj[r].end());
    }
    return adj;
}

}  // namespace detail

// Leaf and string data of a tree with at least two rupture vertices.
struct RuptureAnalysis {
    struct Leaf {
        VertexId root;
        std::vector<VertexId> subgraph;  // G(v)
        Integer determinant;             // D(v)
        ExtendedRational beta;
    };
    struct Level {
        Integer determinant;
        std::size_t count;
    };
    struct Rupture {
        std::vector<Level> levels;
        std::vector<std::vector<VertexId>> strings;
        Integer d_st;
        Integer d_st_reduced;
        ExtendedRational alpha;
    };

    std::vector<VertexId> rupture;
    std::vector<VertexId> core;
    std::vector<VertexId> leaves;
    std::map<VertexId, Leaf> leaf;
    std::map<VertexId, Rupture> at;
};

namespace detail {

struct IndexAnalysis {
    std::vector<std::size_t> rupture;
    std::vector<char> is_rupture;
    std::vector<char> core;
    std::vector<std::size_t> leaves;
    std::map<std::size_t, std::vector<StringLevel>> levels;
    std::map<std::size_t, ExtendedRational> alpha;
    std::map<std::size_t, std::size_t> root;
    std::map<std::size_t, std::vector<std::size_t>> subgraph;
    std::map<std::size_t, Integer> leaf_det;
    std::map<std::size_t, ExtendedRational> beta;
};

inline IndexAnalysis analyze_indices(const DecoratedGraph& g) {
    require_tree(g);
    IndexAnalysis a;
    a.rupture = rupture_indices(g);
    if (a.rupture.size() < 2)
        throw Error(ErrorCode::FewerThanTwoRupture, "analysis needs at least two rupture vertices");
    a.is_rupture.assign(g.size(), 0);
    for (std::size_t r : a.rupture) a.is_rupture[r] = 1;
    a.core = spanning_core(g, a.rupture);
    for (std::size_t r : a.rupture) {
        a.levels[r] = string_levels(g, a.core, r);
        a.alpha[r] = alpha(g, r, a.levels[r]);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!a.core[i]) continue;
        std::size_t core_degree = 0;
        for (std::size_t j : g.neighbors(i)) core_degree += a.core[j] ? 1 : 0;
        if (core_degree <= 1) a.leaves.push_back(i);
    }
    for (std::size_t v : a.leaves) {
        std::size_t prev = v, cur = v;
        for (std::size_t j : g.neighbors(v))
            if (a.core[j]) cur = j;
        while (!a.is_rupture[cur]) {
            std::size_t next = cur;
            for (std::size_t j : g.neighbors(cur))
                if (a.core[j] && j != prev) next = j;
            prev = cur;
            cur = next;
        }
        a.root[v] = cur;
        std::vector<char> removed(g.size(), 0);
        removed[cur] = 1;
        a.subgraph[v] = component_containing(g, removed, v);
        a.leaf_det[v] = determinant(g, mask_of(g, a.subgraph[v]));
        // beta = D / D_St * alpha(root) / alpha(v)
        Rational d(a.leaf_det[v], string_det_product(a.levels[v], false));
        const auto& ar = a.alpha[cur];
        a.beta[v] = ratio(ar ? ExtendedRational(d * *ar) : std::nullopt, a.alpha[v]);
    }
    return a;
}

}  // namespace detail

inline RuptureAnalysis analyze(const DecoratedGraph& g) {
    auto a = detail::analyze_indices(g);
    RuptureAnalysis out;
    auto ids = [&](const std::vector<std::size_t>& xs) {
        std::vector<VertexId> r;
        for (std::size_t x : xs) r.push_back(g.at(x).id);
        return r;
    };
    out.rupture = ids(a.rupture);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (a.core[i]) out.core.push_back(g.at(i).id);
    out.leaves = ids(a.leaves);
    for (std::size_t v : a.leaves)
        out.leaf[g.at(v).id] = {g.at(a.root[v]).id, ids(a.subgraph[v]), a.leaf_det[v], a.beta[v]};
    for (std::size_t r : a.rupture) {
        RuptureAnalysis::Rupture info;
        for (const auto& l : a.levels[r]) {
            info.levels.push_back({l.determinant, l.count()});
            for (const auto& s : l.strings) info.strings.push_back(ids(s));
        }
        info.d_st = detail::string_det_product(a.levels[r], false);
        info.d_st_reduced = detail::string_det_product(a.levels[r], true);
        info.alpha = a.alpha[r];
        out.at[g.at(r).id] = std::move(info);
    }
    std::sort(out.rupture.begin(), out.rupture.end());
    std::sort(out.leaves.begin(), out.leaves.end());
    return out;
}

}  // namespace suspension
