#pragma once

#include "continued_fraction.hpp"
#include "linear_algebra.hpp"

#include <optional>
#include <string>

namespace suspension {

struct NewtonPair {
    Integer p;
    Integer q;
    friend bool operator==(const NewtonPair&, const NewtonPair&) = default;
};

using NewtonPairs = std::vector<NewtonPair>;

inline std::string format_pairs(const NewtonPairs& pairs) {
    std::string out;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (k) out += ',';
        out += pairs[k].p.str() + ":" + pairs[k].q.str();
    }
    return out;
}

inline std::vector<std::string> validate_newton_pairs(const NewtonPairs& pairs) {
    std::vector<std::string> violations;
    if (pairs.empty()) violations.push_back("at least one pair is required");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [p, q] = pairs[k];
        std::string where = "pair " + std::to_string(k + 1) + " (" + p.str() + ":" + q.str() + ")";
        if (p < 2) violations.push_back(where + ": p must be at least 2");
        if (q < 1) violations.push_back(where + ": q must be at least 1");
        if (p >= 1 && q >= 1 && gcd(p, q) != 1) violations.push_back(where + ": p and q are not coprime");
    }
    if (!pairs.empty() && pairs[0].q <= pairs[0].p) violations.push_back("pair 1: q must exceed p");
    return violations;
}

inline void require_valid_pairs(const NewtonPairs& pairs) {
    auto v = validate_newton_pairs(pairs);
    if (!v.empty()) throw Error(ErrorCode::InvalidNewtonPairs, v.front());
}

// a_1 = q_1, a_{k+1} = q_{k+1} + p_{k+1} p_k a_k; the result is 0-based (a[k-1] = a_k).
inline std::vector<Integer> a_sequence(const NewtonPairs& pairs) {
    require_valid_pairs(pairs);
    std::vector<Integer> a{pairs[0].q};
    for (std::size_t k = 1; k < pairs.size(); ++k) a.push_back(pairs[k].q + pairs[k].p * pairs[k - 1].p * a.back());
    return a;
}

struct NewtonData {
    NewtonPairs pairs;
    std::vector<Integer> a;
    std::optional<Integer> n;

    static NewtonData make(NewtonPairs pairs, std::optional<Integer> n = std::nullopt) {
        if (n && *n < 2) throw Error(ErrorCode::InvalidInput, "suspension exponent must be at least 2");
        NewtonData d;
        d.a = a_sequence(pairs);
        d.pairs = std::move(pairs);
        d.n = std::move(n);
        return d;
    }

    std::size_t s() const { return pairs.size(); }
    const Integer& p(std::size_t k) const { return pairs.at(k - 1).p; }
    const Integer& q(std::size_t k) const { return pairs.at(k - 1).q; }
    const Integer& a_k(std::size_t k) const { return a.at(k - 1); }

    // p_{from} p_{from+1} ... p_s (1 when from > s).
    Integer p_tail(std::size_t from) const {
        Integer r = 1;
        for (std::size_t k = from; k <= s(); ++k) r *= p(k);
        return r;
    }

    friend bool operator==(const NewtonData&, const NewtonData&) = default;
};

inline std::string format_data(const NewtonData& d) {
    std::string out = "pairs=" + format_pairs(d.pairs);
    if (d.n) out += " n=" + d.n->str();
    return out;
}

// Minimal embedded resolution graph of the curve with its distinguished vertices.
// Vectors indexed by k are 1-based: v[k] for 1 <= k <= s (v[0] unused),
// vbar[k] for 0 <= k <= s.
struct MarkedCurveGraph {
    DecoratedGraph graph;
    std::vector<VertexId> v;
    std::vector<VertexId> vbar;
    std::size_t s() const { return v.size() - 1; }
};

inline MarkedCurveGraph min_embedded_graph(const NewtonPairs& pairs) {
    auto data = NewtonData::make(pairs);
    const std::size_t s = data.s();
    MarkedCurveGraph out;
    out.v.resize(s + 1);
    out.vbar.resize(s + 1);
    auto& g = out.graph;

    std::optional<VertexId> prev;
    auto chain = [&](const std::vector<Integer>& u) {
        for (std::size_t i = 1; i < u.size(); ++i) {
            VertexId x = g.add_vertex(-u[i]);
            if (prev)
                g.add_edge(*prev, x);
            else
                out.vbar[0] = x;
            prev = x;
        }
    };

    chain(neg_cf(data.p(1), data.q(1), 1));
    for (std::size_t k = 1; k <= s; ++k) {
        std::vector<Integer> next_u;
        Integer head = -1;
        if (k < s) {
            next_u = neg_cf(data.p(k + 1), data.q(k + 1), 1);
            head = -next_u[0] - 1;
        }
        VertexId vk = g.add_vertex(head);
        g.add_edge(*prev, vk);
        out.v[k] = vk;

        auto vert = neg_cf(data.q(k), data.p(k), 1);
        std::optional<VertexId> below;
        for (std::size_t i = 1; i < vert.size(); ++i) {
            VertexId x = g.add_vertex(-vert[i]);
            if (below)
                g.add_edge(*below, x);
            else
                out.vbar[k] = x;
            below = x;
        }
        g.add_edge(*below, vk);

        prev = vk;
        if (k < s) chain(next_u);
    }
    g.add_arrow(out.v[s], 1);

    g = solve_multiplicities(g);

    auto check = [&](VertexId id, const Integer& expected, const char* what) {
        if (*g.vertex(id).multiplicity != expected)
            throw Error(ErrorCode::Internal, std::string("multiplicity mismatch at ") + what);
    };
    check(out.vbar[0], data.p_tail(1), "vbar_0");
    for (std::size_t k = 1; k <= s; ++k) {
        check(out.v[k], data.a_k(k) * data.p_tail(k), "v_k");
        check(out.vbar[k], data.a_k(k) * data.p_tail(k + 1), "vbar_k");
    }
    if (determinant(without_arrows(g)) != 1) throw Error(ErrorCode::Internal, "embedded graph is not unimodular");
    return out;
}

}  // namespace suspension
