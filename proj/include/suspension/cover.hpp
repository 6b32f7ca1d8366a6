#pragma once

#include "blow_down.hpp"
#include "invariants.hpp"
#include "string_model.hpp"

#include <limits>
#include <set>

namespace suspension {

// The canonical embedded resolution graph of {f + z^n = 0} with the arrow of z,
// together with the graph projection onto the embedded curve graph of f.
struct CoverResult {
    DecoratedGraph graph;
    MarkedCurveGraph base;
    Integer n;
    std::map<VertexId, VertexId> projection;            // lifts of base vertices only
    std::map<VertexId, std::vector<VertexId>> fibers;   // base vertex -> its lifts
    std::set<VertexId> string_vertices;                 // vertices inserted over edges or the arrow

    const std::vector<VertexId>& fiber(VertexId base_vertex) const { return fibers.at(base_vertex); }
    VertexId arrow_vertex() const { return graph.arrows().front().vertex; }
};

// `max_vertices` aborts the construction with InvalidInput once the cover would grow past it.
inline CoverResult canonical_cover(const NewtonPairs& pairs, const Integer& n,
                                   std::size_t max_vertices = std::numeric_limits<std::size_t>::max()) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "suspension exponent must be at least 2");
    CoverResult out;
    out.n = n;
    out.base = min_embedded_graph(pairs);
    const auto& bg = out.base.graph;
    auto& g = out.graph;
    const std::size_t B = bg.size();

    std::vector<Integer> m(B), c(B), lifted_m(B), gcd_at(B);
    std::vector<std::vector<VertexId>> fib(B);
    for (std::size_t i = 0; i < B; ++i) m[i] = *bg.at(i).multiplicity;
    auto over_budget = [&](const Integer& count) {
        if (count > Integer(max_vertices)) throw Error(ErrorCode::InvalidInput, "cover exceeds the vertex budget");
    };

    for (std::size_t i = 0; i < B; ++i) {
        Integer M = m[i];
        Integer gmn = gcd(m[i], n);
        Integer chi_num = (2 - Integer(bg.degree(i))) * gmn;
        for (std::size_t j : bg.neighbors(i)) {
            M = gcd(M, m[j]);
            chi_num += gcd(m[i], m[j], n);
        }
        for (const auto& a : bg.arrows())
            if (a.vertex == bg.at(i).id) {
                M = gcd(M, a.multiplicity);
                chi_num += gcd(m[i], a.multiplicity, n);
            }
        gcd_at[i] = M;
        c[i] = gcd(M, n);
        over_budget(c[i] + g.size());
        auto chi = exact_quotient(chi_num, c[i]);
        if (!chi || (2 - *chi) < 0 || (2 - *chi) % 2 != 0) throw Error(ErrorCode::Internal, "non-integral genus in cover");
        Integer genus = (2 - *chi) / 2;
        lifted_m[i] = m[i] / gmn;
        for (Integer t = 0; t < c[i]; ++t) {
            VertexId x = g.add_vertex(0, genus, lifted_m[i]);
            fib[i].push_back(x);
            out.projection.emplace(x, bg.at(i).id);
        }
        out.fibers.emplace(bg.at(i).id, fib[i]);
    }

    {
        auto expected = predicted_mark_gcds(pairs);
        auto check = [&](VertexId id, const Integer& value) {
            if (gcd_at[bg.index(id)] != value) throw Error(ErrorCode::Internal, "mark gcd differs from closed form");
        };
        for (std::size_t k = 0; k <= out.base.s(); ++k) {
            check(out.base.vbar[k], expected.vbar[k]);
            if (k > 0) check(out.base.v[k], expected.v[k]);
        }
    }

    auto link = [&](VertexId a, VertexId b) {
        if (g.adjacent(a, b)) throw Error(ErrorCode::Internal, "cover would contain a multiple edge");
        g.add_edge(a, b);
    };
    auto lay_string = [&](const StringModel& st, VertexId left) {
        VertexId prev = left;
        for (std::size_t k = 0; k < st.length(); ++k) {
            VertexId x = g.add_vertex(-st.quotients[k], 0, st.multiplicities[k]);
            out.string_vertices.insert(x);
            link(prev, x);
            prev = x;
        }
        return prev;
    };

    for (std::size_t i = 0; i < B; ++i)
        for (std::size_t j : bg.neighbors(i)) {
            if (j < i) continue;
            Integer ce = gcd(gcd(m[i], m[j]), n);
            auto st = string_model(m[i] / ce, m[j] / ce, n / ce);
            over_budget(Integer(g.size()) + ce * st.length());
            const auto ci = c[i].convert_to<std::size_t>();
            const auto cj = c[j].convert_to<std::size_t>();
            const auto count = ce.convert_to<std::size_t>();
            for (std::size_t t = 0; t < count; ++t) {
                VertexId end = lay_string(st, fib[i][t % ci]);
                link(end, fib[j][t % cj]);
            }
        }

    {
        const auto& arrow = bg.arrows().front();
        std::size_t w = bg.index(arrow.vertex);
        auto st = string_model(m[w], arrow.multiplicity, n);
        VertexId end = lay_string(st, fib[w].front());
        g.add_arrow(end, st.right_multiplicity);
    }

    for (std::size_t i = 0; i < B; ++i)
        for (VertexId x : fib[i]) {
            std::size_t xi = g.index(x);
            Integer sum = g.arrow_multiplicity_sum(xi);
            for (std::size_t y : g.neighbors(xi)) sum += *g.at(y).multiplicity;
            auto e = exact_quotient(sum, lifted_m[i]);
            if (!e) throw Error(ErrorCode::NonIntegralSolution, "non-integral self-intersection in cover");
            g.set_self_intersection(x, -*e);
        }
    return out;
}

struct SuspensionResolution {
    CoverResult cover;
    DerivedGraph embedded;           // minimal embedded graph, arrow and multiplicities kept
    DerivedGraph minimal;            // minimal resolution graph, no decorations beyond e and g
    ProvenanceMap cover_to_minimal;  // composed provenance from the canonical cover
    std::size_t extra_blow_downs = 0;
};

inline SuspensionResolution resolve_suspension(const NewtonPairs& pairs, const Integer& n) {
    SuspensionResolution r;
    r.cover = canonical_cover(pairs, n);
    r.embedded = minimalize(r.cover.graph);
    r.minimal = minimalize(without_arrows(r.embedded.graph));
    r.extra_blow_downs = r.embedded.graph.size() - r.minimal.graph.size();
    r.cover_to_minimal = r.embedded.provenance.then(r.minimal.provenance);
    return r;
}

inline DecoratedGraph minimal_resolution_graph(const NewtonPairs& pairs, const Integer& n,
                                               std::size_t max_vertices = std::numeric_limits<std::size_t>::max()) {
    auto cover = canonical_cover(pairs, n, max_vertices);
    auto embedded = minimalize(cover.graph);
    return minimalize(without_arrows(embedded.graph)).graph;
}

}  // namespace suspension
