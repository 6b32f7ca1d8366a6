#pragma once

#include "analysis.hpp"
#include "canonical.hpp"
#include "cover.hpp"

#include <array>
#include <set>

namespace suspension {

enum class RecoveryTag { Unique, S1Family, S2Pair, NotRealizable };

inline std::string_view recovery_tag_name(RecoveryTag t) {
    switch (t) {
        case RecoveryTag::Unique: return "unique";
        case RecoveryTag::S1Family: return "s1-family";
        case RecoveryTag::S2Pair: return "s2-pair";
        case RecoveryTag::NotRealizable: return "not-realizable";
    }
    return "unknown";
}

// (h~_1, h_1, h~_1 h_1 l): the Brieskorn exponents (q_1, p_1, n) of one S1 member.
struct S1Triple {
    Integer h_tilde;
    Integer h;
    Integer n;
    friend bool operator==(const S1Triple&, const S1Triple&) = default;
};

struct RecoveryOutcome {
    RecoveryTag tag = RecoveryTag::NotRealizable;
    // Unique: one entry. S2Pair: both members. S1Family: one representative per member.
    std::vector<NewtonData> candidates;
    // Brieskorn outcomes: every (f, n) presentation that reproduces the graph.
    std::vector<NewtonData> realizations;
    std::size_t z_axis_choices = 0;
    Integer genus = 0;
    Integer chain_length = 0;
    std::vector<S1Triple> triples;
    std::string reason;

    bool realizable() const { return tag != RecoveryTag::NotRealizable; }
};

inline std::vector<S1Triple> enumerate_s1_family(const Integer& g, const Integer& l) {
    if (g < 1 || l < 1) throw Error(ErrorCode::InvalidInput, "enumerate_s1_family needs g >= 1 and l >= 1");
    std::vector<S1Triple> out;
    for (const auto& d : divisors(2 * g)) {
        Integer h = d + 1, ht = 2 * g / d + 1;
        if (ht > h && gcd(h, ht) == 1) out.push_back({ht, h, ht * h * l});
    }
    return out;
}

namespace detail {

struct Candidate {
    NewtonPairs pairs;
    Integer n;
    friend bool operator==(const Candidate&, const Candidate&) = default;
};

class Verifier {
public:
    explicit Verifier(const DecoratedGraph& target)
        : form_(canonical_form(target)),
          rupture_(rupture_indices(target).size()),
          size_(target.size()) {}

    bool operator()(const Candidate& c) const {
        if (!validate_newton_pairs(c.pairs).empty() || c.n < 2) return false;
        try {
            // The cover grows like n times the number of pairs plus the curve graph;
            // anything far beyond that cannot minimalize to the target.
            Integer budget = 16 * Integer(size_) + 256 + 4 * c.n * Integer(c.pairs.size());
            for (const auto& pq : c.pairs) budget += 4 * (pq.p + pq.q);
            const std::size_t cap = budget > Integer(std::numeric_limits<std::size_t>::max() / 2)
                                        ? std::numeric_limits<std::size_t>::max() / 2
                                        : budget.convert_to<std::size_t>();
            auto inv = suspension_invariants(c.pairs, c.n);
            Integer lifts = 0;
            for (std::size_t k = 1; k <= inv.s(); ++k) lifts += inv.h_product(k + 1);
            if (lifts > Integer(rupture_ + 1)) return false;
            return canonical_form(minimal_resolution_graph(c.pairs, c.n, cap)) == form_;
        } catch (const std::exception&) {
            return false;
        }
    }

private:
    std::string form_;
    std::size_t rupture_;
    std::size_t size_;
};

struct Failure {
    std::string reason;
};

[[noreturn]] inline void fail(const std::string& reason) { throw Failure{reason}; }

inline Integer exact(const Rational& r, const char* what) {
    auto v = as_integer(r);
    if (!v) fail(std::string(what) + " is not an integer (" + to_string(r) + ")");
    return *v;
}

inline Integer exact(const Integer& num, const Integer& den, const char* what) {
    if (den == 0) fail(std::string(what) + " divides by zero");
    return exact(make_rational(num, den), what);
}

// The other factor c2 of (c1 - 1)(c2 - 1) = 2g.
inline Integer genus_partner(const Integer& c1, const Integer& genus, const char* what) {
    if (c1 < 2) fail(std::string(what) + ": genus formula needs a cardinality of at least 2");
    return exact(2 * genus, c1 - 1, what) + 1;
}

// h_1 < h~_1 from h_1 h~_1 = H and (h_1 - 1)(h~_1 - 1) = 2g.
inline std::pair<Integer, Integer> split_product(const Integer& H, const Integer& genus) {
    Integer sum = H + 1 - 2 * genus;
    Integer disc = sum * sum - 4 * H;
    if (disc <= 0) fail("h_1 and h~_1 are not distinct positive integers");
    auto r = exact_sqrt(disc);
    if (!r || (sum - *r) % 2 != 0) fail("h_1 and h~_1 are not integers");
    Integer h = (sum - *r) / 2, ht = (sum + *r) / 2;
    if (h < 2) fail("h_1 < 2");
    return {h, ht};
}

inline Integer det_or_one(const DecoratedGraph& g, const std::vector<std::size_t>& idx) {
    return idx.empty() ? Integer(1) : determinant_of(g, idx);
}

// ---- Brieskorn helpers ----

using Triple = std::array<Integer, 3>;

// Presentations x^a + y^b + z^c with the z-exponent c and coprime a, b >= 2.
inline std::vector<Candidate> presentations(const Triple& t, std::size_t* positions = nullptr) {
    std::vector<Candidate> out;
    std::size_t count = 0;
    for (std::size_t z = 0; z < 3; ++z) {
        Integer x = t[(z + 1) % 3], y = t[(z + 2) % 3];
        if (x > y) std::swap(x, y);
        if (x < 2 || gcd(x, y) != 1) continue;
        ++count;
        Candidate c{{{x, y}}, t[z]};
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    if (positions) *positions = count;
    return out;
}

inline NewtonData to_data(const Candidate& c) { return NewtonData::make(c.pairs, c.n); }

inline RecoveryOutcome brieskorn_outcome(const std::vector<Triple>& triples, const Verifier& verify, const Integer& genus) {
    struct Member {
        Triple t;
        std::vector<Candidate> verified;
        std::size_t positions;
    };
    std::vector<Member> members;
    for (const auto& t : triples) {
        Member m{t, {}, 0};
        for (auto& c : presentations(t, &m.positions))
            if (verify(c)) m.verified.push_back(c);
        if (!m.verified.empty()) members.push_back(std::move(m));
    }
    if (members.empty()) fail("no Brieskorn exponents reproduce the graph");
    auto representative = [](const Member& m) {
        return *std::max_element(m.verified.begin(), m.verified.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.n < b.n; });
    };
    RecoveryOutcome out;
    out.genus = genus;
    for (const auto& m : members) {
        out.candidates.push_back(to_data(representative(m)));
        for (const auto& c : m.verified) out.realizations.push_back(to_data(c));
        out.z_axis_choices += m.positions;
    }
    if (members.size() == 1) {
        out.tag = RecoveryTag::Unique;
        return out;
    }
    out.tag = RecoveryTag::S1Family;
    for (const auto& m : members) {
        Triple t = m.t;
        std::sort(t.begin(), t.end());
        out.triples.push_back({t[1], t[0], t[2]});
        if (auto l = exact_quotient(t[2], t[0] * t[1]); l && out.chain_length == 0) out.chain_length = *l;
    }
    std::sort(out.triples.begin(), out.triples.end(), [](const S1Triple& a, const S1Triple& b) { return a.h < b.h; });
    return out;
}

// ---- Case A: no rupture vertex ----

inline RecoveryOutcome recover_string(const DecoratedGraph& g, const Verifier& verify) {
    if (g.empty()) fail("empty graph");
    Integer q = determinant(g);
    if (q < 3 || q % 2 == 0) fail("string determinant " + to_string(q) + " is not an odd integer >= 3");
    return brieskorn_outcome({Triple{q, 2, 2}}, verify, 0);
}

// ---- Case B: one rupture vertex ----

inline RecoveryOutcome recover_star(const DecoratedGraph& g, std::size_t centre, const Verifier& verify) {
    const Integer genus = g.at(centre).genus;
    std::vector<char> removed(g.size(), 0);
    removed[centre] = 1;
    std::map<Integer, std::size_t> by_det;
    for (const auto& arm : components_minus(g, removed)) ++by_det[determinant_of(g, arm)];
    if (by_det.size() > 3) fail("more than three string level sets at the central vertex");
    std::vector<std::pair<Integer, std::size_t>> levels(by_det.begin(), by_det.end());

    std::set<Triple> triples;
    const std::size_t m = levels.size();
    // slot 0: the h strings of det a/h~, slot 1: the h~ strings of det p/h, slot 2: the single arrow string.
    std::array<std::size_t, 3> slot{};
    auto consider = [&]() {
        std::array<Integer, 3> D{1, 1, 1};
        std::array<std::optional<Integer>, 3> c{std::nullopt, std::nullopt, Integer(1)};
        for (std::size_t i = 0; i < m; ++i) {
            if (slot[i] == 2 && levels[i].second != 1) return;
            D[slot[i]] = levels[i].first;
            c[slot[i]] = Integer(levels[i].second);
        }
        std::vector<std::pair<Integer, Integer>> counts;
        if (c[0] && c[1]) {
            if ((*c[0] - 1) * (*c[1] - 1) == 2 * genus) counts.push_back({*c[0], *c[1]});
        } else if (c[0] || c[1]) {
            Integer known = c[0] ? *c[0] : *c[1];
            if (known < 2 || (2 * genus) % (known - 1) != 0) return;
            Integer other = 2 * genus / (known - 1) + 1;
            counts.push_back(c[0] ? std::pair{known, other} : std::pair{other, known});
        } else {
            if (genus == 0) return;
            for (const auto& d : divisors(2 * genus)) counts.push_back({d + 1, 2 * genus / d + 1});
        }
        for (const auto& [cA, cP] : counts) {
            Integer a = D[0] * cP, p = D[1] * cA, n = D[2] * cA * cP;
            if (a == p || a < 2 || p < 2 || n < 2 || gcd(a, p) != 1) continue;
            Triple t{a, p, n};
            std::sort(t.begin(), t.end());
            triples.insert(t);
        }
    };
    std::function<void(std::size_t, unsigned)> assign = [&](std::size_t i, unsigned used) {
        if (i == m) return consider();
        for (std::size_t s = 0; s < 3; ++s)
            if (!(used & (1u << s))) {
                slot[i] = s;
                assign(i + 1, used | (1u << s));
            }
    };
    assign(0, 0);
    if (triples.empty()) fail("string level sets do not fit a Brieskorn star");
    return brieskorn_outcome(std::vector<Triple>(triples.begin(), triples.end()), verify, genus);
}

// ---- Case C: at least two rupture vertices ----

struct CaseC {
    std::vector<Candidate> candidates;
    bool s2_route = false;
};

inline std::vector<std::size_t> path_interior(const DecoratedGraph& g, std::size_t a, std::size_t b) {
    auto p = tree_path(g, a, b);
    if (p.size() <= 2) return {};
    return std::vector<std::size_t>(p.begin() + 1, p.end() - 1);
}

inline CaseC recover_tree(const DecoratedGraph& g) {
    auto an = analyze_indices(g);

    // (1) R_1 from genera, else from beta.
    std::vector<std::size_t> r1;
    for (std::size_t v : an.leaves)
        if (g.at(v).genus > 0) r1.push_back(v);
    if (r1.empty()) {
        const auto& first = an.beta.at(an.leaves.front());
        bool all_equal = true;
        for (std::size_t v : an.leaves) all_equal = all_equal && an.beta.at(v) == first;
        if (all_equal) {
            r1 = an.leaves;
        } else {
            std::size_t small = 0;
            for (std::size_t v : an.leaves) {
                const auto& b = an.beta.at(v);
                if (b && *b <= Rational(1, 2))
                    ++small;
                else if (!b || *b > 2)
                    r1.push_back(v);
                else
                    fail("beta " + to_string(b) + " lies between 1/2 and 2");
            }
            if (small != 1) fail("beta invariants do not single out R_1");
        }
    }

    // (2) levels by rupture distance from R_1.
    auto adj = rupture_adjacency(g, an.core, an.is_rupture);
    std::vector<long> dist(g.size(), -1);
    std::vector<std::size_t> queue = r1;
    for (std::size_t v : r1) dist[v] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (std::size_t w : adj[queue[k]])
            if (dist[w] < 0) {
                dist[w] = dist[queue[k]] + 1;
                queue.push_back(w);
            }
    std::vector<std::vector<std::size_t>> R(1);  // R[k] for 1 <= k <= s
    for (std::size_t v : an.rupture) {
        if (dist[v] < 0) fail("rupture vertices are not connected");
        const auto k = static_cast<std::size_t>(dist[v]) + 1;
        if (R.size() <= k) R.resize(k + 1);
        R[k].push_back(v);
    }
    std::size_t s = R.size() - 1;

    DecoratedGraph W;
    bool p_case = false;
    if (R[s].size() == 1) {
        W = g;
    } else if (R[s].size() == 2) {
        // Blow up the middle edge of the path between the two last-level vertices.
        p_case = true;
        auto path = tree_path(g, R[s][0], R[s][1]);
        if (path.size() % 2 != 0) fail("P-case path has no middle edge");
        std::size_t x = path[path.size() / 2 - 1], y = path[path.size() / 2];
        for (const auto& v : g.vertices()) W.add_vertex(v);
        W.set_self_intersection(g.at(x).id, g.at(x).e - 1);
        W.set_self_intersection(g.at(y).id, g.at(y).e - 1);
        for (auto [a, b] : g.edges())
            if (!((a == g.at(x).id && b == g.at(y).id) || (a == g.at(y).id && b == g.at(x).id))) W.add_edge(a, b);
        VertexId nv = W.add_vertex(-1);
        W.add_edge(g.at(x).id, nv);
        W.add_edge(nv, g.at(y).id);
        W.add_arrow(nv, 1);
        R.push_back({W.index(nv)});
        ++s;
    } else {
        fail("last rupture level has " + std::to_string(R[s].size()) + " vertices");
    }
    if (s < 2) fail("fewer than two levels");

    std::vector<std::size_t> all_levels;
    std::vector<char> is_level(W.size(), 0);
    for (std::size_t k = 1; k <= s; ++k)
        for (std::size_t v : R[k]) {
            all_levels.push_back(v);
            is_level[v] = 1;
        }
    const auto core = spanning_core(W, all_levels);
    const auto wadj = rupture_adjacency(W, core, is_level);
    auto st = [&](std::size_t v) { return string_levels(W, core, v); };
    auto neighbour_in = [&](std::size_t v, std::size_t level) {
        for (std::size_t w : wadj[v])
            for (std::size_t u : R[level])
                if (u == w) return w;
        fail("no rupture neighbour on level " + std::to_string(level));
    };
    auto component_det = [&](std::size_t level, std::size_t member) {
        std::vector<char> removed(W.size(), 0);
        for (std::size_t v : R[level]) removed[v] = 1;
        return determinant_of(W, component_containing(W, removed, member));
    };

    // (3)
    std::vector<Integer> h(s + 1, 0), ht(s + 1, 0), p(s + 1, 0);
    for (std::size_t k = 2; k <= s; ++k)
        h[k] = exact(Integer(R[k - 1].size()), Integer(R[k].size()), "h_k");

    // (4)
    for (std::size_t k = 2; k < s; ++k) {
        const std::size_t v = R[k][0];
        auto levels = st(v);
        if (!levels.empty()) {
            if (levels.size() != 1) fail("strings at an intermediate level have several determinants");
            ht[k] = levels[0].count();
            p[k] = levels[0].determinant * h[k];
        } else {
            p[k] = h[k];
            ht[k] = genus_partner(h[k], W.at(v).genus, "h~_k");
        }
    }

    // (5)
    const std::size_t vs = R[s][0];
    const auto st_s = st(vs);
    if (h[s] > 1) {
        ht[s] = genus_partner(h[s], W.at(vs).genus, "h~_s");
    } else {
        if (st_s.empty()) fail("no strings at the last rupture vertex");
        Integer a = 1;
        for (const auto& l : st_s) a *= l.count();
        ht[s] = a;
    }
    const Integer d_st = string_det_product(st_s, false);

    const std::size_t v1 = R[1][0];
    const auto st_1 = st(v1);
    const Integer g1 = W.at(v1).genus;

    CaseC out;
    if (!(s >= 3 || !st_1.empty()) && ht[s] == 1) {
        // (10) the special s = 2 family: {p_2, n} is read only as a set.
        out.s2_route = true;
        const std::size_t u1 = neighbour_in(vs, 1);
        const Integer Dv1 = det_or_one(W, path_interior(W, vs, u1));
        const Integer Dplus = component_det(1, vs);
        const Integer N0 = exact(Dplus * h[2], power(Dv1, h[2] - 1), "n / h_1 h~_1");
        const Integer q2 = exact(Dv1 * h[2], N0, "q_2");
        const Integer a2 = component_det(2, v1);
        const Integer K = a2 - q2;
        std::vector<Integer> dets;
        for (const auto& l : st_s)
            for (std::size_t i = 0; i < l.count(); ++i) dets.push_back(l.determinant);
        if (dets.size() > 2) fail("more than two strings at the last rupture vertex");
        while (dets.size() < 2) dets.push_back(1);
        std::vector<std::pair<Integer, Integer>> orders{{h[2] * dets[0], h[2] * dets[1]}};
        if (dets[0] != dets[1]) orders.push_back({h[2] * dets[1], h[2] * dets[0]});
        for (const auto& [p2, n] : orders) {
            if (p2 < 2 || K <= 0 || K % p2 != 0) continue;
            Integer H = K / p2;
            if (n != N0 * H) continue;
            try {
                auto [h1, ht1] = split_product(H, g1);
                out.candidates.push_back({{{h1, ht1}, {p2, q2}}, n});
            } catch (const Failure&) {
            }
        }
        if (out.candidates.empty()) fail("no solution of the S2 equations");
        return out;
    }

    // (6) / (7): p_s, n and the arrow.
    if (s >= 3 || !st_1.empty()) {
        Integer H;
        if (s >= 3) {
            H = h[s - 1] * ht[s - 1];
        } else if (st_1.size() == 2) {
            H = Integer(st_1[0].count() * st_1[1].count());
        } else if (st_1.size() == 1) {
            Integer c1 = st_1[0].count();
            H = c1 * genus_partner(c1, g1, "h_1 h~_1");
        } else {
            fail("more than two string level sets on R_1");
        }
        const std::size_t u = neighbour_in(vs, s - 1);
        const Integer D = det_or_one(W, path_interior(W, vs, u));
        const Integer Dplus = component_det(s - 1, vs);
        p[s] = exact(Rational(power(D, h[s] - 1) * d_st * h[s] * ht[s], Dplus * H), "p_s");
    } else {
        auto root = exact_root(string_det_product(st_s, true), static_cast<unsigned>(ht[s] - 1));
        if (!root) fail("reduced string determinant is not a perfect power");
        p[s] = *root * h[s];
    }
    const Integer ps_prime = exact(p[s], h[s], "p'_s");
    if (ps_prime < 1) fail("p'_s < 1");
    const Integer Dvs = exact(d_st, power(ps_prime, ht[s]), "D(v_s)");
    const Integer n = Dvs * h[s] * ht[s];

    DecoratedGraph Wa = W;
    if (!p_case) {
        std::size_t at = vs;
        if (Dvs != 1) {
            bool found = false;
            for (const auto& l : st_s)
                if (l.determinant == Dvs && !found) {
                    at = l.strings.front().back();
                    found = true;
                }
            if (!found) fail("no string carries the arrow determinant");
        }
        Wa.add_arrow(W.at(at).id, 1);
    }

    // (8)
    Integer q1;
    if (!st_1.empty()) {
        if (st_1.size() > 2) fail("more than two string level sets on R_1");
        Integer D1 = st_1[0].determinant, c1 = st_1[0].count(), D2 = 1, c2;
        if (st_1.size() == 2) {
            D2 = st_1[1].determinant;
            c2 = st_1[1].count();
        } else {
            c2 = genus_partner(c1, g1, "h~_1");
        }
        Integer x = D1 * c2, y = D2 * c1;
        if (x == y) fail("a_1 and p_1 candidates coincide");
        if (x > y) {
            h[1] = c1, ht[1] = c2, q1 = x, p[1] = y;
        } else {
            h[1] = c2, ht[1] = c1, q1 = y, p[1] = x;
        }
    } else {
        const std::size_t u = neighbour_in(v1, 2);
        const Integer Dv1 = det_or_one(W, path_interior(W, v1, u));
        Rational A(Dv1 * ht[2], n);
        for (std::size_t k = 2; k <= s; ++k) A *= h[k];
        const Integer a2 = component_det(2, v1) * ht[2];
        const Integer H = exact(Rational(a2) / (A + p[2]), "h_1 h~_1");
        auto [h1, ht1] = split_product(H, g1);
        h[1] = h1, ht[1] = ht1, p[1] = h1, q1 = ht1;
    }

    // (9) a_k from the multiplicities of the arrowed graph.
    DecoratedGraph solved;
    try {
        solved = solve_multiplicities(Wa);
    } catch (const Error& e) {
        fail(std::string("multiplicities: ") + e.what());
    }
    std::vector<Integer> pp(s + 2, 1), a(s + 1, 0);
    for (std::size_t k = 1; k <= s; ++k) pp[k] = exact(p[k], h[k], "p'_k");
    NewtonPairs pairs;
    for (std::size_t k = 1; k <= s; ++k) {
        Integer tail = 1;
        for (std::size_t j = k; j <= s; ++j) tail *= pp[j];
        a[k] = exact(*solved.at(R[k][0]).multiplicity, tail, "a'_k") * ht[k];
        Integer q = k == 1 ? a[1] : a[k] - p[k] * p[k - 1] * a[k - 1];
        pairs.push_back({p[k], q});
    }
    if (a[1] != q1) fail("multiplicities disagree with the string data at R_1");
    out.candidates.push_back({pairs, n});
    return out;
}

}  // namespace detail

// Newton pairs and n of f + z^n from its minimal resolution graph. Arrows and
// multiplicities on the input are ignored.
inline RecoveryOutcome recover(const DecoratedGraph& input, std::optional<Integer> milnor = std::nullopt) {
    const DecoratedGraph g = without_arrows(input);
    require_tree(g);
    if (!is_negative_definite(g)) throw Error(ErrorCode::NotNegativeDefinite, "intersection form is not negative definite");
    if (!is_minimal(g)) throw Error(ErrorCode::InvalidInput, "graph is not minimal");

    detail::Verifier verify(g);
    RecoveryOutcome out;
    try {
        const auto rupture = rupture_indices(g);
        if (rupture.empty()) {
            out = detail::recover_string(g, verify);
        } else if (rupture.size() == 1) {
            out = detail::recover_star(g, rupture.front(), verify);
        } else {
            auto c = detail::recover_tree(g);
            std::vector<detail::Candidate> good;
            for (const auto& cand : c.candidates)
                if (verify(cand) && std::find(good.begin(), good.end(), cand) == good.end()) good.push_back(cand);
            if (good.empty()) detail::fail("reconstructed data does not reproduce the graph");
            for (const auto& cand : good) out.candidates.push_back(detail::to_data(cand));
            out.tag = good.size() == 1 ? RecoveryTag::Unique : RecoveryTag::S2Pair;
            if (out.tag == RecoveryTag::S2Pair)
                for (const auto& v : g.vertices()) out.genus = std::max(out.genus, v.genus);
        }
    } catch (const detail::Failure& f) {
        RecoveryOutcome no;
        no.reason = f.reason;
        return no;
    }

    if (milnor && (out.tag == RecoveryTag::S1Family || out.tag == RecoveryTag::S2Pair)) {
        std::vector<NewtonData> match;
        for (const auto& c : out.candidates)
            if (milnor_number(c.pairs, *c.n) == *milnor) match.push_back(c);
        if (match.empty()) {
            RecoveryOutcome no;
            no.reason = "no candidate has Milnor number " + to_string(*milnor);
            return no;
        }
        if (match.size() == 1) {
            RecoveryOutcome one;
            one.tag = RecoveryTag::Unique;
            one.candidates = match;
            if (out.tag == RecoveryTag::S1Family) {
                std::array<Integer, 3> chosen{match[0].p(1), match[0].q(1), *match[0].n};
                std::sort(chosen.begin(), chosen.end());
                for (const auto& r : out.realizations) {
                    std::array<Integer, 3> t{r.p(1), r.q(1), *r.n};
                    std::sort(t.begin(), t.end());
                    if (t == chosen) one.realizations.push_back(r);
                }
                detail::presentations(chosen, &one.z_axis_choices);
                one.genus = out.genus;
            }
            return one;
        }
        out.candidates = match;
    }
    return out;
}

struct Realizability {
    bool yes = false;
    RecoveryOutcome outcome;
    std::string reason;
};

inline Realizability realizable(const DecoratedGraph& graph) {
    Realizability r;
    try {
        r.outcome = recover(graph);
    } catch (const std::exception& e) {
        r.reason = e.what();
        return r;
    }
    if (!r.outcome.realizable()) {
        r.reason = r.outcome.reason;
        return r;
    }
    const auto target = without_arrows(graph);
    for (const auto& c : r.outcome.candidates)
        if (!are_isomorphic(minimal_resolution_graph(c.pairs, *c.n), target)) {
            r.reason = "candidate " + format_data(c) + " does not reproduce the graph";
            return r;
        }
    r.yes = true;
    return r;
}

// The shape left by n = p_s = 2 on the minimal embedded graph: a rational -1 vertex
// with the arrow, two isomorphic branches, and heads of self-intersection <= -3.
inline bool detect_p_case(const DecoratedGraph& g) {
    if (!is_tree(g) || g.arrows().size() != 1) return false;
    const VertexId av = g.arrows().front().vertex;
    const std::size_t i = g.index(av);
    const auto& v = g.at(i);
    if (v.genus != 0 || v.e != -1 || g.edge_degree(i) != 2) return false;
    for (std::size_t j : g.neighbors(i))
        if (g.at(j).e > -3) return false;
    auto parts = connected_components_minus(without_arrows(g), av);
    if (parts.size() != 2) return false;
    return canonical_form(parts[0]) == canonical_form(parts[1]);
}

}  // namespace suspension
