// One line per acceptance criterion; exit status is the number of failures.

#include "oracles.hpp"

#include <suspension.hpp>
#include <suspension/cli.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <numeric>

using namespace suspension;
using namespace testing_support;

namespace {

const std::filesystem::path golden_dir = SUSPENSION_GOLDEN_DIR;

struct Instance {
    NewtonPairs pairs;
    Integer n;
    std::string label() const { return format_pairs(pairs) + ";" + n.str(); }
    NewtonData data() const { return NewtonData::make(pairs, n); }
};

struct Verdict {
    bool ok = true;
    std::string detail;
    std::size_t checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string run_cli(const std::vector<std::string>& args, const std::string& in = "") {
    std::istringstream is(in);
    std::ostringstream os, es;
    cli::run(args, is, os, es);
    return os.str();
}

std::string golden(const std::string& name) {
    std::ifstream f(golden_dir / name, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

NewtonPairs P(std::initializer_list<std::pair<int, int>> xs) {
    NewtonPairs out;
    for (auto [p, q] : xs) out.push_back({p, q});
    return out;
}

std::vector<NewtonPairs> pair_sequences(std::size_t s, int pmax, int qmax) {
    std::vector<NewtonPairs> out, frontier;
    for (int p = 2; p <= pmax; ++p)
        for (int q = p + 1; q <= qmax; ++q)
            if (std::gcd(p, q) == 1) frontier.push_back(P({{p, q}}));
    for (std::size_t len = 1; len <= s; ++len) {
        out.insert(out.end(), frontier.begin(), frontier.end());
        if (len == s) break;
        std::vector<NewtonPairs> next;
        for (const auto& f : frontier)
            for (int p = 2; p <= pmax; ++p)
                for (int q = 1; q <= qmax; ++q)
                    if (std::gcd(p, q) == 1) {
                        auto g = f;
                        g.push_back({p, q});
                        next.push_back(g);
                    }
        frontier = std::move(next);
    }
    return out;
}

bool contains(const RecoveryOutcome& o, const NewtonData& d) {
    return std::find(o.candidates.begin(), o.candidates.end(), d) != o.candidates.end() ||
           std::find(o.realizations.begin(), o.realizations.end(), d) != o.realizations.end();
}

std::vector<std::pair<int, int>> s1_members(const Integer& genus) {
    std::vector<std::pair<int, int>> out;
    const int g2 = static_cast<int>(2 * genus);
    for (int h = 2; h <= g2 + 1; ++h)
        for (int ht = h + 1; ht <= g2 + 1; ++ht)
            if ((h - 1) * (ht - 1) == g2 && std::gcd(h, ht) == 1) out.emplace_back(h, ht);
    return out;
}

bool star_condition(const Instance& c) {
    if (c.pairs.size() != 2) return false;
    using boost::multiprecision::gcd;
    const Integer p1 = c.pairs[0].p, a1 = c.pairs[0].q, p2 = c.pairs[1].p;
    const Integer a2 = c.pairs[1].q + p2 * p1 * a1;
    return gcd(c.n, a2) == 1 && c.n % (gcd(c.n, p2) * a1 * p1) == 0;
}

std::optional<Instance> star_partner(const Instance& c) {
    if (!star_condition(c)) return std::nullopt;
    const Integer p1 = c.pairs[0].p, q1 = c.pairs[0].q, p2 = c.pairs[1].p, q2 = c.pairs[1].q;
    if ((p1 * q1 * p2) % c.n != 0) return std::nullopt;
    const Integer xy = p1 * q1 * p2 / c.n;
    for (Integer x = 2; x * x < xy; ++x) {
        if (xy % x != 0) continue;
        const Integer y = xy / x;
        if ((x - 1) * (y - 1) == (p1 - 1) * (q1 - 1) && boost::multiprecision::gcd(x, y) == 1 &&
            boost::multiprecision::gcd(c.n, q2) == 1)
            return Instance{{{x, y}, {c.n, q2}}, p2};
    }
    return std::nullopt;
}

// Members of the ambiguity family of c, by the oracles above; size 1 means unambiguous.
std::vector<Instance> predicted_family(const Instance& c) {
    std::vector<Instance> out{c};
    if (c.pairs.size() == 1) {
        const Integer p = c.pairs[0].p, q = c.pairs[0].q;
        if (c.n % p != 0 || c.n % q != 0) return out;
        const Integer l = c.n / (p * q);
        out.clear();
        for (auto [h, ht] : s1_members((p - 1) * (q - 1) / 2)) out.push_back({P({{h, ht}}), h * ht * l});
    } else if (auto partner = star_partner(c)) {
        out.push_back(*partner);
    }
    return out;
}

DecoratedGraph figure(int arms, int weight) {
    DecoratedGraph g;
    VertexId centre = g.add_vertex(-1);
    for (int k = 0; k < arms; ++k) g.add_edge(centre, g.add_vertex(-weight, 6));
    g.add_edge(centre, g.add_vertex(-21));
    VertexId prev = centre;
    for (int k = 0; k < 19; ++k) {
        VertexId x = g.add_vertex(-2);
        g.add_edge(prev, x);
        prev = x;
    }
    return g;
}

Verdict golden_pair(const std::vector<std::string>& a_args, const std::vector<std::string>& b_args, const std::string& file,
                    const std::optional<DecoratedGraph>& shape) {
    Verdict v;
    const auto a = run_cli(a_args), b = run_cli(b_args), g = golden(file);
    v.expect(!g.empty(), "golden file " + file + " missing");
    v.expect(a == g, "first presentation differs from " + file);
    v.expect(b == g, "second presentation differs from " + file);
    if (shape) v.expect(are_isomorphic(parse_graph(a), *shape), "graph does not have the figure's shape");
    v.detail = v.ok ? "bit-exact against " + file : v.detail;
    return v;
}

Integer measured_det(const DecoratedGraph& g, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return 1;
    return determinant(g, mask_of(g, idx));
}

// Criteria 6 and 7 on one canonical cover.
void check_cover(const Instance& c, const SuspensionResolution& res, Verdict& det6, Verdict& fib7) {
    const auto x = expected_for(c.pairs, c.n);
    const std::size_t s = x.s;
    const auto& cover = res.cover;
    const auto& g = cover.graph;
    const std::string at = c.label();

    auto fiber = [&](VertexId w, const Integer& count, const Integer& mult, const Integer& genus, const std::string& name) {
        const auto& fib = cover.fiber(w);
        fib7.expect(Integer(fib.size()) == count, at + ": count of " + name);
        for (VertexId v : fib) {
            fib7.expect(*g.vertex(v).multiplicity == mult, at + ": multiplicity of " + name);
            fib7.expect(g.vertex(v).genus == genus, at + ": genus of " + name);
        }
    };
    fiber(cover.base.vbar[0], prod_range(x.h, 1, s), prod_range(x.pp, 1, s), 0, "vbar_0");
    for (std::size_t k = 1; k <= s; ++k) {
        const std::string ks = std::to_string(k);
        fiber(cover.base.v[k], prod_range(x.h, k + 1, s), x.ap[k] * prod_range(x.pp, k, s), (x.h[k] - 1) * (x.ht[k] - 1) / 2,
              "v_" + ks);
        fiber(cover.base.vbar[k], x.ht[k] * prod_range(x.h, k + 1, s), x.ap[k] * prod_range(x.pp, k + 1, s), 0, "vbar_" + ks);
    }
    bool qhs = true;
    for (std::size_t k = 1; k <= s; ++k) qhs = qhs && (x.h[k] - 1) * (x.ht[k] - 1) == 0;
    fib7.expect(is_rational_homology_sphere(without_arrows(g)) == qhs, at + ": QHS of the cover");
    fib7.expect(is_rational_homology_sphere(res.minimal.graph) == qhs, at + ": QHS of the minimal graph");

    const std::size_t arrow = g.index(cover.arrow_vertex());
    const auto parent = bfs_parents(g, arrow);
    const Integer Dvs = c.n / (x.h[s] * x.ht[s]);
    for (VertexId v : cover.fiber(cover.base.vbar[0]))
        det6.expect(measured_det(g, string_toward_arrow(g, parent, g.index(v), true, false)) == x.ap[1], at + ": D(vbar_0)");
    for (std::size_t k = 1; k <= s; ++k)
        for (VertexId v : cover.fiber(cover.base.vbar[k]))
            det6.expect(measured_det(g, string_toward_arrow(g, parent, g.index(v), true, false)) == x.pp[k], at + ": D(vbar_k)");
    for (VertexId v : cover.fiber(cover.base.v[s]))
        det6.expect(measured_det(g, string_toward_arrow(g, parent, g.index(v), false, true)) == Dvs, at + ": D(v_s)");
    for (std::size_t k = 1; k < s; ++k) {
        const Integer expected = c.n * x.q[k + 1] / (x.d[k - 1] * x.ht[k] * x.ht[k + 1]);
        for (VertexId v : cover.fiber(cover.base.v[k]))
            det6.expect(measured_det(g, string_toward_arrow(g, parent, g.index(v), false, false)) == expected, at + ": D(v_k)");
    }
    if (s < 2) return;

    // D_-(v_k) by the inductive formula, D_-(v_2) and D_+(v_{s-1}) in closed form.
    std::vector<Rational> minus(s + 1, Rational(0));
    minus[1] = Rational(x.ap[1]);
    for (std::size_t k = 2; k <= s; ++k) {
        Rational base = minus[k - 1] / Rational(x.ap[k - 1]), r = 1;
        for (Integer e = 0; e < x.h[k - 1]; ++e) r *= base;
        minus[k] = r * Rational(power(x.ap[k - 1], x.h[k - 1] - 1) * power(x.pp[k - 1], x.ht[k - 1] - 1) * x.ap[k]);
    }
    const std::size_t leaf0 = g.index(cover.fiber(cover.base.vbar[0]).front());
    for (std::size_t k = 1; k <= s; ++k) {
        std::vector<char> removed(g.size(), 0);
        for (VertexId v : cover.fiber(cover.base.v[k])) removed[g.index(v)] = 1;
        std::vector<std::size_t> lower, upper;
        for (const auto& comp : pieces(g, removed)) {
            if (std::find(comp.begin(), comp.end(), leaf0) != comp.end()) lower = comp;
            if (std::find(comp.begin(), comp.end(), arrow) != comp.end()) upper = comp;
        }
        const Integer dm = measured_det(g, lower);
        det6.expect(Rational(dm) == minus[k], at + ": recursion for D_-(v_" + std::to_string(k) + ")");
        if (k == 2)
            det6.expect(dm == power(x.ap[1], x.h[1] - 1) * power(x.pp[1], x.ht[1] - 1) * x.ap[2], at + ": D_-(v_2)");
        if (k + 1 == s) {
            const Integer Dprev = c.n * x.q[s] / (x.d[s - 2] * x.ht[s - 1] * x.ht[s]);
            const Integer closed =
                c.n * power(Dprev, x.h[s] - 1) * power(x.pp[s], x.ht[s] - 1) / (x.h[s] * x.h[s - 1] * x.ht[s - 1]);
            det6.expect(measured_det(g, upper) == closed, at + ": D_+(v_{s-1})");
        }
    }
}

Verdict graph_core_suite() {
    Verdict v;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_definite_tree(rng, size(rng));
        const auto inv = gauss_inverse(negated_form(g));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                v.expect(inverse_entry(g, g.at(i).id, g.at(j).id) == -inv[i][j], "inverse_entry disagrees with exact inversion");
        v.expect(Rational(determinant(g)) == gauss_determinant(negated_form(g)), "determinant disagrees with elimination");

        auto blown = g;
        for (int k = 0; k < 1 + trial % 4; ++k) blown = random_blow_up(rng, blown);
        v.expect(determinant(blown) == determinant(g), "blow-up changed the determinant");
        v.expect(first_homology(blown) == first_homology(g), "blow-up changed H_1");
        const auto m = minimalize(blown).graph;
        v.expect(is_minimal(m), "minimalize left a contractible vertex");
        v.expect(canonical_form(m) == canonical_form(minimalize(relabeled(rng, blown)).graph), "minimalize is not confluent");
        if (is_minimal(g)) v.expect(are_isomorphic(m, g), "minimalize did not return the minimal start");
    }
    std::uniform_int_distribution<int> weight(-4, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 9;
        auto edges = random_tree_edges(rng, n);
        DecoratedGraph g;
        std::vector<VertexId> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back(g.add_vertex(weight(rng)));
        for (auto [a, b] : edges) g.add_edge(ids[a], ids[b]);
        v.expect(is_negative_definite(g) == positive_definite(negated_form(g)), "definiteness gate disagrees with Sylvester");
    }
    return v;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, Verdict>> results;
    auto guarded = [&](const std::string& name, const std::function<Verdict()>& body) {
        Verdict v;
        try {
            v = body();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        results.emplace_back(name, v);
    };

    guarded("genus-6 pair golden", [] {
        return golden_pair({"suspend", "--pairs", "3:7,20:1", "--n", "21", "--minimal"},
                           {"suspend", "--pairs", "4:5,21:1", "--n", "20", "--minimal"}, "genus6_pair.graph", figure(1, 421));
    });
    guarded("doubled genus-6 pair golden", [] {
        return golden_pair({"suspend", "--pairs", "3:7,40:1", "--n", "42", "--minimal"},
                           {"suspend", "--pairs", "4:5,42:1", "--n", "40", "--minimal"}, "genus6_pair_doubled.graph", figure(2, 841));
    });
    guarded("brieskorn genus-6 golden", [] {
        DecoratedGraph one;
        one.add_vertex(-1, 6);
        return golden_pair({"suspend", "--pairs", "3:7", "--n", "21", "--minimal"}, {"suspend", "--pairs", "4:5", "--n", "20", "--minimal"},
                           "brieskorn_genus6.graph", one);
    });

    // Criteria 4, 6, 7, 8 share one pass over the sweep.
    Verdict sweep4, det6, fib7, pcase8;
    std::vector<Instance> ambiguous;
    std::size_t instances = 0, families = 0, pcases = 0;
    try {
        for (const auto& pairs : pair_sequences(3, 5, 7))
            for (int n = 2; n <= 10; ++n) {
                const Instance c{pairs, n};
                ++instances;
                const auto res = resolve_suspension(c.pairs, c.n);
                check_cover(c, res, det6, fib7);

                const bool p_case = n == 2 && pairs.back().p == 2;
                pcases += p_case ? 1 : 0;
                pcase8.expect(detect_p_case(res.embedded.graph) == p_case, c.label() + ": detect_p_case");
                pcase8.expect((res.extra_blow_downs == 1) == p_case, c.label() + ": extra blow-down");

                const auto family = predicted_family(c);
                const auto o = recover(res.minimal.graph);
                if (family.size() == 1) {
                    const bool exact = o.tag == RecoveryTag::Unique &&
                                       (o.candidates.front() == c.data() || (pairs.size() == 1 && contains(o, c.data())));
                    sweep4.expect(exact, c.label() + ": expected unique recovery, got " + std::string(recovery_tag_name(o.tag)));
                } else {
                    ++families;
                    ambiguous.push_back(c);
                    const auto tag = pairs.size() == 1 ? RecoveryTag::S1Family : RecoveryTag::S2Pair;
                    sweep4.expect(o.tag == tag, c.label() + ": expected an ambiguity family");
                    for (const auto& m : family) sweep4.expect(contains(o, m.data()), c.label() + ": family misses " + m.label());
                }
            }
    } catch (const std::exception& e) {
        for (Verdict* v : {&sweep4, &det6, &fib7, &pcase8}) v->expect(false, std::string("exception: ") + e.what());
    }
    sweep4.detail = sweep4.ok ? std::to_string(instances) + " instances, " + std::to_string(families) + " ambiguous" : sweep4.detail;
    results.emplace_back("recovery round-trip sweep", sweep4);

    guarded("milnor disambiguation", [&] {
        Verdict v;
        std::vector<Instance> cases = ambiguous;
        for (int genus = 1; genus <= 8; ++genus) {
            auto members = s1_members(genus);
            if (members.size() < 2) continue;
            for (int l = 1; l <= 3; ++l)
                for (auto [h, ht] : members) cases.push_back({P({{h, ht}}), h * ht * l});
        }
        for (int p1 = 2; p1 <= 5; ++p1)
            for (int q1 = p1 + 1; q1 <= 9; ++q1) {
                if (std::gcd(p1, q1) != 1) continue;
                for (int p2 = 2; p2 <= 45; ++p2)
                    for (int q2 = 1; q2 <= 2; ++q2)
                        for (int m = 1; m <= 3; ++m) {
                            Instance c{P({{p1, q1}, {p2, q2}}), p1 * q1 * m};
                            if (std::gcd(p2, q2) == 1 && star_partner(c)) cases.push_back(c);
                        }
            }
        for (const auto& c : cases) {
            const auto g = minimal_resolution_graph(c.pairs, c.n);
            const auto o = recover(g);
            v.expect(o.tag == RecoveryTag::S1Family || o.tag == RecoveryTag::S2Pair, c.label() + ": not an ambiguity family");
            std::set<Integer> mus;
            for (const auto& m : o.candidates) mus.insert(milnor_number(m.pairs, *m.n));
            v.expect(mus.size() == o.candidates.size() && mus.size() >= 2, c.label() + ": Milnor numbers collide");
            const auto one = recover(g, milnor_number(c.pairs, c.n));
            v.expect(one.tag == RecoveryTag::Unique && contains(one, c.data()), c.label() + ": Milnor number did not select it");
        }
        const Integer mu1 = milnor_number(P({{3, 7}, {20, 1}}), 21), mu2 = milnor_number(P({{4, 5}, {21, 1}}), 20);
        v.expect(mu1 == 164400 && mu2 == 164388, "genus-6 pair Milnor numbers");
        v.expect(milnor_number_s2(6, 20, 421, 21) == mu1 && milnor_number_s2(6, 21, 421, 20) == mu2, "s2 addendum formula");
        v.expect(milnor_number_s1(3, 7, 1) == milnor_number(P({{3, 7}}), 21), "s1 addendum formula");
        const auto ex1 = minimal_resolution_graph(P({{3, 7}, {20, 1}}), 21);
        const auto a = recover(ex1, mu1), b = recover(ex1, mu2);
        v.expect(a.tag == RecoveryTag::Unique && a.candidates.front() == NewtonData::make(P({{3, 7}, {20, 1}}), 21), "genus-6 pair with 164400");
        v.expect(b.tag == RecoveryTag::Unique && b.candidates.front() == NewtonData::make(P({{4, 5}, {21, 1}}), 20), "genus-6 pair with 164388");
        if (v.ok)
            v.detail = std::to_string(ambiguous.size()) + " from the sweep plus " + std::to_string(cases.size() - ambiguous.size()) +
                       " extended family members; genus-6 pair: 164400 vs 164388";
        return v;
    });

    det6.detail = det6.ok ? std::to_string(det6.checks) + " determinant comparisons" : det6.detail;
    results.emplace_back("determinant-formula oracles", det6);
    fib7.detail = fib7.ok ? std::to_string(fib7.checks) + " fibre, genus, multiplicity and QHS comparisons" : fib7.detail;
    results.emplace_back("genus/count/multiplicity oracles", fib7);
    pcase8.detail = pcase8.ok ? std::to_string(pcases) + " P-case instances among " + std::to_string(instances) : pcase8.detail;
    results.emplace_back("P-case", pcase8);

    guarded("E8 sanity", [] {
        Verdict v;
        const auto g = minimal_resolution_graph(P({{2, 3}}), 5);
        v.expect(are_isomorphic(g, e8()), "not the E8 plumbing");
        v.expect(determinant(g) == 1, "determinant is not 1");
        v.expect(is_integral_homology_sphere(g), "not an integral homology sphere");
        const auto o = recover(g);
        v.expect(o.tag == RecoveryTag::Unique && o.z_axis_choices == 3, "expected a unique Brieskorn outcome with 3 z-axis choices");
        for (const auto& [p, q, n] : std::vector<std::array<int, 3>>{{2, 3, 5}, {2, 5, 3}, {3, 5, 2}})
            v.expect(contains(o, NewtonData::make(P({{p, q}}), n)), "missing presentation");
        if (v.ok) v.detail = "det 1, ZHS, {2,3,5} with 3 z-axis choices";
        return v;
    });
    guarded("graph-core property suite", [] {
        auto v = graph_core_suite();
        if (v.ok) v.detail = std::to_string(v.checks) + " checks on random trees up to 12 vertices";
        return v;
    });

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, v] = results[i];
        failures += v.ok ? 0 : 1;
        std::cout << "criterion " << i + 1 << " [" << (v.ok ? "PASS" : "FAIL") << "] " << name << ": " << v.detail << "\n";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "elapsed " << std::fixed << std::setprecision(1) << seconds << " s\n";
    return failures;
}
