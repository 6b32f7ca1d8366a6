#pragma once

#include "document.hpp"
#include "recognizer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

namespace suspension::cli {

inline Integer parse_uint(const std::string& text, const char* what) {
    try {
        return suspension::detail::parse_integer(text, 0, false);
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidInput, std::string(what) + " must be a non-negative integer, got '" + text + "'");
    }
}

inline NewtonPairs parse_pairs(const std::string& text) {
    NewtonPairs pairs;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::InvalidNewtonPairs, "expected p:q, got '" + item + "'");
        pairs.push_back({parse_uint(item.substr(0, colon), "p"), parse_uint(item.substr(colon + 1), "q")});
    }
    auto problems = validate_newton_pairs(pairs);
    if (!problems.empty()) throw Error(ErrorCode::InvalidNewtonPairs, problems.front());
    return pairs;
}

inline std::string format_candidate(const NewtonData& d) { return "pairs=" + format_pairs(d.pairs) + " n=" + d.n->str(); }

inline void print_outcome(const RecoveryOutcome& o, std::ostream& out) {
    out << "outcome " << recovery_tag_name(o.tag) << "\n";
    for (const auto& c : o.candidates) out << "candidate " << format_candidate(c) << "\n";
    for (const auto& r : o.realizations) out << "realization " << format_candidate(r) << "\n";
    if (!o.realizations.empty()) out << "z-axis-choices " << o.z_axis_choices << "\n";
    if (o.tag == RecoveryTag::S1Family) {
        out << "genus " << o.genus << "\n";
        out << "chain " << o.chain_length << "\n";
        for (const auto& t : o.triples) out << "triple " << t.h_tilde << " " << t.h << " " << t.n << "\n";
    }
    if (!o.reason.empty()) out << "reason " << o.reason << "\n";
}

inline bool contains(const RecoveryOutcome& o, const NewtonData& d) {
    for (const auto& c : o.candidates)
        if (c == d) return true;
    for (const auto& c : o.realizations)
        if (c == d) return true;
    return false;
}

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
}

}  // namespace detail

// Exit codes: 0 success, 1 not realizable / round-trip failure, 2 invalid input.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resolution graphs of f(x,y) + z^n and their inversion", "suspension"};
    app.require_subcommand(1);

    std::string pairs_text, n_text, input = "-", milnor_text, subgraph_text, g_text, l_text;
    bool canonical = false, minimal = false, with_arrow = false;

    auto* plane = app.add_subcommand("plane-curve", "minimal embedded resolution graph of the plane curve");
    plane->add_option("--pairs", pairs_text, "Newton pairs p:q,...")->required();

    auto* suspend = app.add_subcommand("suspend", "resolution graph of f + z^n");
    suspend->add_option("--pairs", pairs_text, "Newton pairs p:q,...")->required();
    suspend->add_option("--n", n_text, "exponent of z")->required();
    auto* can_flag = suspend->add_flag("--canonical", canonical, "the cover graph before minimalization");
    auto* min_flag = suspend->add_flag("--minimal", minimal, "the minimal graph (default)");
    can_flag->excludes(min_flag);
    suspend->add_flag("--with-arrow", with_arrow, "keep the arrow of z and the multiplicities");

    auto* minimalize_cmd = app.add_subcommand("minimalize", "blow down every contractible vertex");
    minimalize_cmd->add_option("--in", input, "graph document ('-' for stdin)");

    auto* recover_cmd = app.add_subcommand("recover", "recover Newton pairs and n from a minimal graph");
    recover_cmd->add_option("--in", input, "graph document ('-' for stdin)");
    recover_cmd->add_option("--milnor", milnor_text, "Milnor number of f + z^n");

    auto* homology = app.add_subcommand("homology", "first homology of the plumbed manifold");
    homology->add_option("--in", input, "graph document ('-' for stdin)");

    auto* det_cmd = app.add_subcommand("det", "determinant of the negated intersection matrix");
    det_cmd->add_option("--in", input, "graph document ('-' for stdin)");
    det_cmd->add_option("--subgraph", subgraph_text, "comma-separated vertex ids");

    auto* roundtrip = app.add_subcommand("roundtrip", "construct, then recover, and compare");
    roundtrip->add_option("--pairs", pairs_text, "Newton pairs p:q,...")->required();
    roundtrip->add_option("--n", n_text, "exponent of z")->required();

    auto* realize = app.add_subcommand("realize", "decide whether a graph comes from some f + z^n");
    realize->add_option("--in", input, "graph document ('-' for stdin)");

    auto* enumerate = app.add_subcommand("enumerate-s1", "Brieskorn triples sharing the [g], -1, (-2)^(l-1) graph");
    enumerate->add_option("--g", g_text, "genus")->required();
    enumerate->add_option("--l", l_text, "chain parameter")->required();

    std::vector<const char*> argv{"suspension"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto load = [&]() { return parse_document(detail::read_input(input, in)); };

    try {
        if (plane->parsed()) {
            auto m = min_embedded_graph(parse_pairs(pairs_text));
            GraphDocument doc{m.graph, {}};
            for (std::size_t k = 0; k < m.vbar.size(); ++k) doc.marks.emplace_back("vbar" + std::to_string(k), m.vbar[k]);
            for (std::size_t k = 1; k < m.v.size(); ++k) doc.marks.emplace_back("v" + std::to_string(k), m.v[k]);
            out << serialize_document(doc);
            return 0;
        }
        if (suspend->parsed()) {
            auto pairs = parse_pairs(pairs_text);
            Integer n = parse_uint(n_text, "--n");
            if (n < 2) throw Error(ErrorCode::InvalidInput, "--n must be at least 2");
            DecoratedGraph g;
            if (canonical) {
                g = canonical_cover(pairs, n).graph;
                if (!with_arrow) g = without_arrows(g);
            } else {
                auto r = resolve_suspension(pairs, n);
                g = canonical_relabel(with_arrow ? r.embedded.graph : r.minimal.graph);
            }
            out << serialize_graph(g);
            return 0;
        }
        if (minimalize_cmd->parsed()) {
            auto doc = load();
            auto r = minimalize(doc.graph);
            GraphDocument res{r.graph, {}};
            for (const auto& [name, id] : doc.marks)
                if (r.graph.contains(id)) res.marks.emplace_back(name, id);
            out << serialize_document(res);
            return 0;
        }
        if (recover_cmd->parsed()) {
            auto g = load().graph;
            std::optional<Integer> mu;
            if (!milnor_text.empty()) mu = parse_uint(milnor_text, "--milnor");
            auto o = recover(g, mu);
            print_outcome(o, out);
            return o.realizable() ? 0 : 1;
        }
        if (homology->parsed()) {
            auto g = load().graph;
            auto h = first_homology(g);
            out << "det " << bareiss_determinant(negated(intersection_matrix(g))) << "\n";
            out << "torsion";
            for (const auto& t : h.torsion) out << " " << t;
            out << "\n";
            out << "betti " << h.betti << "\n";
            out << "qhs " << (is_rational_homology_sphere(g) ? "yes" : "no") << "\n";
            out << "zhs " << (is_integral_homology_sphere(g) ? "yes" : "no") << "\n";
            return 0;
        }
        if (det_cmd->parsed()) {
            auto g = load().graph;
            std::vector<char> mask(g.size(), 1);
            if (!subgraph_text.empty()) {
                std::fill(mask.begin(), mask.end(), 0);
                std::stringstream ss(subgraph_text);
                for (std::string item; std::getline(ss, item, ',');) {
                    VertexId id = suspension::detail::parse_id(item, 0);
                    if (!g.contains(id)) throw Error(ErrorCode::UnknownVertex, "vertex " + item + " is not in the graph");
                    mask[g.index(id)] = 1;
                }
            }
            out << bareiss_determinant(suspension::detail::negated_submatrix(g, mask)) << "\n";
            return 0;
        }
        if (roundtrip->parsed()) {
            auto pairs = parse_pairs(pairs_text);
            Integer n = parse_uint(n_text, "--n");
            if (n < 2) throw Error(ErrorCode::InvalidInput, "--n must be at least 2");
            const auto input_data = NewtonData::make(pairs, n);
            const auto g = minimal_resolution_graph(pairs, n);
            auto o = recover(g);
            print_outcome(o, out);
            bool ok = o.realizable() && contains(o, input_data);
            if (ok && o.tag != RecoveryTag::Unique) {
                auto again = recover(g, milnor_number(pairs, n));
                ok = again.tag == RecoveryTag::Unique && contains(again, input_data);
            }
            out << "roundtrip " << (ok ? "ok" : "failed") << "\n";
            return ok ? 0 : 1;
        }
        if (realize->parsed()) {
            auto r = realizable(load().graph);
            out << "realizable " << (r.yes ? "yes" : "no") << "\n";
            if (r.yes)
                print_outcome(r.outcome, out);
            else
                out << "reason " << r.reason << "\n";
            return r.yes ? 0 : 1;
        }
        if (enumerate->parsed()) {
            for (const auto& t : enumerate_s1_family(parse_uint(g_text, "--g"), parse_uint(l_text, "--l")))
                out << "triple " << t.h_tilde << " " << t.h << " " << t.n << "\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace suspension::cli
