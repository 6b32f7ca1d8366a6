#pragma once

#include "graph.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace suspension {

// Text form of a decorated graph:
//   version 1
//   v <id> e=<int> g=<uint> [m=<uint>]
//   edge <id> <id>
//   arrow <id> m=<uint>
//   mark <name> <id>
// '#' starts a comment. Records may come in any order after the version line.
struct GraphDocument {
    DecoratedGraph graph;
    std::vector<std::pair<std::string, VertexId>> marks;
};

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline Integer parse_integer(std::string_view text, std::size_t line, bool allow_negative) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        if (digits.front() == '-' && !allow_negative) parse_fail(line, "expected a non-negative integer, got '" + std::string(text) + "'");
        digits.remove_prefix(1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        parse_fail(line, "expected an integer, got '" + std::string(text) + "'");
    return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

inline VertexId parse_id(std::string_view text, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        parse_fail(line, "expected a vertex id, got '" + std::string(text) + "'");
    return VertexId{value};
}

// key=value fields after the positional tokens.
inline std::map<std::string, std::string> parse_fields(const std::vector<std::string>& tokens, std::size_t from, std::size_t line,
                                                       const std::set<std::string>& allowed) {
    std::map<std::string, std::string> out;
    for (std::size_t i = from; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos) parse_fail(line, "expected key=value, got '" + tokens[i] + "'");
        std::string key = tokens[i].substr(0, eq);
        if (!allowed.count(key)) parse_fail(line, "unknown field '" + key + "'");
        if (out.count(key)) parse_fail(line, "field '" + key + "' given twice");
        out[key] = tokens[i].substr(eq + 1);
    }
    return out;
}

}  // namespace detail

inline GraphDocument parse_document(std::string_view text) {
    GraphDocument doc;
    struct Pending {
        std::size_t line;
        VertexId a, b;
        Integer m;
        std::string name;
    };
    std::vector<Pending> edges, arrows, marks;
    bool seen_record = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> t;
        for (std::string tok; ls >> tok;) t.push_back(tok);
        if (t.empty()) continue;
        const std::string& kind = t[0];
        if (kind == "version") {
            if (seen_record) detail::parse_fail(line_no, "version must come first");
            if (t.size() != 2 || t[1] != "1") detail::parse_fail(line_no, "unsupported version");
            seen_record = true;
        } else if (kind == "v") {
            if (t.size() < 2) detail::parse_fail(line_no, "vertex needs an id");
            auto f = detail::parse_fields(t, 2, line_no, {"e", "g", "m"});
            if (!f.count("e")) detail::parse_fail(line_no, "vertex needs e=<int>");
            Vertex v;
            v.id = detail::parse_id(t[1], line_no);
            v.e = detail::parse_integer(f["e"], line_no, true);
            if (f.count("g")) v.genus = detail::parse_integer(f["g"], line_no, false);
            if (f.count("m")) v.multiplicity = detail::parse_integer(f["m"], line_no, false);
            if (doc.graph.contains(v.id))
                throw Error(ErrorCode::DuplicateVertex, "line " + std::to_string(line_no) + ": vertex " + to_string(v.id) + " defined twice");
            try {
                doc.graph.add_vertex(std::move(v));
            } catch (const Error& err) {
                detail::parse_fail(line_no, err.what());
            }
        } else if (kind == "edge") {
            if (t.size() != 3) detail::parse_fail(line_no, "edge needs two ids");
            edges.push_back({line_no, detail::parse_id(t[1], line_no), detail::parse_id(t[2], line_no), 0, {}});
        } else if (kind == "arrow") {
            if (t.size() < 2) detail::parse_fail(line_no, "arrow needs an id");
            auto f = detail::parse_fields(t, 2, line_no, {"m"});
            if (!f.count("m")) detail::parse_fail(line_no, "arrow needs m=<uint>");
            arrows.push_back({line_no, detail::parse_id(t[1], line_no), {}, detail::parse_integer(f["m"], line_no, false), {}});
        } else if (kind == "mark") {
            if (t.size() != 3) detail::parse_fail(line_no, "mark needs a name and an id");
            marks.push_back({line_no, detail::parse_id(t[2], line_no), {}, 0, t[1]});
        } else {
            detail::parse_fail(line_no, "unknown record '" + kind + "'");
        }
        seen_record = true;
    }
    auto known = [&](VertexId id, std::size_t line) {
        if (!doc.graph.contains(id))
            throw Error(ErrorCode::DanglingEdge, "line " + std::to_string(line) + ": vertex " + to_string(id) + " is not defined");
    };
    for (const auto& e : edges) {
        known(e.a, e.line);
        known(e.b, e.line);
        try {
            doc.graph.add_edge(e.a, e.b);
        } catch (const Error& err) {
            detail::parse_fail(e.line, err.what());
        }
    }
    for (const auto& a : arrows) {
        known(a.a, a.line);
        doc.graph.add_arrow(a.a, a.m);
    }
    for (const auto& m : marks) {
        known(m.a, m.line);
        doc.marks.emplace_back(m.name, m.a);
    }
    return doc;
}

inline std::string serialize_document(const GraphDocument& doc) {
    const auto& g = doc.graph;
    std::ostringstream out;
    out << "version 1\n";
    for (std::size_t i : g.indices_by_id()) {
        const auto& v = g.at(i);
        out << "v " << to_string(v.id) << " e=" << v.e << " g=" << v.genus;
        if (v.multiplicity) out << " m=" << *v.multiplicity;
        out << "\n";
    }
    auto edges = g.edges();
    for (auto& [a, b] : edges)
        if (b < a) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out << "edge " << to_string(a) << " " << to_string(b) << "\n";
    auto arrows = g.arrows();
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& x, const Arrow& y) {
        return x.vertex != y.vertex ? x.vertex < y.vertex : x.multiplicity < y.multiplicity;
    });
    for (const auto& a : arrows) out << "arrow " << to_string(a.vertex) << " m=" << a.multiplicity << "\n";
    auto marks = doc.marks;
    std::sort(marks.begin(), marks.end());
    for (const auto& [name, id] : marks) out << "mark " << name << " " << to_string(id) << "\n";
    return out.str();
}

inline DecoratedGraph parse_graph(std::string_view text) { return parse_document(text).graph; }

inline std::string serialize_graph(const DecoratedGraph& g) { return serialize_document({g, {}}); }

}  // namespace suspension
