#include "dmag/mixed_graph.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace dmag {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
    }
    return true;
}

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#') {
            ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

struct EdgeSpec {
    std::string x, y;
    Mark at_x, at_y;
    int line, column;
};

}  // namespace

MixedGraph parse_graph(std::string_view text) {
    std::set<std::string> vertex_names;
    std::vector<EdgeSpec> edge_specs;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0].text == "vertices:") {
            if (tokens.size() == 1) {
                throw ParseError("empty vertex declaration", line_no, tokens[0].column);
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (!valid_name(tokens[i].text)) {
                    throw ParseError("invalid vertex name '" + tokens[i].text + "'", line_no,
                                     tokens[i].column);
                }
                vertex_names.insert(tokens[i].text);
            }
            continue;
        }

        if (tokens.size() != 3) {
            throw ParseError("expected 'X -> Y' or 'X <-> Y'", line_no, tokens[0].column);
        }
        const auto& [op, op_col] = std::pair{tokens[1].text, tokens[1].column};
        if (!valid_name(tokens[0].text)) {
            throw ParseError("invalid vertex name '" + tokens[0].text + "'", line_no,
                             tokens[0].column);
        }
        if (!valid_name(tokens[2].text)) {
            throw ParseError("invalid vertex name '" + tokens[2].text + "'", line_no,
                             tokens[2].column);
        }

        Mark at_x, at_y;
        if (op == "->") {
            at_x = Mark::Tail;
            at_y = Mark::Arrowhead;
        } else if (op == "<->") {
            at_x = Mark::Arrowhead;
            at_y = Mark::Arrowhead;
        } else if (op == "--") {
            throw ParseError("undirected edges unsupported: this tool handles directed MAGs only",
                             line_no, op_col);
        } else {
            throw ParseError("unknown edge operator '" + op + "'", line_no, op_col);
        }

        if (tokens[0].text == tokens[2].text) {
            throw ParseError("self loop at '" + tokens[0].text + "'", line_no, tokens[0].column);
        }
        vertex_names.insert(tokens[0].text);
        vertex_names.insert(tokens[2].text);
        edge_specs.push_back({tokens[0].text, tokens[2].text, at_x, at_y, line_no, tokens[0].column});
    }

    MixedGraph g(std::vector<std::string>(vertex_names.begin(), vertex_names.end()));
    for (const auto& e : edge_specs) {
        if (g.edge_kind(g.index_of(e.x), g.index_of(e.y)) != EdgeKind::None) {
            throw ParseError("duplicate edge between " + e.x + " and " + e.y, e.line, e.column);
        }
        g.add_edge(e.x, e.y, e.at_x, e.at_y);
    }
    return g;
}

std::string serialize_graph(const MixedGraph& g) {
    std::string out;
    bool any_isolated = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.neighbors(v).empty()) {
            any_isolated = true;
            break;
        }
    }
    if (any_isolated) {
        out += "vertices:";
        for (const auto& nm : g.names()) {
            out += ' ';
            out += nm;
        }
        out += '\n';
    }
    for (const auto& e : g.edges()) {
        if (e.at_x == Mark::Arrowhead && e.at_y == Mark::Arrowhead) {
            out += g.name(e.x) + " <-> " + g.name(e.y) + "\n";
        } else if (e.at_x == Mark::Tail) {
            out += g.name(e.x) + " -> " + g.name(e.y) + "\n";
        } else {
            out += g.name(e.y) + " -> " + g.name(e.x) + "\n";
        }
    }
    return out;
}

std::string to_dot(const MixedGraph& g, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    for (const auto& nm : g.names()) {
        out << "  \"" << nm << "\";\n";
    }
    for (const auto& e : g.edges()) {
        if (e.at_x == Mark::Arrowhead && e.at_y == Mark::Arrowhead) {
            out << "  \"" << g.name(e.x) << "\" -> \"" << g.name(e.y)
                << "\" [dir=both, arrowhead=normal, arrowtail=normal];\n";
        } else {
            int from = (e.at_x == Mark::Tail) ? e.x : e.y;
            int to = (e.at_x == Mark::Tail) ? e.y : e.x;
            out << "  \"" << g.name(from) << "\" -> \"" << g.name(to)
                << "\" [arrowhead=normal, arrowtail=none];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string digest(const MixedGraph& g) {
    // FNV-1a 64
    std::string text = serialize_graph(g);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace dmag
