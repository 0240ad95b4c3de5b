#include "chipfire/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace chipfire {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
}

ChipConfig parse_compact(const std::string& text) {
    auto first = text.find('_');
    auto second = text.find('_', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        second != first + 2 || !std::isdigit(static_cast<unsigned char>(text[first + 1])))
        throw ParseError(1, first + 1, "compact form needs exactly one fenced origin digit");
    std::string left = text.substr(0, first);
    std::string right = text.substr(second + 1);
    if ((!left.empty() && !all_digits(left)) || (!right.empty() && !all_digits(right)))
        throw ParseError(1, 1, "compact form allows digits only");

    SparseMap entries;
    auto len = static_cast<Site>(left.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        entries[-(len - static_cast<Site>(i))] = left[i] - '0';
    entries[0] = text[first + 1] - '0';
    for (std::size_t i = 0; i < right.size(); ++i)
        entries[static_cast<Site>(i) + 1] = right[i] - '0';
    return ChipConfig(entries);
}

}  // namespace

ChipConfig parse_config(const std::string& text, ConfigKind kind) {
    if (text.find('_') != std::string::npos) {
        if (kind != ConfigKind::Line)
            throw ParseError(1, 1, "compact notation is line-only");
        return parse_compact(text);
    }
    SparseMap entries;
    std::istringstream in(text);
    std::string token;
    std::size_t column = 1;
    bool any = false;
    while (in >> token) {
        any = true;
        auto colon = token.find(':');
        if (colon == std::string::npos)
            throw ParseError(1, column, "expected site:count, got '" + token + "'");
        Site site;
        Count count;
        try {
            site = std::stoll(token.substr(0, colon));
            count = std::stoll(token.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError(1, column, "bad number in '" + token + "'");
        }
        if (count < 0) throw ParseError(1, column, "negative chip count in '" + token + "'");
        if (kind == ConfigKind::Graph && site < 0)
            throw ParseError(1, column, "graph sites are nonnegative");
        entries[site] += count;
        column += token.size() + 1;
    }
    if (!any) throw ParseError(1, 1, "empty configuration");
    return ChipConfig(entries);
}

bool compact_representable(const ChipConfig& cfg) {
    for (const auto& [k, v] : cfg.entries())
        if (v > 9) return false;
    return true;
}

std::string format_compact(const ChipConfig& cfg) {
    if (!compact_representable(cfg)) throw Error("count above 9 in compact notation");
    Site lo = 0, hi = 0;
    if (!cfg.empty()) {
        lo = std::min<Site>(cfg.entries().begin()->first, 0);
        hi = std::max<Site>(cfg.entries().rbegin()->first, 0);
    }
    std::string out;
    for (Site k = lo; k <= hi; ++k) {
        char d = static_cast<char>('0' + cfg.at(k));
        if (k == 0) {
            out += '_';
            out += d;
            out += '_';
        } else {
            out += d;
        }
    }
    return out;
}

std::string format_sparse(const ChipConfig& cfg) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : cfg.entries()) {
        if (!first) out << ' ';
        out << k << ':' << v;
        first = false;
    }
    return first ? "(empty)" : out.str();
}

std::string format_sparse(const MoveVector& mv) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : mv.counts()) {
        if (!first) out << ' ';
        out << k << ':' << v;
        first = false;
    }
    return first ? "(empty)" : out.str();
}

std::string format_config(const ChipConfig& cfg) {
    return compact_representable(cfg) ? format_compact(cfg) : format_sparse(cfg);
}

FiringSystem parse_graph_file(std::istream& in) {
    int vertex_count = -1;
    std::vector<std::tuple<int, int, Count>> edges;
    std::set<int> sinks;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "graph") {
            if (vertex_count >= 0) throw ParseError(lineno, 1, "duplicate graph header");
            if (!(ls >> vertex_count) || vertex_count < 0)
                throw ParseError(lineno, 1, "expected 'graph <vertex_count>'");
        } else if (word == "edge") {
            int u, v;
            Count m;
            if (vertex_count < 0) throw ParseError(lineno, 1, "edge before graph header");
            if (!(ls >> u >> v >> m) || u < 0 || v < 0 || u >= vertex_count ||
                v >= vertex_count || u == v || m < 1)
                throw ParseError(lineno, 1, "expected 'edge <u> <v> <multiplicity>'");
            edges.emplace_back(u, v, m);
        } else if (word == "sink") {
            int v;
            if (vertex_count < 0) throw ParseError(lineno, 1, "sink before graph header");
            if (!(ls >> v) || v < 0 || v >= vertex_count)
                throw ParseError(lineno, 1, "expected 'sink <v>'");
            sinks.insert(v);
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + word + "'");
        }
    }
    if (vertex_count < 0) throw ParseError(lineno, 1, "missing graph header");
    return FiringSystem::multigraph(vertex_count, edges, sinks);
}

FiringSystem load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file " + path);
    return parse_graph_file(in);
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string emit_poset(const FinitePoset& p, PosetFormat format) {
    int n = p.size();
    std::vector<int> by_label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_label[static_cast<std::size_t>(i)] = i;
    std::sort(by_label.begin(), by_label.end(),
              [&](int a, int b) { return p.label(a) < p.label(b); });
    std::vector<std::pair<std::string, std::string>> cover_labels;
    for (auto [u, l] : p.covers()) cover_labels.emplace_back(p.label(u), p.label(l));
    std::sort(cover_labels.begin(), cover_labels.end());

    std::ostringstream out;
    switch (format) {
        case PosetFormat::Text: {
            out << "elements " << n << "\n";
            for (int i : by_label) out << p.label(i) << "\n";
            out << "covers " << cover_labels.size() << "\n";
            for (const auto& [u, l] : cover_labels) out << u << " > " << l << "\n";
            break;
        }
        case PosetFormat::Dot: {
            out << "digraph poset {\n  rankdir=TB;\n";
            // one rank group per depth keeps the leveled layout
            int max_depth = 0;
            for (int i = 0; i < n; ++i) max_depth = std::max(max_depth, p.depth(i));
            for (int d = 0; d <= max_depth; ++d) {
                std::vector<std::string> level;
                for (int i : by_label)
                    if (p.depth(i) == d) level.push_back(p.label(i));
                if (level.empty()) continue;
                out << "  { rank=same;";
                for (const auto& s : level) out << ' ' << quote(s) << ';';
                out << " }\n";
            }
            for (const auto& [u, l] : cover_labels)
                out << "  " << quote(u) << " -> " << quote(l) << ";\n";
            out << "}\n";
            break;
        }
        case PosetFormat::Tikz: {
            out << "\\begin{tikzpicture}\n";
            std::vector<int> column(static_cast<std::size_t>(n), 0);
            std::vector<int> next_col;
            int max_depth = 0;
            for (int i = 0; i < n; ++i) max_depth = std::max(max_depth, p.depth(i));
            next_col.assign(static_cast<std::size_t>(max_depth + 1), 0);
            for (int i : by_label)
                column[static_cast<std::size_t>(i)] =
                    next_col[static_cast<std::size_t>(p.depth(i))]++;
            for (int i : by_label)
                out << "\\node (n" << i << ") at (" << column[static_cast<std::size_t>(i)]
                    << "," << -p.depth(i) << ") {" << p.label(i) << "};\n";
            for (auto [u, l] : p.covers())
                out << "\\draw (n" << u << ") -- (n" << l << ");\n";
            out << "\\end{tikzpicture}\n";
            break;
        }
    }
    return out.str();
}

}  // namespace chipfire
