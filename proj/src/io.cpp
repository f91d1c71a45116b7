#include "normlap/io.hpp"

#include <fstream>
#include <sstream>

namespace normlap {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) throw ParseError(lineno, "expected header 'n m'");
            if (n <= 0) throw ParseError(lineno, "vertex count must be positive");
            if (m < 0) throw ParseError(lineno, "arc count must be nonnegative");
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "expected arc 'u v'");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after arc");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "arc endpoint out of range");
        if (u == v) throw ParseError(lineno, "loops are not allowed");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        if (static_cast<long>(arcs.size()) > m) throw ParseError(lineno, "more arcs than declared");
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n m'");
    if (static_cast<long>(arcs.size()) != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " arcs, found " +
                                     std::to_string(arcs.size()));
    return Digraph::from_arcs(static_cast<int>(n), arcs);
}

Digraph read_digraph_string(const std::string& text) {
    std::istringstream in(text);
    return read_digraph(in);
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return read_digraph(in);
}

std::string write_digraph(const Digraph& g, const std::string& header_comment) {
    std::ostringstream out;
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    auto arcs = g.arcs();
    out << g.n() << " " << arcs.size() << "\n";
    for (auto [u, v] : arcs) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace normlap
