#include "dalpha/digraph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "dalpha/errors.hpp"

namespace dalpha {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

} // namespace

Digraph read_digraph(std::istream& is) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Arc> arcs;
    std::set<Arc> seen;
    while (std::getline(is, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n) || tag != "n" || n < 1)
                fail(lineno, "expected header 'n <count>'");
        } else {
            int u, v;
            if (!(ls >> u >> v)) fail(lineno, "expected arc '<tail> <head>'");
            if (!seen.insert({u, v}).second)
                fail(lineno, "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
            arcs.emplace_back(u, v);
        }
        std::string extra;
        if (ls >> extra) fail(lineno, "trailing token '" + extra + "'");
    }
    if (n < 0) throw ParseError("empty input, expected header 'n <count>'");
    try {
        return build_digraph(n, arcs);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return read_digraph(f);
}

void write_digraph(std::ostream& os, const Digraph& g) {
    os << "n " << g.num_vertices() << "\n";
    for (auto [u, v] : g.arcs()) os << u << " " << v << "\n";
}

void write_digraph_file(const std::string& path, const Digraph& g) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    write_digraph(f, g);
}

std::string to_string(const Digraph& g) {
    std::ostringstream os;
    write_digraph(os, g);
    return os.str();
}

} // namespace dalpha
