#pragma once

#include <iosfwd>
#include <string>

#include "dalpha/digraph.hpp"

namespace dalpha {

/// Text format, one record per file:
///
///   # optional comment lines
///   n 4
///   0 1
///   1 2
///   ...
///
/// Header gives the vertex count, every following non-comment line is
/// one arc "tail head". Duplicate arcs are a ParseError on input even
/// though build_digraph would silently collapse them; a file that
/// disagrees with itself is worth rejecting.
Digraph read_digraph(std::istream& is);
Digraph read_digraph_file(const std::string& path);

/// Arcs are written in lexicographic order, so write(read(x)) == x
/// for any file this writer produced.
void write_digraph(std::ostream& os, const Digraph& g);
void write_digraph_file(const std::string& path, const Digraph& g);

std::string to_string(const Digraph& g);

} // namespace dalpha
