#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

// Hypergraph text format: one JSON object per line,
//   {"r": 3, "n": 4, "edges": [[1,2,3],[1,2,4],[1,3,4],[2,3,4]]}
// Edges are written in colex order with ascending labels. Parsing a line
// written by to_text and writing it again reproduces it byte for byte.

std::string to_text(const Hypergraph& g);

/// Throws std::invalid_argument on malformed input.
Hypergraph parse_hypergraph(std::string_view line);

/// Reads every non-blank line of the stream.
std::vector<Hypergraph> read_hypergraphs(std::istream& in);

}  // namespace hyperlag
