#pragma once

#include "minordeg/graph.hpp"

#include <string>

namespace minordeg {

// graph6: dense upper-triangle encoding. sparse6: edge-list encoding,
// preferred for big sparse graphs (a 10^5-vertex tree is a few hundred KB
// instead of ~600 MB). Both follow the standard byte-exact definitions;
// decoders accept the optional ">>graph6<<" / ">>sparse6<<" headers.
std::string to_graph6(const LabelledGraph& g);
std::string to_sparse6(const LabelledGraph& g);

// Dispatches on the leading ':' of sparse6.
LabelledGraph from_graph6(const std::string& line);

} // namespace minordeg
