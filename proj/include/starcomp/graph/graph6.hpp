#pragma once

#include <string>
#include <string_view>

#include "starcomp/graph/graph.hpp"

namespace starcomp {

/// graph6 text without the trailing newline.
std::string encode_graph6(const Graph& g);

/// Accepts one graph6 line; a trailing '\n' or "\r\n" is ignored.
/// Throws MalformedGraph6.
Graph decode_graph6(std::string_view line);

}  // namespace starcomp
