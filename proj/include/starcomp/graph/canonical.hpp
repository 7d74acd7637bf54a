#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starcomp/graph/graph.hpp"

namespace starcomp {

inline constexpr std::size_t kCanonicalMaxOrder = 20;

struct CanonicalForm {
  std::string bytes;               // graph6 of the canonical relabeling
  std::vector<std::size_t> perm;   // perm[v] = canonical position of vertex v
};

/// Colour refinement plus individualisation, keeping the least graph6
/// string over all leaves. Throws TooLarge above kCanonicalMaxOrder.
CanonicalForm canonical(const Graph& g);

}  // namespace starcomp
