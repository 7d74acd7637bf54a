#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starcomp/exact/algebraic.hpp"
#include "starcomp/graph/graph.hpp"

namespace starcomp {

using Spectrum = std::vector<std::pair<AlgebraicNumber, unsigned>>;

struct StarData {
  std::string complement;       // e.g. "K_{3,3}", "C5"
  AlgebraicNumber mu;
  std::vector<std::size_t> x;   // star set inside the built graph
};

struct NamedGraphEntry {
  std::string name;
  Graph graph;
  std::optional<Spectrum> spectrum;  // absent for Gr(t,s,r)
  std::optional<SrgParams> srg;
  std::optional<StarData> star;
};

/// Fixed names. The parametric families Knn(n), Kts(t,s) and Gr(t,s,r)
/// are accepted by catalog_entry but not listed here.
const std::vector<std::string>& catalog_names();

/// Builds a named graph with its expected data. Throws UnknownName.
NamedGraphEntry catalog_entry(std::string_view name);

Graph named_graph(std::string_view name);

/// Throws UnknownName, also for names without a known spectrum.
Spectrum expected_spectrum(std::string_view name);

/// "[-3, -2^2, 0^2, 1^3, 4]" in ascending order.
std::string spectrum_to_string(const Spectrum& spectrum);

}  // namespace starcomp
