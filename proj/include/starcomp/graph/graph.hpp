#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "starcomp/exact/matrix.hpp"

namespace starcomp {

/// Simple undirected graph stored as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  /// Throws std::invalid_argument unless the matrix is a symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(const IntMatrix& a);

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const { return (row(u)[v >> 6] >> (v & 63)) & 1U; }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * words_; }

  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbours(std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// |N(u) ∩ N(v)|
  std::size_t common_neighbours(std::size_t u, std::size_t v) const;

  IntMatrix adjacency() const;

  /// The graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::uint64_t* mutable_row(std::size_t v) { return bits_.data() + v * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SrgParams {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t e = 0;
  std::size_t f = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::optional<std::size_t> regular_degree(const Graph& g);

/// Vertices of the result follow the ascending order of `vertices` (duplicates ignored).
Graph induced_subgraph(const Graph& g, std::vector<std::size_t> vertices);

bool is_connected(const Graph& g);

/// Parameters (n, r, e, f) when g is connected, regular, not complete and
/// A^2 = rI + eA + f(J - I - A).
std::optional<SrgParams> srg_check(const Graph& g);

}  // namespace starcomp
