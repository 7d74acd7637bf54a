#include "starcomp/graph/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace starcomp {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_adjacency(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("adjacency matrix is not square");
  Graph g(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw std::invalid_argument("adjacency matrix has a loop");
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i)) throw std::invalid_argument("adjacency matrix is not symmetric");
      if (a(i, j) == 1) g.add_edge(i, j);
      else if (a(i, j) != 0) throw std::invalid_argument("adjacency matrix is not 0/1");
    }
  }
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  mutable_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  mutable_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::size_t> Graph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = row(v)[w];
    while (bits != 0) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::common_neighbours(std::size_t u, std::size_t v) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row(u)[w] & row(v)[w]);
  return c;
}

IntMatrix Graph::adjacency() const {
  IntMatrix a(n_, n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v : neighbours(u)) a(u, v) = 1;
  }
  return a;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation has the wrong length");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t r = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

Graph induced_subgraph(const Graph& g, std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (std::size_t v : vertices) {
    if (v >= g.order()) throw std::out_of_range("vertex out of range");
  }
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    }
  }
  return h;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  const std::size_t words = g.words();
  std::vector<std::uint64_t> seen(words, 0), frontier(words, 0);
  seen[0] = frontier[0] = 1;
  std::size_t reached = 1;
  while (true) {
    std::vector<std::uint64_t> next(words, 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits != 0) {
        std::size_t v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        for (std::size_t k = 0; k < words; ++k) next[k] |= g.row(v)[k];
      }
    }
    std::size_t added = 0;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~seen[w];
      seen[w] |= next[w];
      added += std::popcount(next[w]);
    }
    if (added == 0) break;
    reached += added;
    frontier.swap(next);
  }
  return reached == n;
}

std::optional<SrgParams> srg_check(const Graph& g) {
  const std::size_t n = g.order();
  auto r = regular_degree(g);
  if (!r || n < 3 || *r + 1 == n || !is_connected(g)) return std::nullopt;
  std::optional<std::size_t> e, f;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t c = g.common_neighbours(u, v);
      auto& slot = g.adjacent(u, v) ? e : f;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  return SrgParams{n, *r, e.value_or(0), f.value_or(0)};
}

}  // namespace starcomp
