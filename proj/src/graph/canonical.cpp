#include "starcomp/graph/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "starcomp/errors.hpp"

namespace starcomp {

namespace {

using Colouring = std::vector<int>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(static_cast<int>(g.order())) {
    for (int v = 0; v < n_; ++v) {
      for (std::size_t u : g.neighbours(static_cast<std::size_t>(v))) adj_[v] |= 1U << u;
    }
  }

  CanonicalForm run() {
    Colouring col(static_cast<std::size_t>(n_), 0);
    std::vector<int> prefix;
    search(col, n_ == 0 ? 0 : 1, prefix);
    CanonicalForm out;
    out.bytes = best_key_;
    out.perm.assign(best_perm_.begin(), best_perm_.end());
    return out;
  }

 private:
  // Splits cells by neighbour counts per cell until stable. New cells are
  // ordered by (old colour, count vector), which depends on colours only.
  void refine(Colouring& col, int& ncolours) const {
    while (ncolours < n_) {
      std::vector<std::vector<int>> key(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& k = key[v];
        k.assign(static_cast<std::size_t>(ncolours) + 1, 0);
        k[0] = col[v];
        std::uint32_t bits = adj_[v];
        while (bits != 0) {
          ++k[1 + col[std::countr_zero(bits)]];
          bits &= bits - 1;
        }
      }
      std::vector<int> order(static_cast<std::size_t>(n_));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && key[order[i]] != key[order[i - 1]]) ++next;
        col[order[i]] = next;
      }
      if (next + 1 == ncolours) return;
      ncolours = next + 1;
    }
  }

  void search(Colouring col, int ncolours, std::vector<int>& prefix) {
    refine(col, ncolours);
    if (ncolours == n_) {
      leaf(col);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(ncolours), 0);
    for (int c : col) ++size[c];
    int target = -1;
    for (int c = 0; c < ncolours; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (col[v] != target) continue;
      if (!explored.empty() && in_explored_orbit(v, explored, prefix)) continue;
      Colouring child = col;
      for (int w = 0; w < n_; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      prefix.push_back(v);
      search(std::move(child), ncolours + 1, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  bool in_explored_orbit(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    std::array<int, kCanonicalMaxOrder> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == root; });
  }

  std::string leaf_key(const Colouring& pos) const {
    std::array<int, kCanonicalMaxOrder> inv{};
    for (int v = 0; v < n_; ++v) inv[pos[v]] = v;
    std::string key(1, static_cast<char>(n_ + 63));
    unsigned chunk = 0;
    int filled = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        chunk = (chunk << 1) | ((adj_[inv[i]] >> inv[j]) & 1U);
        if (++filled == 6) {
          key.push_back(static_cast<char>(chunk + 63));
          chunk = filled = 0;
        }
      }
    }
    if (filled != 0) key.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return key;
  }

  void leaf(const Colouring& pos) {
    std::string key = leaf_key(pos);
    if (first_key_.empty()) {
      first_key_ = best_key_ = key;
      first_perm_ = best_perm_ = pos;
      return;
    }
    if (key == first_key_) {
      record_automorphism(pos, first_perm_);
    } else if (key == best_key_) {
      record_automorphism(pos, best_perm_);
    } else if (key < best_key_) {
      best_key_ = std::move(key);
      best_perm_ = pos;
    }
  }

  // Both labelings give the same graph, so reference^-1 . pos is an automorphism.
  void record_automorphism(const Colouring& pos, const Colouring& reference) {
    std::array<int, kCanonicalMaxOrder> inv{};
    for (int v = 0; v < n_; ++v) inv[reference[v]] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) gamma[v] = inv[pos[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  int n_;
  std::array<std::uint32_t, kCanonicalMaxOrder> adj_{};
  std::string first_key_;
  std::string best_key_;
  Colouring first_perm_;
  Colouring best_perm_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw TooLarge("canonical form is limited to " + std::to_string(kCanonicalMaxOrder) + " vertices, got " +
                   std::to_string(g.order()));
  }
  if (g.order() == 0) return CanonicalForm{"?", {}};
  return Canonizer(g).run();
}

}  // namespace starcomp
