#include "starcomp/graph/graph6.hpp"

#include "starcomp/errors.hpp"

namespace starcomp {

namespace {

constexpr std::size_t kMaxOrder = 258047;

void encode_order(std::size_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  if (n > kMaxOrder) throw TooLarge("graph6 supports at most 258047 vertices");
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  encode_order(n, out);
  unsigned chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw MalformedGraph6("empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) throw MalformedGraph6("invalid graph6 character");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(line[0] - 63);
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') throw MalformedGraph6("8-byte graph6 orders are not supported");
    if (line.size() < 4) throw MalformedGraph6("truncated graph6 order");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(line[k] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - pos != need) {
    throw MalformedGraph6("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                          std::to_string(need));
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      unsigned byte = static_cast<unsigned>(line[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    unsigned last = static_cast<unsigned>(line.back() - 63);
    if ((last & ((1U << (6 - bits % 6)) - 1)) != 0) throw MalformedGraph6("nonzero graph6 padding bits");
  }
  return g;
}

}  // namespace starcomp
