#include "starcomp/catalog/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "starcomp/errors.hpp"
#include "starcomp/kts/analysis.hpp"
#include "starcomp/star/search.hpp"

namespace starcomp {

namespace {

AlgebraicNumber num(long v) { return AlgebraicNumber(v); }

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

Spectrum ints(std::initializer_list<std::pair<long, unsigned>> list) {
  Spectrum out;
  for (auto [v, m] : list) out.emplace_back(num(v), m);
  return out;
}

// The regular solutions for K_{t,s} at mu, ordered by (order, canonical form).
std::vector<StarSolution> sweep_solutions(std::size_t t, std::size_t s, long mu) {
  auto ctx = StarContext::make(make_kts(t, s), num(mu), KtsTag{t, s});
  SearchOptions o;
  o.mode = SearchOptions::Mode::Sweep;
  return search_star_sets(ctx, o).solutions;
}

// v1..v6 = 0..5, w1..w6 = 6..11, u1.. = 12..
Graph kss6_graph(const std::vector<std::vector<int>>& v_lists, const std::vector<std::pair<int, int>>& x_edges) {
  const std::size_t k = v_lists.size();
  Graph g = make_kts(6, 6);
  Graph out(12 + k);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (std::size_t i = 0; i < k; ++i) {
    for (int v : v_lists[i]) {
      out.add_edge(12 + i, std::size_t(v - 1));
      out.add_edge(12 + i, std::size_t(6 + v - 1));
    }
  }
  for (auto [a, b] : x_edges) out.add_edge(12 + std::size_t(a - 1), 12 + std::size_t(b - 1));
  return out;
}

NamedGraphEntry from_solution(std::string name, const StarSolution& sol, std::size_t q, std::string complement,
                              const AlgebraicNumber& mu) {
  NamedGraphEntry e;
  e.name = std::move(name);
  e.graph = sol.g;
  e.star = StarData{std::move(complement), mu, range(q, sol.g.order())};
  return e;
}

NamedGraphEntry fixed_entry(const std::string& name) {
  if (name == "G1" || name == "G2" || name == "G3") {
    auto sols = sweep_solutions(3, 3, 1);
    if (sols.size() != 3) throw std::logic_error("K_{3,3} sweep at mu = 1 did not give three graphs");
    std::size_t i = std::size_t(name[1] - '1');
    NamedGraphEntry e = from_solution(name, sols[i], 6, "K_{3,3}", num(1));
    static const Spectrum spectra[] = {
        ints({{-3, 1}, {-2, 2}, {0, 2}, {1, 3}, {4, 1}}),
        ints({{-3, 3}, {-1, 2}, {1, 6}, {5, 1}}),
        ints({{-3, 5}, {1, 9}, {6, 1}}),
    };
    e.spectrum = spectra[i];
    if (i == 2) e.srg = SrgParams{15, 6, 1, 3};
    return e;
  }
  if (name == "G4") {
    NamedGraphEntry e;
    e.name = name;
    e.graph = kss6_graph({{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}}, {});
    e.spectrum = ints({{-6, 1}, {-2, 3}, {0, 8}, {2, 2}, {8, 1}});
    e.star = StarData{"K_{6,6}", num(-2), range(12, 15)};
    return e;
  }
  if (name == "G5") {
    NamedGraphEntry e;
    e.name = name;
    e.graph = kss6_graph({{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}, {1, 4, 5, 6}, {1, 2, 5, 6}, {1, 2, 3, 6}},
                         {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
    e.spectrum = ints({{-6, 1}, {-2, 6}, {0, 6}, {1, 2}, {3, 2}, {10, 1}});
    e.star = StarData{"K_{6,6}", num(-2), range(12, 18)};
    return e;
  }
  if (name == "C3") {
    NamedGraphEntry e;
    e.name = name;
    e.graph = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    e.spectrum = ints({{-1, 2}, {2, 1}});
    e.star = StarData{"K_{1,1}", num(2), {2}};
    return e;
  }
  if (name == "C5") {
    // 0 is the centre of the K_{1,2} on 0, 1, 2.
    NamedGraphEntry e;
    e.name = name;
    e.graph = Graph::from_edges(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 1}});
    auto golden = AlgebraicNumber::quadratic_root(-1, 1, true);
    e.spectrum = Spectrum{{num(2), 1}, {golden, 2}, {golden.conjugate(), 2}};
    e.srg = SrgParams{5, 2, 0, 1};
    e.star = StarData{"K_{1,2}", golden, {3, 4}};
    return e;
  }
  if (name == "Petersen") {
    NamedGraphEntry e;
    e.name = name;
    Graph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
      g.add_edge(i, 5 + i);
    }
    e.graph = g;
    e.spectrum = ints({{-2, 4}, {1, 5}, {3, 1}});
    e.srg = SrgParams{10, 3, 0, 1};
    e.star = StarData{"C5", num(1), range(5, 10)};
    return e;
  }
  if (name == "Clebsch") {
    auto sols = sweep_solutions(1, 5, 1);
    if (sols.size() != 1) throw std::logic_error("K_{1,5} sweep at mu = 1 did not give one graph");
    NamedGraphEntry e = from_solution(name, sols[0], 6, "K_{1,5}", num(1));
    e.spectrum = ints({{-3, 5}, {1, 10}, {5, 1}});
    e.srg = SrgParams{16, 5, 0, 2};
    return e;
  }
  throw UnknownName("unknown graph name '" + name + "'");
}

std::vector<std::size_t> parse_args(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    out.push_back(std::stoul(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"G1", "G2", "G3", "G4", "G5", "C3", "C5", "Petersen", "Clebsch"};
  return names;
}

NamedGraphEntry catalog_entry(std::string_view name_view) {
  const std::string name(name_view);
  static const std::regex family(R"((Knn|Kts|Gr)\((\d+(?:,\d+)*)\))");
  std::smatch m;
  if (!std::regex_match(name, m, family)) return fixed_entry(name);

  std::vector<std::size_t> args;
  try {
    args = parse_args(m[2].str());
  } catch (const std::out_of_range&) {
    throw UnknownName("parameters out of range in '" + name + "'");
  }
  const std::string kind = m[1].str();
  NamedGraphEntry e;
  e.name = name;
  if (kind == "Knn" && args.size() == 1 && args[0] >= 1 && args[0] <= 32) {
    const std::size_t n = args[0];
    e.graph = make_kts(n, n);
    e.spectrum = ints({{-long(n), 1}, {0, unsigned(2 * n - 2)}, {long(n), 1}});
    if (n >= 2) e.srg = SrgParams{2 * n, n, 0, n};
    e.star = StarData{"K_{" + std::to_string(n - 1) + "," + std::to_string(n) + "}", num(long(n)), {n - 1}};
    if (n == 1) e.star->complement = "K_1";
    std::erase_if(*e.spectrum, [](const auto& p) { return p.second == 0; });
    return e;
  }
  if (kind == "Kts" && args.size() == 2 && args[0] >= 1 && args[0] <= args[1] && args[0] + args[1] <= 64) {
    const std::size_t t = args[0], s = args[1];
    e.graph = make_kts(t, s);
    auto root = AlgebraicNumber::quadratic_root(-BigInt(static_cast<unsigned long>(t * s)), 0, true);
    e.spectrum = Spectrum{{-root, 1}, {num(0), unsigned(t + s - 2)}, {root, 1}};
    std::erase_if(*e.spectrum, [](const auto& p) { return p.second == 0; });
    if (t == s && t >= 2) e.srg = SrgParams{2 * t, t, 0, t};
    return e;
  }
  if (kind == "Gr" && args.size() == 3) {
    try {
      auto gr = build_Gr(args[0], args[1], args[2]);
      return from_solution(name, gr.solution, args[0] + args[1],
                           "K_{" + std::to_string(args[0]) + "," + std::to_string(args[1]) + "}", num(-1));
    } catch (const std::invalid_argument& ex) {
      throw UnknownName("'" + name + "': " + ex.what());
    }
  }
  throw UnknownName("bad parameters in '" + name + "'");
}

Graph named_graph(std::string_view name) { return catalog_entry(name).graph; }

Spectrum expected_spectrum(std::string_view name) {
  auto e = catalog_entry(name);
  if (!e.spectrum) throw UnknownName("no expected spectrum for '" + std::string(name) + "'");
  return *e.spectrum;
}

std::string spectrum_to_string(const Spectrum& spectrum) {
  Spectrum sorted = spectrum;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = "[";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ", ";
    out += sorted[i].first.to_string();
    if (sorted[i].second != 1) out += "^" + std::to_string(sorted[i].second);
  }
  return out + "]";
}

}  // namespace starcomp
