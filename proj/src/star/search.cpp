#include "starcomp/star/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <memory>
#include <thread>
#include <tuple>

#include "starcomp/errors.hpp"
#include "starcomp/graph/canonical.hpp"
#include "starcomp/graph/graph6.hpp"

namespace starcomp {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
void reset(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

void and_assign(Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] &= b[w];
}
void and_not_assign(Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] &= ~b[w];
}

std::size_t count_and(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

bool any_and3(const Bits& a, const Bits& b, const Bits& c) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w] & c[w]) return true;
  }
  return false;
}

std::optional<std::size_t> first_and(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t x = a[w] & b[w];
    if (x != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(x));
  }
  return std::nullopt;
}

bool none(const Bits& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0U);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count && !failed; i = next++) body(i, w);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Candidates plus their pairwise labels as bit sets.
struct Problem {
  std::vector<CandidateVector> cands;
  std::size_t words = 0;
  std::vector<Bits> adj;     // label Adjacent (a candidate may be adjacent to a copy of itself)
  std::vector<Bits> compat;  // Adjacent or NonAdjacent
  std::vector<Bits> covers;  // per H-vertex: candidates containing it
  std::vector<int> weight;
  Bits repeatable;
  std::vector<std::size_t> orbit_of;
  std::vector<std::size_t> orbit_rep;
  std::vector<Bits> orbit_members;

  std::size_t size() const { return cands.size(); }
  Bits empty() const { return Bits(words, 0); }
  Bits full() const {
    Bits b(words, ~std::uint64_t{0});
    if (size() % 64 != 0) b.back() = (std::uint64_t{1} << (size() % 64)) - 1;
    if (size() == 0) b.assign(words, 0);
    return b;
  }
};

std::unique_ptr<Problem> build_problem(const StarContext& ctx, bool non_main, bool symmetry, unsigned jobs) {
  auto p = std::make_unique<Problem>();
  p->cands = enumerate_candidates(ctx, non_main);
  const std::size_t m = p->cands.size();
  if (m > kMaxCandidates) {
    throw TooLarge(std::to_string(m) + " candidate neighbourhoods exceed the cap of " +
                   std::to_string(kMaxCandidates));
  }
  p->words = std::max<std::size_t>(1, (m + 63) / 64);
  p->adj.assign(m, p->empty());
  p->compat.assign(m, p->empty());
  p->covers.assign(ctx.q(), p->empty());
  p->weight.resize(m);
  p->repeatable = p->empty();
  const bool repeats = ctx.repeats_allowed();
  for (std::size_t i = 0; i < m; ++i) {
    p->weight[i] = std::popcount(p->cands[i].bits);
    for (Mask b = p->cands[i].bits; b != 0; b &= b - 1) set(p->covers[std::countr_zero(b)], i);
  }

  // Label rows in parallel; row i only writes adj[i] / compat[i].
  const auto& form = ctx.integral();
  const AlgebraicNumber adj_target = -ctx.mval();
  std::optional<std::pair<std::int64_t, std::int64_t>> adj_scaled;
  if (form) {
    Rational x = adj_target.rational_part() * form->denominator;
    Rational y = adj_target.theta_part() * form->denominator;
    x.canonicalize();
    y.canonicalize();
    if (x.get_den() == 1 && y.get_den() == 1 && abs(x.get_num()) < (BigInt(1) << 60) &&
        abs(y.get_num()) < (BigInt(1) << 60)) {
      adj_scaled = std::make_pair(BigInt(x.get_num()).get_si(), BigInt(y.get_num()).get_si());
    }
  }
  const std::size_t q = ctx.q();
  parallel_for(m, jobs, [&](std::size_t i, unsigned) {
    const Mask bi = p->cands[i].bits;
    if (form) {
      std::vector<std::int64_t> np(q, 0), nq(q, 0);
      for (Mask b = bi; b != 0; b &= b - 1) {
        const std::size_t k = static_cast<std::size_t>(std::countr_zero(b));
        for (std::size_t j = 0; j < q; ++j) {
          np[j] += form->p[k * q + j];
          nq[j] += form->q[k * q + j];
        }
      }
      for (std::size_t j = 0; j < m; ++j) {
        const Mask bj = p->cands[j].bits;
        if (bj == bi && i != j) continue;
        if (i == j && !repeats) continue;
        std::int64_t sp = 0, sq = 0;
        for (Mask b = bj; b != 0; b &= b - 1) {
          const std::size_t k = static_cast<std::size_t>(std::countr_zero(b));
          sp += np[k];
          sq += nq[k];
        }
        if (sp == 0 && sq == 0) {
          set(p->compat[i], j);
        } else if (adj_scaled && sp == adj_scaled->first && sq == adj_scaled->second) {
          set(p->compat[i], j);
          set(p->adj[i], j);
        }
      }
    } else {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j && !repeats) continue;
        CompatLabel l = classify_pair(ctx, p->cands[i], p->cands[j]);
        if (l == CompatLabel::Incompatible) continue;
        set(p->compat[i], j);
        if (l == CompatLabel::Adjacent) set(p->adj[i], j);
      }
    }
  });
  for (std::size_t i = 0; i < m; ++i) {
    if (test(p->compat[i], i)) set(p->repeatable, i);
  }

  // Orbits of Aut(K_{t,s}) on candidates are the types, with (a,b) ~ (b,a) when t = s.
  p->orbit_of.assign(m, 0);
  std::map<VertexType, std::size_t> orbit_id;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t id = i;
    if (symmetry && ctx.tag() && p->cands[i].type) {
      VertexType ty = *p->cands[i].type;
      if (ctx.tag()->t == ctx.tag()->s && ty.b < ty.a) std::swap(ty.a, ty.b);
      auto [it, inserted] = orbit_id.emplace(ty, p->orbit_rep.size());
      if (inserted) {
        p->orbit_rep.push_back(i);
        p->orbit_members.push_back(p->empty());
      }
      id = it->second;
    } else {
      id = p->orbit_rep.size();
      p->orbit_rep.push_back(i);
      p->orbit_members.push_back(p->empty());
    }
    p->orbit_of[i] = id;
    set(p->orbit_members[id], i);
  }
  return p;
}

// Exact regular search: every H-vertex and every X-vertex ends with degree r.
class RegularSearch {
 public:
  RegularSearch(const Problem& p, const Graph& h, std::size_t r, std::size_t xcap)
      : p_(p), h_(h), r_(static_cast<int>(r)), xcap_(xcap) {}

  std::vector<std::vector<std::size_t>> run_orbit(std::size_t orbit) {
    found_.clear();
    State s;
    s.pool = p_.full();
    for (std::size_t o = 0; o < orbit; ++o) and_not_assign(s.pool, p_.orbit_members[o]);
    s.cap.resize(h_.order());
    for (std::size_t v = 0; v < h_.order(); ++v) {
      s.cap[v] = r_ - static_cast<int>(h_.degree(v));
      if (s.cap[v] < 0) return {};
      if (s.cap[v] == 0) and_not_assign(s.pool, p_.covers[v]);
    }
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (p_.weight[i] > r_) reset(s.pool, i);
    }
    const std::size_t rep = p_.orbit_rep[orbit];
    if (!test(s.pool, rep) || !include(s, rep)) return {};
    recurse(s);
    return std::move(found_);
  }

 private:
  struct State {
    Bits pool;
    std::vector<int> cap;              // remaining X-neighbours per H-vertex
    std::vector<std::size_t> chosen;   // candidate indices, with repeats
    std::vector<int> deficit;          // remaining X-neighbours per chosen vertex
  };

  bool include(State& s, std::size_t c) {
    if (s.chosen.size() >= xcap_) return false;
    int adjacent = 0;
    for (std::size_t u : s.chosen) adjacent += test(p_.adj[c], u) ? 1 : 0;
    const int own = r_ - p_.weight[c] - adjacent;
    if (own < 0) return false;
    and_assign(s.pool, p_.compat[c]);
    for (Mask b = p_.cands[c].bits; b != 0; b &= b - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(b));
      if (--s.cap[v] == 0) and_not_assign(s.pool, p_.covers[v]);
    }
    for (std::size_t k = 0; k < s.chosen.size(); ++k) {
      if (!test(p_.adj[c], s.chosen[k])) continue;
      if (--s.deficit[k] == 0) and_not_assign(s.pool, p_.adj[s.chosen[k]]);
    }
    s.chosen.push_back(c);
    s.deficit.push_back(own);
    if (own == 0) and_not_assign(s.pool, p_.adj[c]);
    return true;
  }

  void recurse(State& s) {
    std::size_t best = SIZE_MAX;
    const Bits* best_set = nullptr;
    auto consider = [&](const Bits& options, int demand) {
      const std::size_t n = count_and(s.pool, options);
      if (n == 0) return false;
      if (n < static_cast<std::size_t>(demand) && !any_and3(s.pool, options, p_.repeatable)) return false;
      if (n < best) {
        best = n;
        best_set = &options;
      }
      return true;
    };
    for (std::size_t v = 0; v < s.cap.size(); ++v) {
      if (s.cap[v] > 0 && !consider(p_.covers[v], s.cap[v])) return;
    }
    for (std::size_t k = 0; k < s.chosen.size(); ++k) {
      if (s.deficit[k] > 0 && !consider(p_.adj[s.chosen[k]], s.deficit[k])) return;
    }
    if (best_set == nullptr) {
      std::vector<std::size_t> sol = s.chosen;
      std::sort(sol.begin(), sol.end());
      found_.push_back(std::move(sol));
      return;
    }
    if (s.chosen.size() >= xcap_) return;
    const std::size_t c = *first_and(s.pool, *best_set);
    {
      State t = s;
      if (include(t, c)) recurse(t);
    }
    reset(s.pool, c);
    recurse(s);
  }

  const Problem& p_;
  const Graph& h_;
  int r_;
  std::size_t xcap_;
  std::vector<std::vector<std::size_t>> found_;
};

// Maximal cliques of the compatibility graph (distinct candidates).
class MaximalSearch {
 public:
  MaximalSearch(const Problem& p, std::size_t xcap) : p_(p), xcap_(xcap) {
    nbr_ = p.compat;
    for (std::size_t i = 0; i < p.size(); ++i) reset(nbr_[i], i);
  }

  std::vector<std::vector<std::size_t>> run_orbit(std::size_t orbit) {
    found_.clear();
    const std::size_t rep = p_.orbit_rep[orbit];
    Bits earlier = p_.empty();
    for (std::size_t o = 0; o < orbit; ++o) {
      for (std::size_t w = 0; w < earlier.size(); ++w) earlier[w] |= p_.orbit_members[o][w];
    }
    Bits pset = nbr_[rep];
    and_not_assign(pset, earlier);
    Bits xset = nbr_[rep];
    and_assign(xset, earlier);
    std::vector<std::size_t> r{rep};
    expand(r, pset, xset);
    return std::move(found_);
  }

 private:
  void expand(std::vector<std::size_t>& r, Bits pset, Bits xset) {
    if (none(pset)) {
      if (none(xset) && r.size() <= xcap_) {
        std::vector<std::size_t> sol = r;
        std::sort(sol.begin(), sol.end());
        found_.push_back(std::move(sol));
      }
      return;
    }
    if (r.size() >= xcap_) return;
    // Pivot with the most neighbours in P.
    std::size_t pivot = SIZE_MAX, most = 0;
    for (const Bits* src : {&pset, &xset}) {
      for (std::size_t w = 0; w < src->size(); ++w) {
        for (std::uint64_t b = (*src)[w]; b != 0; b &= b - 1) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(b));
          const std::size_t c = count_and(pset, nbr_[u]);
          if (pivot == SIZE_MAX || c > most) {
            pivot = u;
            most = c;
          }
        }
      }
    }
    Bits branch = pset;
    and_not_assign(branch, nbr_[pivot]);
    for (std::size_t w = 0; w < branch.size(); ++w) {
      for (std::uint64_t b = branch[w]; b != 0; b &= b - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(b));
        Bits np = pset, nx = xset;
        and_assign(np, nbr_[v]);
        and_assign(nx, nbr_[v]);
        r.push_back(v);
        expand(r, std::move(np), std::move(nx));
        r.pop_back();
        reset(pset, v);
        set(xset, v);
      }
    }
  }

  const Problem& p_;
  std::size_t xcap_;
  std::vector<Bits> nbr_;
  std::vector<std::vector<std::size_t>> found_;
};

struct RawSolution {
  std::size_t r = 0;  // 0 in maximal mode
  bool all_candidates = false;
  std::vector<std::size_t> indices;
  friend auto operator<=>(const RawSolution&, const RawSolution&) = default;
};

}  // namespace

std::size_t star_set_cap(std::size_t q) { return q < 3 ? 0 : (q + 1) * (q - 2) / 2; }

Graph assemble(const StarContext& ctx, const std::vector<CandidateVector>& x) {
  const std::size_t q = ctx.q();
  Graph g(q + x.size());
  for (auto [u, v] : ctx.h().edges()) g.add_edge(u, v);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (Mask b = x[i].bits; b != 0; b &= b - 1) g.add_edge(q + i, static_cast<std::size_t>(std::countr_zero(b)));
  }
  const AlgebraicNumber adj = -ctx.mval();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (ctx.pairing(x[i].bits, x[j].bits) == adj) g.add_edge(q + i, q + j);
    }
  }
  return g;
}

SearchResult search_star_sets(const StarContext& ctx, const SearchOptions& opts) {
  using Mode = SearchOptions::Mode;
  const bool repeats = ctx.repeats_allowed();
  if (repeats && !opts.max_x) {
    throw Unbounded("mu = " + ctx.mu().to_string() +
                    " admits arbitrarily large star sets (duplicate vertices); pass a cap on |X|");
  }
  const unsigned jobs = std::max(1U, opts.jobs);
  const std::size_t q = ctx.q();

  std::unique_ptr<Problem> main_free, non_main;
  auto problem = [&](bool nm) -> const Problem& {
    auto& slot = nm ? non_main : main_free;
    if (!slot) slot = build_problem(ctx, nm, opts.symmetry, jobs);
    return *slot;
  };
  auto xcap_for = [&](const Problem& p) {
    std::size_t cap = opts.max_x.value_or(SIZE_MAX);
    if (!repeats) {
      cap = std::min(cap, p.size());
      if (q >= 3) cap = std::min(cap, star_set_cap(q));
    }
    return cap;
  };

  struct Task {
    const Problem* problem;
    bool all;
    std::size_t r;
    std::size_t orbit;
  };
  std::vector<Task> tasks;
  std::size_t candidate_count = 0;

  if (opts.mode == Mode::Maximal) {
    const Problem& p = problem(opts.non_main);
    candidate_count = p.size();
    for (std::size_t o = 0; o < p.orbit_rep.size(); ++o) tasks.push_back({&p, !opts.non_main, 0, o});
  } else {
    std::size_t max_h_degree = 0;
    for (std::size_t v = 0; v < q; ++v) max_h_degree = std::max(max_h_degree, ctx.h().degree(v));
    auto mu_int = ctx.mu().as_integer();
    auto add_r = [&](std::size_t r) {
      // The eigenvalue r of an r-regular graph is main; every other one is not.
      const bool mu_is_r = mu_int && *mu_int == static_cast<long>(r);
      const Problem& p = problem(!mu_is_r);
      candidate_count = std::max(candidate_count, p.size());
      for (std::size_t o = 0; o < p.orbit_rep.size(); ++o) tasks.push_back({&p, mu_is_r, r, o});
    };
    if (opts.mode == Mode::Regular) {
      add_r(opts.r);
    } else {
      // r <= max |b| + |X| - 1 from an X-vertex, and q r <= 2|E(H)| + |X| max |b| from H.
      auto upper = [&](const Problem& p) -> std::optional<std::size_t> {
        const std::size_t cap = xcap_for(p);
        if (p.size() == 0 || cap == 0) return std::nullopt;
        int maxb = 0;
        for (int w : p.weight) maxb = std::max(maxb, w);
        return std::min<std::size_t>(
            static_cast<std::size_t>(maxb) + cap - 1,
            (cap * static_cast<std::size_t>(maxb) + 2 * ctx.h().edge_count()) / std::max<std::size_t>(q, 1));
      };
      std::vector<std::size_t> rs;
      if (auto hi = upper(problem(true))) {
        for (std::size_t r = max_h_degree; r <= *hi; ++r) {
          if (!(mu_int && *mu_int == static_cast<long>(r))) rs.push_back(r);
        }
      }
      if (mu_int && *mu_int >= static_cast<long>(max_h_degree)) {
        const std::size_t r = static_cast<std::size_t>(mu_int->get_ui());
        if (auto hi = upper(problem(false)); hi && r <= *hi) rs.push_back(r);
      }
      std::sort(rs.begin(), rs.end());
      for (std::size_t r : rs) add_r(r);
    }
  }

  std::vector<std::vector<RawSolution>> per_task(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i, unsigned) {
    const Task& task = tasks[i];
    const std::size_t cap = xcap_for(*task.problem);
    std::vector<std::vector<std::size_t>> sols;
    if (cap == 0) return;
    if (opts.mode == Mode::Maximal) {
      sols = MaximalSearch(*task.problem, cap).run_orbit(task.orbit);
    } else {
      sols = RegularSearch(*task.problem, ctx.h(), task.r, cap).run_orbit(task.orbit);
    }
    for (auto& s : sols) per_task[i].push_back({task.r, task.all, std::move(s)});
  });

  std::vector<RawSolution> raw;
  for (auto& v : per_task) {
    for (auto& s : v) raw.push_back(std::move(s));
  }
  std::sort(raw.begin(), raw.end());

  SearchResult result;
  result.raw_count = raw.size();
  result.candidate_count = candidate_count;
  result.deduped_by = "canonical";

  // Keys in parallel, then keep the least (r, indices) per key.
  std::vector<StarSolution> built(raw.size());
  parallel_for(raw.size(), jobs, [&](std::size_t i, unsigned) {
    const Problem& p = *(raw[i].all_candidates ? main_free : non_main);
    StarSolution& s = built[i];
    s.candidate_index = raw[i].indices;
    for (std::size_t idx : raw[i].indices) s.x.push_back(p.cands[idx]);
    s.g = assemble(ctx, s.x);
    std::vector<std::size_t> xs(s.x.size());
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = q + k;
    s.ax = induced_subgraph(s.g, xs);
    s.regular_degree = regular_degree(s.g);
    s.key = s.g.order() <= kCanonicalMaxOrder ? canonical(s.g).bytes : encode_graph6(s.g);
  });
  std::map<std::pair<std::size_t, std::string>, std::size_t> seen;
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (built[i].g.order() > kCanonicalMaxOrder) result.deduped_by = "labeled";
    seen.emplace(std::make_pair(built[i].g.order(), built[i].key), i);
  }
  for (auto& [key, i] : seen) result.solutions.push_back(std::move(built[i]));
  if (opts.max_solutions && result.solutions.size() > *opts.max_solutions) {
    result.solutions.resize(*opts.max_solutions);
  }
  if (opts.certify) {
    parallel_for(result.solutions.size(), jobs, [&](std::size_t i, unsigned) {
      StarSolution& s = result.solutions[i];
      std::vector<std::size_t> xs(s.x.size());
      for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = q + k;
      s.cert = verify_star_pair(s.g, xs, ctx.mu());
    });
  }
  return result;
}

}  // namespace starcomp
