#include "starcomp/kts/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "starcomp/errors.hpp"
#include "starcomp/graph/canonical.hpp"
#include "starcomp/graph/graph6.hpp"

namespace starcomp {

namespace {

AlgebraicNumber num(std::size_t v) { return AlgebraicNumber(static_cast<long>(v)); }

bool is_nonneg_integer(const AlgebraicNumber& x) { return x.is_integer() && x.sign() >= 0; }

std::size_t to_size(const AlgebraicNumber& x) { return x.as_integer()->get_ui(); }

void require_kts_mu(std::size_t t, std::size_t s, const AlgebraicNumber& mu) {
  if (mu.is_zero()) throw std::invalid_argument("mu must be nonzero");
  if (mu * mu == num(t * s)) throw std::invalid_argument("mu^2 must differ from ts");
}

}  // namespace

Graph make_kts(std::size_t t, std::size_t s) {
  if (t < 1 || s < t) throw std::invalid_argument("K_{t,s} needs s >= t >= 1");
  Graph g(t + s);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < s; ++j) g.add_edge(i, t + j);
  }
  return g;
}

std::vector<VertexType> solve_types_fixed(std::size_t t, std::size_t s, const AlgebraicNumber& mu) {
  require_kts_mu(t, s, mu);
  const AlgebraicNumber d = mu * mu - num(t * s);
  const AlgebraicNumber mu2 = mu * mu;
  std::vector<VertexType> out;
  for (std::size_t a = 0; a <= t; ++a) {
    for (std::size_t b = 0; b <= s; ++b) {
      if (a == 0 && b == 0) continue;
      const AlgebraicNumber A = num(a), B = num(b);
      AlgebraicNumber self = d * (A + B) + A * A * num(s) + num(t) * B * B + AlgebraicNumber(2L) * A * B * mu;
      if (self != mu2 * d) continue;
      AlgebraicNumber ones = mu2 * (A + B) + mu * (A * num(s) + num(t) * B);
      if (ones != -mu * d) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

std::vector<ParametricType> solve_types_parametric(std::size_t t, const AlgebraicNumber& mu) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (mu.is_zero() || mu == AlgebraicNumber(-1L) || mu == -num(t)) {
    throw std::invalid_argument("mu must avoid -1, -t and 0");
  }
  const AlgebraicNumber T = num(t);
  const AlgebraicNumber mu2 = mu * mu, mu3 = mu2 * mu, mu4 = mu3 * mu;
  std::vector<ParametricType> rows;
  for (std::size_t a = 0; a < t; ++a) {
    const AlgebraicNumber A = num(a);
    if (mu + A == AlgebraicNumber(0L)) continue;
    ParametricType row;
    row.a = a;
    row.b = (mu3 + T * mu2 - T * A + A * A) / (mu + A);
    AlgebraicNumber top = mu4 + (AlgebraicNumber(2L) * T + AlgebraicNumber(1L)) * mu3 +
                          (AlgebraicNumber(2L) * A + T * T) * mu2 +
                          (AlgebraicNumber(2L) * A * A - A * T) * mu + A * A * T - A * T * T;
    row.s = top / ((T - A) * mu + A * T - A * A);
    row.b_integral = row.b.is_integer();
    row.s_integral = row.s.is_integer();
    row.feasible = row.b_integral && row.s_integral && row.s >= T && row.b.sign() >= 0 && row.b <= row.s &&
                   !(a == 0 && row.b.is_zero()) && mu2 != T * row.s;
    rows.push_back(row);
  }
  return rows;
}

AlgebraicNumber rho_value(std::size_t t, std::size_t s, const AlgebraicNumber& mu, const VertexType& u,
                          const VertexType& v, bool adjacent) {
  require_kts_mu(t, s, mu);
  const AlgebraicNumber d = mu * mu - num(t * s);
  AlgebraicNumber rest = num(u.a * v.a * s) + num(u.b * v.b * t) + mu * num(u.a * v.b + u.b * v.a);
  AlgebraicNumber target = adjacent ? -mu * d : AlgebraicNumber(0L);
  return (target - rest) / d;
}

std::pair<std::size_t, std::size_t> rho_range(std::size_t t, std::size_t s, const VertexType& u,
                                              const VertexType& v) {
  auto lo = [](std::size_t x, std::size_t y, std::size_t part) { return x + y > part ? x + y - part : 0; };
  return {lo(u.a, v.a, t) + lo(u.b, v.b, s), std::min(u.a, v.a) + std::min(u.b, v.b)};
}

std::optional<std::size_t> rho_of_pair(std::size_t t, std::size_t s, const AlgebraicNumber& mu, const VertexType& u,
                                       const VertexType& v, bool adjacent) {
  AlgebraicNumber rho = rho_value(t, s, mu, u, v, adjacent);
  if (!is_nonneg_integer(rho)) return std::nullopt;
  auto [lo, hi] = rho_range(t, s, u, v);
  if (rho < num(lo) || rho > num(hi)) return std::nullopt;
  return to_size(rho);
}

GrParams gr_params(std::size_t t, std::size_t s, std::size_t r) {
  if (t < 2 || s < t) throw std::invalid_argument("G(r) needs s >= t >= 2");
  GrParams p{t, s, r, 0, 0};
  const std::size_t m = t * s - 1;
  const std::size_t vnum = (r + 1) * (s - 1), wnum = (r + 1) * (t - 1);
  if (vnum % m != 0 || wnum % m != 0 || vnum / m < 1 || wnum / m < 1) {
    throw DivisibilityViolation("G(" + std::to_string(r) + ") over K_{" + std::to_string(t) + "," +
                                std::to_string(s) + "}: r is not -1 modulo " +
                                std::to_string(m / std::gcd(s - 1, t - 1)));
  }
  p.vi_size = vnum / m - 1;
  p.wi_size = wnum / m - 1;
  if (r != s + p.vi_size + s * p.wi_size || r != t + t * p.vi_size + p.wi_size) {
    throw DivisibilityViolation("G(" + std::to_string(r) + "): block sizes do not satisfy the degree equations");
  }
  return p;
}

GrGraph build_Gr(std::size_t t, std::size_t s, std::size_t r) {
  GrGraph out;
  out.params = gr_params(t, s, r);
  const AlgebraicNumber mu(-1L);
  StarContext ctx = StarContext::make(make_kts(t, s), mu, KtsTag{t, s});
  const Mask vpart = (Mask{1} << t) - 1;
  const Mask wpart = ((Mask{1} << (t + s)) - 1) & ~vpart;

  StarSolution& sol = out.solution;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t c = 0; c < out.params.vi_size; ++c) sol.x.push_back(ctx.candidate((Mask{1} << i) | wpart));
  }
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t c = 0; c < out.params.wi_size; ++c) sol.x.push_back(ctx.candidate(vpart | (Mask{1} << (t + j))));
  }
  sol.candidate_index.resize(sol.x.size());
  std::iota(sol.candidate_index.begin(), sol.candidate_index.end(), std::size_t{0});
  sol.g = assemble(ctx, sol.x);

  std::vector<std::size_t> xs(sol.x.size());
  std::iota(xs.begin(), xs.end(), t + s);
  sol.ax = induced_subgraph(sol.g, xs);
  sol.regular_degree = regular_degree(sol.g);
  sol.key = sol.g.order() <= kCanonicalMaxOrder ? canonical(sol.g).bytes : encode_graph6(sol.g);
  sol.cert = verify_star_pair(sol.g, xs, mu);
  return out;
}

Type0bFamily family_type0b(std::size_t t, const AlgebraicNumber& mu) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (mu.is_zero() || mu == AlgebraicNumber(-1L) || mu == -num(t)) {
    throw std::invalid_argument("mu must avoid -1, -t and 0");
  }
  const AlgebraicNumber T = num(t), one(1L), two(2L);
  const AlgebraicNumber mu2 = mu * mu;
  Type0bFamily f;
  f.t = t;
  f.mu = mu;
  f.b = mu2 + T * mu;
  f.r = mu * (mu2 + two * T * mu + mu + T * T) / T;
  f.s = f.r;
  f.order = mu * (mu + two * T + one) * (mu2 + two * T * mu + mu + T * T - T) / (T * T);
  f.x_size = f.s * (f.r - T) / (mu2 + T * mu);
  auto positive_int = [](const AlgebraicNumber& x) { return x.is_integer() && x.sign() > 0; };
  f.feasible = positive_int(f.b) && positive_int(f.r) && positive_int(f.order) && positive_int(f.x_size) &&
               f.s >= T && f.b <= f.s && f.order == f.x_size + T + f.s;
  f.excluded = t == 2 && mu == one;
  if (t == 1 && f.feasible) {
    AlgebraicNumber n = (mu2 + AlgebraicNumber(3L) * mu) * (mu2 + AlgebraicNumber(3L) * mu);
    AlgebraicNumber k = mu * (mu2 + AlgebraicNumber(3L) * mu + one);
    AlgebraicNumber ff = mu * (mu + one);
    if (n.is_integer() && k.is_integer() && ff.is_integer()) f.srg = SrgParams{to_size(n), to_size(k), 0, to_size(ff)};
  }
  return f;
}

AlgebraicNumber srg_gap(std::size_t k, std::size_t t, std::size_t s, std::size_t r, const AlgebraicNumber& mu) {
  if (k + t + s < r + 2) {
    throw HypothesisViolated("srg_gap needs k + t + s - 1 > r");
  }
  const AlgebraicNumber K = num(k), R = num(r);
  AlgebraicNumber lin = K * mu + R;
  return num(k + t + s) * R - R * R - K * mu * mu - lin * lin / num(s + t - 1);
}

KssAnalysis kss_analysis(std::size_t s, const AlgebraicNumber& mu, std::optional<std::size_t> r) {
  const AlgebraicNumber S = num(s);
  if (s < 2 || mu.is_zero() || mu == AlgebraicNumber(-1L) || mu == S || mu == -S) {
    throw std::invalid_argument("kss_analysis needs s >= 2 and mu not in {-1, 0, s, -s}");
  }
  KssAnalysis out;
  out.discriminant = -(S + mu) * (AlgebraicNumber(2L) * mu * mu + mu - S);
  out.mu_integral = mu.is_integer() && mu < S && mu > -S;
  if (mu.is_integer()) {
    BigInt disc = *out.discriminant.as_integer();
    if (disc >= 0) {
      BigInt root = sqrt(disc);
      BigInt base = *(S - mu).as_integer();
      if (root * root == disc && (base + root) % 2 == 0) out.roots = std::make_pair((base + root) / 2, (base - root) / 2);
    }
  }
  if (r) {
    if (*r < s) throw std::invalid_argument("kss bound needs r >= s");
    out.bound = s * (*r - s);
  }
  return out;
}

}  // namespace starcomp
