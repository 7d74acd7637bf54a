#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starcomp/exact/algebraic.hpp"
#include "starcomp/graph/graph.hpp"
#include "starcomp/star/context.hpp"
#include "starcomp/star/search.hpp"

namespace starcomp {

/// K_{t,s} with V = 0..t-1 and W = t..t+s-1. Requires s >= t >= 1.
Graph make_kts(std::size_t t, std::size_t s);

/// Every type (a,b) != (0,0) satisfying the self-pairing and non-main
/// equations exactly. Requires mu != 0 and mu^2 != ts.
std::vector<VertexType> solve_types_fixed(std::size_t t, std::size_t s, const AlgebraicNumber& mu);

struct ParametricType {
  std::size_t a = 0;
  AlgebraicNumber b;  // (mu^3 + t mu^2 - t a + a^2) / (mu + a)
  AlgebraicNumber s;  // the part size forced by a and b
  bool b_integral = false;
  bool s_integral = false;
  bool feasible = false;  // b, s integers with s >= t, 0 <= b <= s, (a, b) != (0, 0), mu^2 != ts
};

/// One row per a in 0..t-1 with a != -mu. Requires mu not in {-1, -t, 0}.
std::vector<ParametricType> solve_types_parametric(std::size_t t, const AlgebraicNumber& mu);

/// The rho solving (mu^2 - ts) rho + acs + bdt + mu (ad + bc) = -mu (mu^2 - ts) a_uv.
AlgebraicNumber rho_value(std::size_t t, std::size_t s, const AlgebraicNumber& mu, const VertexType& u,
                          const VertexType& v, bool adjacent);

/// Smallest and largest possible |N_H(u) ∩ N_H(v)| for the two types.
std::pair<std::size_t, std::size_t> rho_range(std::size_t t, std::size_t s, const VertexType& u, const VertexType& v);

/// rho_value when it is an integer inside rho_range, absent otherwise.
std::optional<std::size_t> rho_of_pair(std::size_t t, std::size_t s, const AlgebraicNumber& mu, const VertexType& u,
                                       const VertexType& v, bool adjacent);

struct GrParams {
  std::size_t t = 0, s = 0, r = 0;
  std::size_t vi_size = 0;  // (r+1)(s-1)/(ts-1) - 1
  std::size_t wi_size = 0;  // (r+1)(t-1)/(ts-1) - 1
};

/// Sizes of G(r); DivisibilityViolation unless both are nonnegative
/// integers satisfying the degree equations at v_1 and w_1.
GrParams gr_params(std::size_t t, std::size_t s, std::size_t r);

struct GrGraph {
  GrParams params;
  StarSolution solution;  // certified for mu = -1
};

/// K_{t,s} plus cliques V_i on v_i (type (1,s)) and W_j on w_j (type
/// (t,1)), every V_i joined to every W_j. Requires s >= t >= 2.
GrGraph build_Gr(std::size_t t, std::size_t s, std::size_t r);

struct Type0bFamily {
  std::size_t t = 0;
  AlgebraicNumber mu;
  AlgebraicNumber b;      // mu^2 + t mu
  AlgebraicNumber s;      // = r
  AlgebraicNumber r;      // mu (mu^2 + 2t mu + mu + t^2) / t
  AlgebraicNumber order;  // mu (mu + 2t + 1)(mu^2 + 2t mu + mu + t^2 - t) / t^2
  AlgebraicNumber x_size; // s (r - t) / (mu^2 + t mu)
  bool feasible = false;
  bool excluded = false;  // t = 2, mu = 1: ruled out by the earlier t <= 2 classification
  std::optional<SrgParams> srg;  // t = 1
};

/// Parameters of the regular family whose star-set vertices all have type (0,b).
Type0bFamily family_type0b(std::size_t t, const AlgebraicNumber& mu);

/// (k+t+s) r - r^2 - k mu^2 - (k mu + r)^2 / (s+t-1); zero exactly for
/// strongly regular graphs. HypothesisViolated unless k + t + s - 1 > r.
AlgebraicNumber srg_gap(std::size_t k, std::size_t t, std::size_t s, std::size_t r, const AlgebraicNumber& mu);

struct KssAnalysis {
  AlgebraicNumber discriminant;                  // -(s + mu)(2 mu^2 + mu - s)
  std::optional<std::pair<BigInt, BigInt>> roots; // x1 >= x2, present when integral
  bool mu_integral = false;                      // mu in Z and |mu| < s
  std::optional<std::size_t> bound;              // s (r - s)
};

/// Types and multiplicity bound for K_{s,s}. Requires s >= 2, mu not in {-1, 0, s, -s}.
KssAnalysis kss_analysis(std::size_t s, const AlgebraicNumber& mu, std::optional<std::size_t> r = std::nullopt);

}  // namespace starcomp
