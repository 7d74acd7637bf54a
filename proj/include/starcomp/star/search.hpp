#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starcomp/exact/polynomial.hpp"
#include "starcomp/graph/graph.hpp"
#include "starcomp/star/context.hpp"

namespace starcomp {

inline constexpr std::size_t kMaxCandidates = 8192;

struct StarCertificate {
  bool complement_ok = false;      // mu is not an eigenvalue of G - X
  std::size_t multiplicity = 0;    // n - rank(mu I - A)
  bool reconstruction_ok = false;  // mval (mu I - A_X) = B^T N B
  std::optional<std::size_t> regular_degree;
  IntPolynomial char_poly;
  bool pass = false;
  std::string detail;
};

/// Checks that X is a star set for mu in G. Never throws on a failed check.
StarCertificate verify_star_pair(const Graph& g, const std::vector<std::size_t>& x, const AlgebraicNumber& mu);

struct StarSolution {
  std::vector<CandidateVector> x;            // in candidate order
  std::vector<std::size_t> candidate_index;  // positions in the candidate list
  Graph ax;                                  // G[X]
  Graph g;                                   // H on 0..q-1, then X
  std::optional<std::size_t> regular_degree;
  std::string key;                           // canonical graph6, or graph6 when deduped by label
  StarCertificate cert;
};

/// Builds G from H and a list of H-neighbourhoods, joining two X-vertices
/// when their pairing is -mval.
Graph assemble(const StarContext& ctx, const std::vector<CandidateVector>& x);

struct SearchOptions {
  enum class Mode { Maximal, Regular, Sweep };
  Mode mode = Mode::Maximal;
  std::size_t r = 0;                          // Mode::Regular only
  std::optional<std::size_t> max_x;
  std::optional<std::size_t> max_solutions;   // truncates the sorted output
  bool non_main = false;                      // Mode::Maximal only
  bool symmetry = true;                       // K_{t,s} automorphisms on the first pick
  unsigned jobs = 1;
  bool certify = true;
};

struct SearchResult {
  std::vector<StarSolution> solutions;
  std::string deduped_by;  // "canonical" or "labeled"
  std::size_t raw_count = 0;
  std::size_t candidate_count = 0;
};

/// Star sets for (H, mu). Regular modes return exact solutions of the
/// degree equations; Maximal mode returns maximal compatible sets.
/// Output is deduped up to isomorphism and ordered by (order, key).
/// Throws Unbounded for mu in {-1, 0} without max_x, TooLarge above
/// kMaxCandidates candidates.
SearchResult search_star_sets(const StarContext& ctx, const SearchOptions& opts);

/// 1/2 (q + 1)(q - 2), the bound on |X| when mu is not -1 or 0 (q >= 3).
std::size_t star_set_cap(std::size_t q);

}  // namespace starcomp
