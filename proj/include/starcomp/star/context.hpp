#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "starcomp/exact/algebraic.hpp"
#include "starcomp/exact/matrix.hpp"
#include "starcomp/graph/graph.hpp"

namespace starcomp {

/// A subset of V(H) as a bit mask; bit i is vertex i of H.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxComplementOrder = 64;
inline constexpr std::size_t kBruteForceMaxOrder = 30;

/// H is K_{t,s} with part V = 0..t-1 and part W = t..t+s-1.
struct KtsTag {
  std::size_t t = 0;
  std::size_t s = 0;
  friend bool operator==(const KtsTag&, const KtsTag&) = default;
};

/// Neighbour counts (a, b) of a star-set vertex in the parts V and W.
struct VertexType {
  std::size_t a = 0;
  std::size_t b = 0;
  friend auto operator<=>(const VertexType&, const VertexType&) = default;
};

struct CandidateVector {
  Mask bits = 0;
  AlgebraicNumber self_pair;   // b^T N b
  AlgebraicNumber ones_pair;   // b^T N j
  std::optional<VertexType> type;
};

enum class CompatLabel { Adjacent, NonAdjacent, Incompatible };

const char* to_string(CompatLabel label);

/// Integer image of N: D*N = P + theta*Q with int64 entries. Absent from a
/// context when the entries are too large for overflow-free pairing sums.
struct IntegralForm {
  BigInt denominator;
  std::vector<std::int64_t> p;  // row-major q x q
  std::vector<std::int64_t> q;
};

/// Everything the search needs about (H, mu): the scaled resolvent
/// N = m(mu) (mu I - C)^{-1} and mval = m(mu).
class StarContext {
 public:
  /// Throws MuIsEigenvalue, BadTag, or TooLarge when H has more than 64 vertices.
  static StarContext make(const Graph& h, const AlgebraicNumber& mu, std::optional<KtsTag> tag = std::nullopt);

  const Graph& h() const { return h_; }
  std::size_t q() const { return h_.order(); }
  const AlgebraicNumber& mu() const { return mu_; }
  const FieldMatrix& n() const { return n_; }
  const AlgebraicNumber& mval() const { return mval_; }
  /// N j, the pairing of each vertex with the all-ones vector.
  const std::vector<AlgebraicNumber>& ones_pairing() const { return ones_; }
  const std::optional<KtsTag>& tag() const { return tag_; }
  const std::optional<IntegralForm>& integral() const { return integral_; }
  /// True when the closed-form K_{t,s} resolvent was used.
  bool fast_path() const { return fast_path_; }

  Mask all_vertices() const { return q() == 64 ? ~Mask{0} : (Mask{1} << q()) - 1; }
  std::optional<VertexType> type_of(Mask bits) const;

  /// x^T N y
  AlgebraicNumber pairing(Mask x, Mask y) const;
  /// Same for explicit 0/1 vectors of length q.
  AlgebraicNumber pairing(const std::vector<int>& x, const std::vector<int>& y) const;

  CandidateVector candidate(Mask bits) const;

  /// mu is -1 or 0: equal H-neighbourhoods may repeat inside X.
  bool repeats_allowed() const;

 private:
  StarContext() = default;

  Graph h_;
  AlgebraicNumber mu_;
  FieldMatrix n_;
  AlgebraicNumber mval_;
  std::vector<AlgebraicNumber> ones_;
  std::optional<KtsTag> tag_;
  std::optional<IntegralForm> integral_;
  bool fast_path_ = false;
};

/// C^2 + mu C + (mu^2 - ts) I and mval = mu (mu^2 - ts) for H = K_{t,s}.
ScaledResolvent kts_resolvent(const KtsTag& tag, const AlgebraicNumber& mu);

/// All b with b^T N b = mval mu (and b^T N j = -mval when non_main).
/// Tagged contexts go type by type; others scan every mask (q <= 30,
/// TooLarge otherwise). Ordered by type, then by mask value.
std::vector<CandidateVector> enumerate_candidates(const StarContext& ctx, bool non_main);

/// The 2^q scan regardless of tag; the oracle for the typed path.
std::vector<CandidateVector> enumerate_candidates_brute_force(const StarContext& ctx, bool non_main);

/// Throws DuplicateNeighbourhood for equal masks unless mu is -1 or 0.
CompatLabel classify_pair(const StarContext& ctx, const CandidateVector& u, const CandidateVector& v);

/// The closed form of u^T N v for K_{t,s}:
/// (mu^2 - ts) rho + acs + bdt + mu (ad + bc).
AlgebraicNumber kts_pairing(const KtsTag& tag, const AlgebraicNumber& mu, const VertexType& u, const VertexType& v,
                            std::size_t rho);

}  // namespace starcomp
