#include <algorithm>
#include <set>

#include "starcomp/errors.hpp"
#include "starcomp/star/search.hpp"

namespace starcomp {

StarCertificate verify_star_pair(const Graph& g, const std::vector<std::size_t>& x, const AlgebraicNumber& mu) {
  StarCertificate cert;
  const std::size_t n = g.order();
  std::set<std::size_t> in_x(x.begin(), x.end());
  if (in_x.size() != x.size() || (!x.empty() && *in_x.rbegin() >= n)) {
    cert.detail = "star set must list distinct vertices of G";
    return cert;
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_x.count(v)) rest.push_back(v);
  }
  const std::size_t k = x.size();

  IntMatrix a = g.adjacency();
  cert.char_poly = char_polynomial(a);
  cert.regular_degree = regular_degree(g);
  cert.multiplicity = n - field_rank(mu * FieldMatrix::identity(n) - FieldMatrix(a));

  std::optional<ScaledResolvent> res;
  try {
    res = scaled_resolvent(induced_subgraph(g, rest).adjacency(), mu);
    cert.complement_ok = true;
  } catch (const MuIsEigenvalue& e) {
    cert.detail = e.what();
  }
  if (res) {
    // B^T N B versus mval (mu I - A_X), entry by entry.
    cert.reconstruction_ok = true;
    for (std::size_t i = 0; i < k && cert.reconstruction_ok; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        AlgebraicNumber lhs(0L);
        for (std::size_t p = 0; p < rest.size(); ++p) {
          if (!g.adjacent(x[i], rest[p])) continue;
          for (std::size_t r = 0; r < rest.size(); ++r) {
            if (g.adjacent(x[j], rest[r])) lhs += res->n(p, r);
          }
        }
        AlgebraicNumber rhs = (i == j ? mu : AlgebraicNumber(0L)) - AlgebraicNumber(g.adjacent(x[i], x[j]) ? 1L : 0L);
        rhs *= res->mval;
        if (lhs != rhs) {
          cert.reconstruction_ok = false;
          cert.detail = "reconstruction fails at star-set pair (" + std::to_string(x[i]) + "," +
                        std::to_string(x[j]) + ")";
          break;
        }
      }
    }
  }
  if (cert.complement_ok && cert.reconstruction_ok && cert.multiplicity != k) {
    cert.detail = "multiplicity " + std::to_string(cert.multiplicity) + " differs from |X| = " + std::to_string(k);
  }
  cert.pass = cert.complement_ok && cert.reconstruction_ok && cert.multiplicity == k;
  return cert;
}

}  // namespace starcomp
